/*
   Copyright 2026 The tcrp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include "tcrp/bitvec.hpp"

#include <cstddef>
#include <vector>

namespace tcrp {

/// Incremental Gaussian elimination over F2. A row's pivot is its lowest set
/// column; every stored row is free of the pivots below it.
class EchelonForm {
public:
    explicit EchelonForm(std::size_t ncols);

    std::size_t columns() const { return ncols_; }
    std::size_t rank() const { return rows_.size(); }

    /// Reduces v against the stored rows in place.
    void reduce(BitVec& v) const;
    bool contains(BitVec v) const;
    /// Adds v to the span. Returns false if v was already in it.
    bool insert(BitVec v);

    /// The unique reduced row-echelon basis, pivots strictly increasing.
    std::vector<BitVec> reduced_rows() const;

private:
    std::size_t ncols_;
    std::vector<BitVec> rows_;
    std::vector<int> pivot_row_;
};

/// Reduced row-echelon basis of { v : rows * v = 0 }, v of length ncols.
std::vector<BitVec> nullspace(const std::vector<BitVec>& rows, std::size_t ncols);

} // namespace tcrp
