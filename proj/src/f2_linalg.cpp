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

#include "tcrp/f2_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcrp {

EchelonForm::EchelonForm(std::size_t ncols) : ncols_(ncols), pivot_row_(ncols, -1) {}

void EchelonForm::reduce(BitVec& v) const
{
    if (v.size() != ncols_)
        throw std::invalid_argument("EchelonForm: vector length mismatch");
    for (std::size_t c = v.find_first(); c != BitVec::npos; c = v.find_next(c + 1)) {
        const int r = pivot_row_[c];
        if (r >= 0)
            v ^= rows_[static_cast<std::size_t>(r)];
    }
}

bool EchelonForm::contains(BitVec v) const
{
    reduce(v);
    return v.none();
}

bool EchelonForm::insert(BitVec v)
{
    reduce(v);
    const std::size_t pivot = v.find_first();
    if (pivot == BitVec::npos)
        return false;
    pivot_row_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(v));
    return true;
}

std::vector<BitVec> EchelonForm::reduced_rows() const
{
    std::vector<BitVec> rows = rows_;
    std::sort(rows.begin(), rows.end(),
              [](const BitVec& a, const BitVec& b) { return a.find_first() < b.find_first(); });
    for (std::size_t i = rows.size(); i-- > 0;) {
        const std::size_t p = rows[i].find_first();
        for (std::size_t k = 0; k < i; ++k)
            if (rows[k].test(p))
                rows[k] ^= rows[i];
    }
    return rows;
}

std::vector<BitVec> nullspace(const std::vector<BitVec>& rows, std::size_t ncols)
{
    EchelonForm ef(ncols);
    for (const auto& r : rows)
        ef.insert(r);
    const std::vector<BitVec> rref = ef.reduced_rows();

    std::vector<bool> is_pivot(ncols, false);
    for (const auto& r : rref)
        is_pivot[r.find_first()] = true;

    EchelonForm kernel(ncols);
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f])
            continue;
        BitVec v(ncols);
        v.set(f);
        for (const auto& r : rref)
            if (r.test(f))
                v.set(r.find_first());
        kernel.insert(std::move(v));
    }
    return kernel.reduced_rows();
}

} // namespace tcrp
