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

// The ideal of s-th zero-divisors in A(m, s): the kernel of the diagonal
// restriction x_i -> x, and its degree-wise comparison with the ideal
// generated by x_i + x_s.

#include "tcrp/ring.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tcrp {

/// All basis monomials of one total degree, by increasing rank.
struct DegreeSlice {
    RingSpec spec;
    int degree = 0;
    std::vector<std::uint64_t> basis;

    std::size_t size() const { return basis.size(); }
    /// Column of the monomial with rank r; throws if r is not in the slice.
    std::size_t index_of(std::uint64_t r) const;
    /// Slice coordinates -> ring element.
    Poly to_poly(const BitVec& coords) const;
    /// Ring element -> slice coordinates; throws if p has terms of another degree.
    BitVec coordinates(const Poly& p) const;
};

DegreeSlice degree_slice(const RingSpec& spec, int degree);

/// Subspace of a slice, stored as its reduced row-echelon basis.
struct SubspaceBasis {
    DegreeSlice slice;
    std::vector<BitVec> rows;

    std::size_t dimension() const { return rows.size(); }
    bool contains(const Poly& p) const;
    std::vector<Poly> elements() const;

    /// Identical echelon forms, which is equality of subspaces.
    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b)
    {
        return a.slice.spec == b.slice.spec && a.slice.degree == b.slice.degree && a.rows == b.rows;
    }
};

/// x_i + x_s, 1 <= i <= s-1.
Poly generator(const RingSpec& spec, int i);

bool is_zero_divisor(const Poly& p);

/// Homogeneous zero-divisors of the given degree: the nullspace of the
/// substitution matrix from the slice to F2[x]/(x^(m+1)).
SubspaceBasis kernel_basis(const RingSpec& spec, int degree);

/// Span of (x_i + x_s) * M over i < s and monomials M of degree - 1.
SubspaceBasis ideal_degree_basis(const RingSpec& spec, int degree);

struct DegreeCheck {
    int degree = 0;
    std::size_t dim_kernel = 0;
    std::size_t dim_ideal = 0;
    bool pass = false;
    /// On failure, an element of one subspace that is not in the other.
    std::optional<Poly> mismatch;
};

/// Compares kernel and ideal degree by degree for degrees 0..max_degree
/// (max_degree < 0 means s*m).
std::vector<DegreeCheck> verify_generators_lemma(const RingSpec& spec, int max_degree = -1,
                                                 std::uint64_t limit = kDefaultBasisLimit);

/// Whether p has an even number of terms. p must be homogeneous of degree <= m.
bool even_summands_check(const Poly& p);

} // namespace tcrp
