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

#include "tcrp/zero_divisors.hpp"

#include "tcrp/f2_linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcrp {

std::size_t DegreeSlice::index_of(std::uint64_t r) const
{
    const auto it = std::lower_bound(basis.begin(), basis.end(), r);
    if (it == basis.end() || *it != r)
        throw std::invalid_argument("DegreeSlice: monomial not in this degree");
    return static_cast<std::size_t>(it - basis.begin());
}

Poly DegreeSlice::to_poly(const BitVec& coords) const
{
    Poly p(spec);
    coords.for_each_set([&](std::size_t c) { p.flip(basis[c]); });
    return p;
}

BitVec DegreeSlice::coordinates(const Poly& p) const
{
    BitVec v(basis.size());
    p.bits().for_each_set([&](std::size_t r) { v.set(index_of(r)); });
    return v;
}

DegreeSlice degree_slice(const RingSpec& spec, int degree)
{
    spec.validate(kHardBasisLimit);
    if (degree < 0 || degree > spec.top_degree())
        throw std::invalid_argument("degree_slice: degree out of range [0, s*m]");
    DegreeSlice slice{spec, degree, {}};
    // Odometer over exponent vectors keeps the digit sum incrementally.
    std::vector<int> digits(static_cast<std::size_t>(spec.s), 0);
    int sum = 0;
    const std::uint64_t n = spec.basis_size();
    for (std::uint64_t r = 0; r < n; ++r) {
        if (sum == degree)
            slice.basis.push_back(r);
        for (auto& d : digits) {
            if (d < spec.m) {
                ++d;
                ++sum;
                break;
            }
            sum -= d;
            d = 0;
        }
    }
    return slice;
}

bool SubspaceBasis::contains(const Poly& p) const
{
    EchelonForm ef(slice.size());
    for (const auto& r : rows)
        ef.insert(r);
    return ef.contains(slice.coordinates(p));
}

std::vector<Poly> SubspaceBasis::elements() const
{
    std::vector<Poly> out;
    out.reserve(rows.size());
    for (const auto& r : rows)
        out.push_back(slice.to_poly(r));
    return out;
}

Poly generator(const RingSpec& spec, int i)
{
    if (i < 1 || i > spec.s - 1)
        throw std::invalid_argument("generator: index must lie in [1, s-1]");
    return Poly::variable(spec, i) + Poly::variable(spec, spec.s);
}

bool is_zero_divisor(const Poly& p)
{
    return diagonal_restriction(p).is_zero();
}

SubspaceBasis kernel_basis(const RingSpec& spec, int degree)
{
    DegreeSlice slice = degree_slice(spec, degree);
    // Row t of the substitution matrix is the coefficient of x^t in the image.
    std::vector<BitVec> matrix(static_cast<std::size_t>(spec.m) + 1, BitVec(slice.size()));
    for (std::size_t c = 0; c < slice.size(); ++c)
        if (degree <= spec.m)
            matrix[static_cast<std::size_t>(degree)].set(c);
    std::vector<BitVec> rows = nullspace(matrix, slice.size());
    return {std::move(slice), std::move(rows)};
}

SubspaceBasis ideal_degree_basis(const RingSpec& spec, int degree)
{
    DegreeSlice slice = degree_slice(spec, degree);
    EchelonForm ef(slice.size());
    if (degree >= 1) {
        const DegreeSlice lower = degree_slice(spec, degree - 1);
        const std::uint64_t stride_s = spec.stride(spec.s);
        for (int i = 1; i < spec.s; ++i) {
            const std::uint64_t stride_i = spec.stride(i);
            for (std::uint64_t r : lower.basis) {
                const Monomial mono = unrank(spec, r);
                BitVec v(slice.size());
                if (mono.exponents[static_cast<std::size_t>(i - 1)] < spec.m)
                    v.flip(slice.index_of(r + stride_i));
                if (mono.exponents.back() < spec.m)
                    v.flip(slice.index_of(r + stride_s));
                ef.insert(std::move(v));
            }
        }
    }
    return {std::move(slice), ef.reduced_rows()};
}

namespace {

std::optional<Poly> find_outside(const SubspaceBasis& from, const SubspaceBasis& other)
{
    EchelonForm ef(other.slice.size());
    for (const auto& r : other.rows)
        ef.insert(r);
    for (const auto& r : from.rows)
        if (!ef.contains(r))
            return from.slice.to_poly(r);
    return std::nullopt;
}

} // namespace

std::vector<DegreeCheck> verify_generators_lemma(const RingSpec& spec, int max_degree, std::uint64_t limit)
{
    spec.validate(limit);
    if (max_degree < 0 || max_degree > spec.top_degree())
        max_degree = spec.top_degree();
    std::vector<DegreeCheck> out;
    for (int d = 0; d <= max_degree; ++d) {
        const SubspaceBasis kernel = kernel_basis(spec, d);
        const SubspaceBasis ideal = ideal_degree_basis(spec, d);
        DegreeCheck check{d, kernel.dimension(), ideal.dimension(), kernel == ideal, std::nullopt};
        if (!check.pass) {
            check.mismatch = find_outside(kernel, ideal);
            if (!check.mismatch)
                check.mismatch = find_outside(ideal, kernel);
        }
        out.push_back(std::move(check));
    }
    return out;
}

bool even_summands_check(const Poly& p)
{
    if (p.is_zero())
        return true;
    const int deg = p.homogeneous_degree();
    if (deg < 0)
        throw std::invalid_argument("even_summands_check: input is not homogeneous");
    if (deg > p.spec().m)
        throw std::invalid_argument("even_summands_check: degree exceeds m");
    return p.term_count() % 2 == 0;
}

} // namespace tcrp
