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

#include "oracles.hpp"
#include "tcrp/f2_linalg.hpp"
#include "tcrp/zero_divisors.hpp"

#include <doctest.h>

#include <bit>
#include <random>

using namespace tcrp;

namespace {

Poly P(const RingSpec& spec, const char* text) { return parse_poly(spec, text); }

} // namespace

TEST_CASE("generator")
{
    CHECK(generator({1, 2}, 1) == P({1, 2}, "x1 + x2"));
    CHECK(generator({2, 3}, 2) == P({2, 3}, "x2 + x3"));
    for (int i = 1; i < 5; ++i)
        CHECK(diagonal_restriction(generator({3, 5}, i)).is_zero());
    CHECK_THROWS_AS(generator({2, 3}, 3), std::invalid_argument);
    CHECK_THROWS_AS(generator({2, 3}, 0), std::invalid_argument);
}

TEST_CASE("is_zero_divisor")
{
    CHECK(is_zero_divisor(P({4, 3}, "x1 + x3")));
    CHECK(!is_zero_divisor(P({4, 3}, "x1")));
    const RingSpec spec{2, 3};
    for (std::uint64_t r = 0; r < spec.basis_size(); ++r)
        if (rank_degree(spec, r) > spec.m) {
            Poly p(spec);
            p.flip(r);
            CHECK(is_zero_divisor(p));
        }
}

TEST_CASE("degree slices")
{
    const RingSpec spec{2, 3};
    std::size_t total = 0;
    for (int d = 0; d <= spec.top_degree(); ++d) {
        const DegreeSlice slice = degree_slice(spec, d);
        CHECK(slice.size() == oracle::monomials_of_degree(spec.m, spec.s, d).size());
        CHECK(std::is_sorted(slice.basis.begin(), slice.basis.end()));
        total += slice.size();
    }
    CHECK(total == spec.basis_size());
    CHECK_THROWS_AS(degree_slice(spec, 7), std::invalid_argument);
}

TEST_CASE("nullspace")
{
    std::mt19937_64 rng(4);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + trial % 7, cols = 3 + trial % 11;
        std::vector<BitVec> a(rows, BitVec(cols));
        for (auto& r : a)
            for (std::size_t c = 0; c < cols; ++c)
                if (coin(rng))
                    r.set(c);
        EchelonForm ef(cols);
        for (const auto& r : a)
            ef.insert(r);
        const auto ker = nullspace(a, cols);
        CHECK(ker.size() + ef.rank() == cols);
        for (const auto& v : ker)
            for (const auto& r : a)
                CHECK((r & v).count() % 2 == 0);
        for (std::size_t i = 1; i < ker.size(); ++i)
            CHECK(ker[i - 1].find_first() < ker[i].find_first());
    }
}

TEST_CASE("kernel_basis")
{
    const SubspaceBasis k1 = kernel_basis({1, 2}, 1);
    REQUIRE(k1.dimension() == 1);
    CHECK(k1.elements()[0] == P({1, 2}, "x1 + x2"));
    CHECK(kernel_basis({3, 3}, 0).dimension() == 0);
    const SubspaceBasis k2 = kernel_basis({1, 2}, 2);
    REQUIRE(k2.dimension() == 1);
    CHECK(k2.elements()[0] == P({1, 2}, "x1*x2"));
}

TEST_CASE("kernel dimension against subset enumeration")
{
    for (const RingSpec spec : {RingSpec{1, 4}, RingSpec{2, 3}, RingSpec{3, 3}, RingSpec{2, 4}, RingSpec{4, 2}})
        for (int d = 0; d <= spec.top_degree(); ++d) {
            if (oracle::monomials_of_degree(spec.m, spec.s, d).size() > 20)
                continue;
            const std::uint64_t count = oracle::count_zero_divisors(spec.m, spec.s, d);
            REQUIRE(std::has_single_bit(count));
            CHECK(kernel_basis(spec, d).dimension() == static_cast<std::size_t>(std::countr_zero(count)));
        }
}

TEST_CASE("ideal_degree_basis")
{
    const SubspaceBasis i2 = ideal_degree_basis({1, 2}, 2);
    REQUIRE(i2.dimension() == 1);
    CHECK(i2.elements()[0] == P({1, 2}, "x1*x2"));
    CHECK(ideal_degree_basis({3, 5}, 1).dimension() == 4);
    const SubspaceBasis top = ideal_degree_basis({2, 2}, 4);
    CHECK(top.dimension() == 1);
    CHECK(top.elements()[0] == P({2, 2}, "x1^2*x2^2"));
}

TEST_CASE("ideal spanning set matches ring multiplication")
{
    const RingSpec spec{2, 3};
    for (int d = 1; d <= spec.top_degree(); ++d) {
        const SubspaceBasis ideal = ideal_degree_basis(spec, d);
        for (const auto& e : oracle::monomials_of_degree(spec.m, spec.s, d - 1))
            for (int i = 1; i < spec.s; ++i)
                CHECK(ideal.contains(mul(generator(spec, i), Poly::monomial(spec, Monomial{e}))));
    }
}

TEST_CASE("generators lemma as an identity")
{
    for (const RingSpec spec : {RingSpec{1, 2}, RingSpec{2, 3}, RingSpec{1, 7}, RingSpec{3, 4}, RingSpec{4, 3}, RingSpec{6, 2}}) {
        CAPTURE(spec.m);
        CAPTURE(spec.s);
        const auto checks = verify_generators_lemma(spec);
        REQUIRE(checks.size() == static_cast<std::size_t>(spec.top_degree()) + 1);
        CHECK(checks[0].dim_kernel == 0);
        CHECK(checks[0].dim_ideal == 0);
        for (const auto& c : checks) {
            CHECK(c.pass);
            CHECK(!c.mismatch);
            const std::size_t slice = degree_slice(spec, c.degree).size();
            CHECK(c.dim_kernel == slice - (c.degree <= spec.m ? 1 : 0));
        }
        for (int d = 0; d <= spec.top_degree(); ++d)
            for (const auto& p : kernel_basis(spec, d).elements())
                CHECK(is_zero_divisor(p));
    }
    CHECK(verify_generators_lemma({2, 3}, 2).size() == 3);
    CHECK_THROWS_AS(verify_generators_lemma({3, 4}, -1, 100), std::invalid_argument);
}

TEST_CASE("even_summands_check")
{
    CHECK(even_summands_check(P({3, 2}, "x1 + x2")));
    CHECK(!even_summands_check(P({3, 2}, "x1")));
    CHECK_THROWS_AS(even_summands_check(P({3, 2}, "x1 + x1*x2")), std::invalid_argument);
    CHECK_THROWS_AS(even_summands_check(P({1, 2}, "x1*x2")), std::invalid_argument);
    for (const RingSpec spec : {RingSpec{3, 3}, RingSpec{2, 4}})
        for (int d = 0; d <= spec.m; ++d)
            for (const auto& p : kernel_basis(spec, d).elements())
                CHECK(even_summands_check(p));
}
