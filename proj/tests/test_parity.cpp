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
#include "tcrp/parity.hpp"

#include <doctest.h>

using namespace tcrp;

TEST_CASE("binom_parity")
{
    CHECK(binom_parity(7, 2) == Parity::odd);
    CHECK(binom_parity(123, 0) == Parity::odd);
    // C(10,5) = 252
    CHECK(binom_parity(10, 5) == Parity::even);
    CHECK(binom_parity(3, 5) == Parity::even);

    const auto c = oracle::pascal(64);
    for (int n = 0; n <= 64; ++n)
        for (int k = 0; k <= n; ++k)
            REQUIRE(binom_is_odd(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k)) ==
                    (c[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] % 2 == 1));
}

TEST_CASE("trailing_ones")
{
    for (std::uint64_t m = 2; m <= 40; m += 2)
        CHECK(trailing_ones(m) == 0);
    CHECK(trailing_ones(7) == 3);
    CHECK(trailing_ones(11) == 2);
    CHECK_THROWS_AS(trailing_ones(0), std::invalid_argument);
}

TEST_CASE("z_of")
{
    CHECK(z_of(1) == 1);
    CHECK(z_of(4) == 3);
    CHECK(z_of(8) == 4);
    for (unsigned t = 1; t < 63; ++t) {
        CHECK(z_of(std::uint64_t{1} << t) == t + 1);
        CHECK(z_of((std::uint64_t{1} << t) - 1) == t);
    }
}

TEST_CASE("sigma_of")
{
    CHECK(sigma_of(5) == 3u);
    CHECK(!sigma_of(7));
    CHECK(!sigma_of(1));
    for (std::uint64_t m = 2; m <= 40; m += 2)
        CHECK(sigma_of(m) == m + 1);
}

TEST_CASE("profile invariants")
{
    for (std::uint64_t m = 1; m <= 5000; ++m) {
        const TwoAdicProfile p = two_adic_profile(m);
        const std::uint64_t two_e = std::uint64_t{1} << p.e;
        REQUIRE(m % (2 * two_e) == two_e - 1);
        REQUIRE((std::uint64_t{1} << p.z) <= 2 * m);
        REQUIRE(2 * m < (std::uint64_t{1} << (p.z + 1)));
        if (p.sigma) {
            REQUIRE(*p.sigma * two_e == m + 1);
            REQUIRE(*p.sigma >= 3);
            // The parity step behind the explicit witness.
            REQUIRE(binom_is_odd(m + two_e, two_e));
        } else {
            REQUIRE(m == two_e - 1);
        }
    }
}
