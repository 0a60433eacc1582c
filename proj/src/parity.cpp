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

#include "tcrp/parity.hpp"

#include <bit>
#include <stdexcept>

namespace tcrp {

namespace {

constexpr std::uint64_t kCap = std::uint64_t{1} << 63;

void check_positive(std::uint64_t m)
{
    if (m == 0 || m > kCap)
        throw std::invalid_argument("m must lie in [1, 2^63]");
}

} // namespace

Parity binom_parity(std::uint64_t n, std::uint64_t k)
{
    if (n > kCap)
        throw std::invalid_argument("binom_parity: n exceeds 2^63");
    if (k > n)
        return Parity::even;
    return (k & ~n) == 0 ? Parity::odd : Parity::even;
}

unsigned trailing_ones(std::uint64_t m)
{
    check_positive(m);
    return static_cast<unsigned>(std::countr_one(m));
}

unsigned z_of(std::uint64_t m)
{
    check_positive(m);
    // bit_width(2m) - 1 == bit_width(m)
    return static_cast<unsigned>(std::bit_width(m));
}

std::optional<std::uint64_t> sigma_of(std::uint64_t m)
{
    const unsigned e = trailing_ones(m);
    // m = 2^e - 1 exactly when every bit of m is a trailing one.
    if (std::bit_width(m) == e)
        return std::nullopt;
    return (m >> e) + 1;
}

TwoAdicProfile two_adic_profile(std::uint64_t m)
{
    return {m, trailing_ones(m), z_of(m), sigma_of(m)};
}

} // namespace tcrp
