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

// 2-adic helpers on machine integers. Arguments are capped at 2^63.

#include <cstdint>
#include <optional>

namespace tcrp {

enum class Parity { even, odd };

/// Parity of C(n, k) by Lucas' theorem. C(n, k) = 0 (even) when k > n.
Parity binom_parity(std::uint64_t n, std::uint64_t k);

inline bool binom_is_odd(std::uint64_t n, std::uint64_t k)
{
    return binom_parity(n, k) == Parity::odd;
}

/// Number of low-order one bits of m; the largest e with m = 2^e - 1 mod 2^(e+1).
unsigned trailing_ones(std::uint64_t m);

/// floor(log2(2m)).
unsigned z_of(std::uint64_t m);

/// (m+1)/2^e with e = trailing_ones(m), absent when m = 2^e - 1.
std::optional<std::uint64_t> sigma_of(std::uint64_t m);

struct TwoAdicProfile {
    std::uint64_t m = 0;
    unsigned e = 0;
    unsigned z = 0;
    std::optional<std::uint64_t> sigma;
};

TwoAdicProfile two_adic_profile(std::uint64_t m);

} // namespace tcrp
