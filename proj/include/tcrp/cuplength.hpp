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

// Zero-divisor cup-length of RP^m in s factors.
//
// The zero-divisor ideal is generated by y_i = x_i + x_s (i < s), so the longest
// nonzero product of zero-divisors has the length of the longest nonzero word
// y_1^b_1 ... y_{s-1}^b_{s-1}. Such a word expands as
//
//   sum over j of  prod_i C(b_i, j_i)  x_1^j_1 ... x_{s-1}^j_{s-1} x_s^(sum_i b_i - j_i)
//
// and distinct j give distinct basis monomials, so the word is nonzero iff some j
// has every C(b_i, j_i) odd, every j_i <= m and sum_i (b_i - j_i) <= m.

#include "tcrp/ring.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tcrp {

struct GeneratorWord {
    RingSpec spec;
    /// b[i-1] is the multiplicity of x_i + x_s.
    std::vector<int> b;

    int length() const;
    /// Throws unless b has s-1 entries, each in [0, 2m], with sum <= s*m.
    void validate() const;
};

/// (x_i + x_j)^exponent.
struct Factor {
    int i = 0;
    int j = 0;
    int exponent = 0;
    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Witness {
    RingSpec spec;
    std::vector<Factor> factors;
    /// Rank of a basis monomial occurring in the expanded product.
    std::uint64_t certificate = 0;

    int length() const;
    Monomial certificate_monomial() const { return unrank(spec, certificate); }
};

enum class ZclMethod {
    exact,
    paper_lower_bound, ///< an explicit construction, verified
    floor_lower_bound, ///< the (s-1)m bound, verified
};

std::string to_string(ZclMethod method);
ZclMethod zcl_method_from_string(const std::string& text);

struct ZclResult {
    int m = 0;
    int s = 0;
    int value = 0;
    ZclMethod method = ZclMethod::exact;
    Witness witness;

    /// G(m, s) = sm - value. Exact when method is exact, an upper bound otherwise.
    int g() const { return s * m - value; }
};

struct SearchLimits {
    std::uint64_t basis_limit = kDefaultBasisLimit;
    /// Search nodes visited before giving up with Undetermined.
    std::uint64_t max_nodes = 200'000'000;
};

/// Certificate monomial when the word is nonzero, nullopt when it vanishes.
std::optional<Monomial> word_nonzero(const GeneratorWord& word);

/// Multiplies the factors in the ring and checks the certificate bit. Does not use
/// the combinatorial criterion of word_nonzero.
bool verify_witness(const Witness& w);

/// Product of the witness factors in the ring.
Poly witness_product(const Witness& w);

/// Exact zcl by exhaustive search over sorted generator words, descending from s*m.
/// Throws Undetermined when a limit is hit.
ZclResult zcl_exact(int m, int s, const SearchLimits& limits = {});

/// Best explicit construction available for (m, s), verified in the ring.
/// nullopt when m is not of the form 2^e - 1 and s < (m+1)/2^e.
std::optional<Witness> paper_witness(int m, int s, std::uint64_t basis_limit = kDefaultBasisLimit);

/// (x_1 + x_2)^m * prod_{t=3..s} (x_1 + x_t)^m, of length (s-1)m, verified.
Witness floor_witness(int m, int s, std::uint64_t basis_limit = kDefaultBasisLimit);

/// The witness over s+1 factors obtained by multiplying with (x_1 + x_{s+1})^m.
/// The certificate gains x_{s+1}^m.
Witness extend_witness(const Witness& w, std::uint64_t basis_limit = kDefaultBasisLimit);

struct GValue {
    int value = 0;
    /// false: value is only an upper bound on G(m, s).
    bool exact = true;
};

GValue g_value(const ZclResult& result);

struct GProbe {
    int m = 0;
    /// g[k] = G(m, k + 2).
    std::vector<int> g;
    std::vector<ZclResult> results;
    int last = 0;
    /// 2^e - 1 with e = trailing_ones(m).
    int expected_stable = 0;
    bool reached_expected = false;
};

/// G(m, s) for s = 2..s_max from exact searches. Throws Defect if the sequence
/// increases or goes negative.
GProbe g_stabilization_probe(int m, int s_max, const SearchLimits& limits = {});

} // namespace tcrp
