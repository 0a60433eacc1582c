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

// The algebra A(m, s) = F2[x_1..x_s] / (x_1^(m+1), ..., x_s^(m+1)), stored densely
// over the monomial basis. A monomial x_1^a_1 ... x_s^a_s has rank
// a_1 + a_2 (m+1) + ... + a_s (m+1)^(s-1).

#include "tcrp/bitvec.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace tcrp {

/// Default cap on the basis size (m+1)^s.
inline constexpr std::uint64_t kDefaultBasisLimit = std::uint64_t{1} << 24;
/// Absolute cap; no configuration may raise the limit past this (32 MiB per element).
inline constexpr std::uint64_t kHardBasisLimit = std::uint64_t{1} << 28;

struct RingSpec {
    int m = 1;
    int s = 2;

    /// (m+1)^s, saturating at UINT64_MAX.
    std::uint64_t basis_size() const;
    /// Throws std::invalid_argument unless m >= 1, s >= 2 and basis_size() <= limit.
    void validate(std::uint64_t limit = kDefaultBasisLimit) const;
    /// (m+1)^(i-1), the rank step of x_i.
    std::uint64_t stride(int i) const;
    int top_degree() const { return s * m; }

    friend bool operator==(const RingSpec&, const RingSpec&) = default;
};

struct Monomial {
    std::vector<int> exponents;

    int degree() const;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

std::uint64_t rank(const RingSpec& spec, const Monomial& mono);
Monomial unrank(const RingSpec& spec, std::uint64_t r);
/// Total degree of the basis monomial of rank r.
int rank_degree(const RingSpec& spec, std::uint64_t r);

/// Element of F2[x]/(x^(m+1)).
class UniPoly {
public:
    explicit UniPoly(int m);
    int m() const { return m_; }
    const BitVec& bits() const { return bits_; }
    bool coefficient(int k) const { return bits_.test(static_cast<std::size_t>(k)); }
    void flip(int k) { bits_.flip(static_cast<std::size_t>(k)); }
    bool is_zero() const { return bits_.none(); }
    std::string to_string() const;

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

private:
    int m_;
    BitVec bits_;
};

/// Element of A(m, s). Bit r set means the basis monomial unrank(r) occurs.
class Poly {
public:
    /// Zero element. Validates the spec against the hard cap only.
    explicit Poly(const RingSpec& spec);
    Poly(const RingSpec& spec, BitVec bits);

    static Poly zero(const RingSpec& spec) { return Poly(spec); }
    static Poly one(const RingSpec& spec);
    /// x_i, 1 <= i <= s.
    static Poly variable(const RingSpec& spec, int i);
    static Poly monomial(const RingSpec& spec, const Monomial& mono);

    const RingSpec& spec() const { return spec_; }
    const BitVec& bits() const { return bits_; }
    bool is_zero() const { return bits_.none(); }
    bool contains(std::uint64_t r) const { return bits_.test(static_cast<std::size_t>(r)); }
    bool contains(const Monomial& mono) const { return contains(rank(spec_, mono)); }
    std::size_t term_count() const { return bits_.count(); }
    void flip(std::uint64_t r) { bits_.flip(static_cast<std::size_t>(r)); }

    /// Ranks of the monomials present, increasing.
    std::vector<std::uint64_t> support() const;
    /// Degree if every term has the same total degree; -1 for zero or mixed degrees.
    int homogeneous_degree() const;

    Poly& operator+=(const Poly& o);

    /// Canonical text: monomials "x1^a1*...*xs^as" by increasing rank joined by " + ", "0" for zero.
    std::string to_string() const;
    /// Raw bit vector, little-endian by rank, ceil((m+1)^s / 8) bytes.
    std::vector<std::uint8_t> to_bytes() const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    RingSpec spec_;
    BitVec bits_;
};

Poly add(const Poly& p, const Poly& q);
Poly mul(const Poly& p, const Poly& q);
/// p*p by the Frobenius rule: sum of the squares of p's monomials.
Poly square(const Poly& p);
Poly pow(const Poly& p, std::uint64_t k);

inline Poly operator+(const Poly& p, const Poly& q) { return add(p, q); }
inline Poly operator*(const Poly& p, const Poly& q) { return mul(p, q); }

/// (x_i + x_j)^k from its binomial expansion, 1 <= i < j <= s.
Poly binomial_pow(const RingSpec& spec, int i, int j, std::uint64_t k);

/// Image under x_i -> x for all i.
UniPoly diagonal_restriction(const Poly& p);

/// Inclusion A(m, s) -> A(m, s_target) induced by projecting onto the first s factors.
Poly embed(const Poly& p, int s_target, std::uint64_t limit = kDefaultBasisLimit);

std::string monomial_to_string(const Monomial& mono);
/// Accepts the canonical text and relaxed variants ("x1*x3^2", "1", repeated terms cancel).
Poly parse_poly(const RingSpec& spec, std::string_view text);
Monomial parse_monomial(const RingSpec& spec, std::string_view text);
Poly poly_from_bytes(const RingSpec& spec, const std::vector<std::uint8_t>& bytes);

} // namespace tcrp
