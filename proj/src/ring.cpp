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

#include "tcrp/ring.hpp"

#include "tcrp/parity.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace tcrp {

std::uint64_t RingSpec::basis_size() const
{
    if (m < 1 || s < 1)
        return 0;
    const std::uint64_t base = static_cast<std::uint64_t>(m) + 1;
    std::uint64_t n = 1;
    for (int i = 0; i < s; ++i) {
        if (n > std::numeric_limits<std::uint64_t>::max() / base)
            return std::numeric_limits<std::uint64_t>::max();
        n *= base;
    }
    return n;
}

void RingSpec::validate(std::uint64_t limit) const
{
    if (m < 1)
        throw std::invalid_argument("ring: m must be >= 1");
    if (s < 2)
        throw std::invalid_argument("ring: s must be >= 2");
    limit = std::min(limit, kHardBasisLimit);
    if (basis_size() > limit)
        throw std::invalid_argument("ring: basis size (m+1)^s = " +
                                    (basis_size() == std::numeric_limits<std::uint64_t>::max()
                                         ? std::string("overflow")
                                         : std::to_string(basis_size())) +
                                    " exceeds the limit " + std::to_string(limit));
}

std::uint64_t RingSpec::stride(int i) const
{
    std::uint64_t st = 1;
    for (int k = 1; k < i; ++k)
        st *= static_cast<std::uint64_t>(m) + 1;
    return st;
}

int Monomial::degree() const
{
    int d = 0;
    for (int a : exponents)
        d += a;
    return d;
}

std::uint64_t rank(const RingSpec& spec, const Monomial& mono)
{
    if (static_cast<int>(mono.exponents.size()) != spec.s)
        throw std::invalid_argument("rank: monomial has the wrong number of variables");
    std::uint64_t r = 0;
    const std::uint64_t base = static_cast<std::uint64_t>(spec.m) + 1;
    for (int i = spec.s - 1; i >= 0; --i) {
        const int a = mono.exponents[static_cast<std::size_t>(i)];
        if (a < 0 || a > spec.m)
            throw std::invalid_argument("rank: exponent out of range [0, m]");
        r = r * base + static_cast<std::uint64_t>(a);
    }
    return r;
}

Monomial unrank(const RingSpec& spec, std::uint64_t r)
{
    if (r >= spec.basis_size())
        throw std::invalid_argument("unrank: index out of range");
    const std::uint64_t base = static_cast<std::uint64_t>(spec.m) + 1;
    Monomial mono;
    mono.exponents.resize(static_cast<std::size_t>(spec.s));
    for (auto& a : mono.exponents) {
        a = static_cast<int>(r % base);
        r /= base;
    }
    return mono;
}

int rank_degree(const RingSpec& spec, std::uint64_t r)
{
    const std::uint64_t base = static_cast<std::uint64_t>(spec.m) + 1;
    int d = 0;
    for (int i = 0; i < spec.s; ++i) {
        d += static_cast<int>(r % base);
        r /= base;
    }
    return d;
}

// --- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(int m) : m_(m), bits_(static_cast<std::size_t>(m) + 1)
{
    if (m < 1)
        throw std::invalid_argument("UniPoly: m must be >= 1");
}

std::string UniPoly::to_string() const
{
    std::string out;
    bits_.for_each_set([&](std::size_t k) {
        if (!out.empty())
            out += " + ";
        out += "x^" + std::to_string(k);
    });
    return out.empty() ? "0" : out;
}

// --- Poly ------------------------------------------------------------------

Poly::Poly(const RingSpec& spec) : spec_(spec)
{
    spec.validate(kHardBasisLimit);
    bits_ = BitVec(static_cast<std::size_t>(spec.basis_size()));
}

Poly::Poly(const RingSpec& spec, BitVec bits) : spec_(spec), bits_(std::move(bits))
{
    spec.validate(kHardBasisLimit);
    if (bits_.size() != spec.basis_size())
        throw std::invalid_argument("Poly: coefficient vector length != (m+1)^s");
}

Poly Poly::one(const RingSpec& spec)
{
    Poly p(spec);
    p.bits_.set(0);
    return p;
}

Poly Poly::variable(const RingSpec& spec, int i)
{
    if (i < 1 || i > spec.s)
        throw std::invalid_argument("variable index out of range");
    Poly p(spec);
    p.bits_.set(static_cast<std::size_t>(spec.stride(i)));
    return p;
}

Poly Poly::monomial(const RingSpec& spec, const Monomial& mono)
{
    Poly p(spec);
    p.bits_.set(static_cast<std::size_t>(rank(spec, mono)));
    return p;
}

std::vector<std::uint64_t> Poly::support() const
{
    std::vector<std::uint64_t> out;
    bits_.for_each_set([&](std::size_t r) { out.push_back(r); });
    return out;
}

int Poly::homogeneous_degree() const
{
    int deg = -1;
    bool mixed = false;
    bits_.for_each_set([&](std::size_t r) {
        const int d = rank_degree(spec_, r);
        if (deg == -1)
            deg = d;
        else if (d != deg)
            mixed = true;
    });
    return mixed ? -1 : deg;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (!(o.spec_ == spec_))
        throw std::invalid_argument("Poly: ring spec mismatch");
    bits_ ^= o.bits_;
    return *this;
}

// --- arithmetic ------------------------------------------------------------

namespace {

void require_same(const Poly& p, const Poly& q)
{
    if (!(p.spec() == q.spec()))
        throw std::invalid_argument("Poly: ring spec mismatch");
}

// Lazily built masks "exponent of x_i is <= t" over the whole basis.
class CoordinateMasks {
public:
    explicit CoordinateMasks(const RingSpec& spec)
        : spec_(spec), n_(static_cast<std::size_t>(spec.basis_size())),
          cache_(static_cast<std::size_t>(spec.s) * static_cast<std::size_t>(spec.m + 1))
    {
    }

    const BitVec& at_most(int i, int t)
    {
        auto& slot = cache_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(spec_.m + 1) +
                            static_cast<std::size_t>(t)];
        if (!slot) {
            BitVec mask(n_);
            const std::size_t block = static_cast<std::size_t>(spec_.stride(i));
            const std::size_t period = block * static_cast<std::size_t>(spec_.m + 1);
            const std::size_t run = block * static_cast<std::size_t>(t + 1);
            for (std::size_t start = 0; start < n_; start += period)
                mask.set_range(start, start + run);
            slot = std::move(mask);
        }
        return *slot;
    }

private:
    RingSpec spec_;
    std::size_t n_;
    std::vector<std::optional<BitVec>> cache_;
};

} // namespace

Poly add(const Poly& p, const Poly& q)
{
    Poly r = p;
    r += q;
    return r;
}

Poly mul(const Poly& p, const Poly& q)
{
    require_same(p, q);
    const RingSpec& spec = p.spec();
    const bool p_sparser = p.term_count() <= q.term_count();
    const Poly& sparse = p_sparser ? p : q;
    const Poly& dense = p_sparser ? q : p;

    BitVec acc(static_cast<std::size_t>(spec.basis_size()));
    if (sparse.is_zero() || dense.is_zero())
        return Poly(spec, std::move(acc));

    CoordinateMasks masks(spec);
    sparse.bits().for_each_set([&](std::size_t r) {
        const Monomial mono = unrank(spec, r);
        BitVec shifted = dense.bits();
        for (int i = 1; i <= spec.s; ++i) {
            const int a = mono.exponents[static_cast<std::size_t>(i - 1)];
            if (a > 0)
                shifted &= masks.at_most(i, spec.m - a);
        }
        // With no coordinate overflowing, rank(c + a) = rank(c) + rank(a).
        acc.xor_shifted(shifted, r);
    });
    return Poly(spec, std::move(acc));
}

Poly square(const Poly& p)
{
    const RingSpec& spec = p.spec();
    Poly out(spec);
    p.bits().for_each_set([&](std::size_t r) {
        const Monomial mono = unrank(spec, r);
        for (int a : mono.exponents)
            if (2 * a > spec.m)
                return;
        out.flip(2 * static_cast<std::uint64_t>(r));
    });
    return out;
}

Poly pow(const Poly& p, std::uint64_t k)
{
    Poly result = Poly::one(p.spec());
    Poly base = p;
    while (k) {
        if (k & 1)
            result = mul(result, base);
        k >>= 1;
        if (k) {
            if (base.is_zero())
                return Poly::zero(p.spec());
            base = square(base);
        }
    }
    return result;
}

Poly binomial_pow(const RingSpec& spec, int i, int j, std::uint64_t k)
{
    if (i < 1 || j > spec.s || i >= j)
        throw std::invalid_argument("binomial_pow: need 1 <= i < j <= s");
    Poly out(spec);
    const std::uint64_t m = static_cast<std::uint64_t>(spec.m);
    if (k > 2 * m)
        return out;
    const std::uint64_t si = spec.stride(i), sj = spec.stride(j);
    const std::uint64_t lo = k > m ? k - m : 0, hi = std::min(k, m);
    for (std::uint64_t t = lo; t <= hi; ++t)
        if (binom_is_odd(k, t))
            out.flip(t * si + (k - t) * sj);
    return out;
}

UniPoly diagonal_restriction(const Poly& p)
{
    const RingSpec& spec = p.spec();
    UniPoly out(spec.m);
    p.bits().for_each_set([&](std::size_t r) {
        const int d = rank_degree(spec, r);
        if (d <= spec.m)
            out.flip(d);
    });
    return out;
}

Poly embed(const Poly& p, int s_target, std::uint64_t limit)
{
    if (s_target <= p.spec().s)
        throw std::invalid_argument("embed: target must have more variables");
    const RingSpec target{p.spec().m, s_target};
    target.validate(limit);
    // New variables carry exponent 0, i.e. the high digits of the rank, so ranks are unchanged.
    return Poly(target, p.bits().resized(static_cast<std::size_t>(target.basis_size())));
}

} // namespace tcrp
