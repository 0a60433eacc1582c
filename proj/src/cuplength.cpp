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

#include "tcrp/cuplength.hpp"

#include "tcrp/errors.hpp"
#include "tcrp/parity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace tcrp {

namespace {

// Resource caps raise Undetermined; malformed specs are argument errors.
void require_within(const RingSpec& spec, std::uint64_t limit)
{
    if (spec.m < 1 || spec.s < 2)
        spec.validate(limit);
    const std::uint64_t cap = std::min(limit, kHardBasisLimit);
    if (spec.basis_size() > cap)
        throw Undetermined("basis size (m+1)^s for m=" + std::to_string(spec.m) +
                           ", s=" + std::to_string(spec.s) + " exceeds the limit " +
                           std::to_string(cap));
}

// Largest j <= m whose binary digits are a subset of those of b, so C(b, j) is odd.
int max_odd_index(int b, int m)
{
    int j = 0;
    for (int bit = 30; bit >= 0; --bit) {
        const int v = 1 << bit;
        if ((b & v) && (j | v) <= m)
            j |= v;
    }
    return j;
}

} // namespace

int GeneratorWord::length() const
{
    int n = 0;
    for (int v : b)
        n += v;
    return n;
}

void GeneratorWord::validate() const
{
    spec.validate(std::numeric_limits<std::uint64_t>::max());
    if (static_cast<int>(b.size()) != spec.s - 1)
        throw std::invalid_argument("GeneratorWord: need s-1 exponents");
    for (int v : b)
        if (v < 0 || v > 2 * spec.m)
            throw std::invalid_argument("GeneratorWord: exponent out of range [0, 2m]");
    if (length() > spec.top_degree())
        throw std::invalid_argument("GeneratorWord: length exceeds s*m");
}

int Witness::length() const
{
    int n = 0;
    for (const auto& f : factors)
        n += f.exponent;
    return n;
}

std::string to_string(ZclMethod method)
{
    switch (method) {
    case ZclMethod::exact:
        return "exact";
    case ZclMethod::paper_lower_bound:
        return "paper_lower_bound";
    case ZclMethod::floor_lower_bound:
        return "floor_lower_bound";
    }
    throw std::invalid_argument("unknown ZclMethod");
}

ZclMethod zcl_method_from_string(const std::string& text)
{
    if (text == "exact")
        return ZclMethod::exact;
    if (text == "paper_lower_bound")
        return ZclMethod::paper_lower_bound;
    if (text == "floor_lower_bound")
        return ZclMethod::floor_lower_bound;
    throw std::invalid_argument("unknown zcl method '" + text + "'");
}

std::optional<Monomial> word_nonzero(const GeneratorWord& word)
{
    word.validate();
    const int m = word.spec.m;
    Monomial cert;
    cert.exponents.reserve(static_cast<std::size_t>(word.spec.s));
    int residue = 0;
    for (int b : word.b) {
        // Minimising each b_i - j_i separately minimises their sum.
        const int j = max_odd_index(b, m);
        cert.exponents.push_back(j);
        residue += b - j;
    }
    if (residue > m)
        return std::nullopt;
    cert.exponents.push_back(residue);
    return cert;
}

Poly witness_product(const Witness& w)
{
    const RingSpec& spec = w.spec;
    Poly product = Poly::one(spec);
    for (const auto& f : w.factors) {
        if (f.i < 1 || f.j > spec.s || f.i >= f.j)
            throw std::invalid_argument("witness factor indices must satisfy 1 <= i < j <= s");
        if (f.exponent < 0)
            throw std::invalid_argument("witness factor exponent must be nonnegative");
        product = mul(product, binomial_pow(spec, f.i, f.j, static_cast<std::uint64_t>(f.exponent)));
        if (product.is_zero())
            break;
    }
    return product;
}

bool verify_witness(const Witness& w)
{
    if (w.certificate >= w.spec.basis_size())
        throw std::invalid_argument("witness certificate rank out of range");
    return witness_product(w).contains(w.certificate);
}

namespace {

Witness pivot_witness(const RingSpec& spec, const std::vector<int>& b, const Monomial& cert)
{
    Witness w{spec, {}, rank(spec, cert)};
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] > 0)
            w.factors.push_back({static_cast<int>(i) + 1, spec.s, b[i]});
    return w;
}

class WordSearch {
public:
    WordSearch(int m, int slots, std::uint64_t max_nodes)
        : m_(m), slots_(slots), max_nodes_(max_nodes), word_(static_cast<std::size_t>(slots), 0)
    {
        residue_.resize(static_cast<std::size_t>(2 * m + 1));
        for (int b = 0; b <= 2 * m; ++b)
            residue_[static_cast<std::size_t>(b)] = b - max_odd_index(b, m);
    }

    /// Lexicographically smallest nondecreasing word of this length that survives.
    std::optional<std::vector<int>> find(int length)
    {
        if (descend(0, 0, length, 0))
            return word_;
        return std::nullopt;
    }

private:
    bool descend(int pos, int prev, int remaining, int residue)
    {
        if (++nodes_ > max_nodes_)
            throw Undetermined("word search exceeded " + std::to_string(max_nodes_) + " nodes");
        if (pos == slots_)
            return remaining == 0;
        const int after = slots_ - pos - 1;
        for (int v = prev; v <= 2 * m_; ++v) {
            const int rest = remaining - v;
            if (rest < after * v)
                break;
            if (rest > after * 2 * m_)
                continue;
            const int r = residue + residue_[static_cast<std::size_t>(v)];
            if (r > m_)
                continue;
            word_[static_cast<std::size_t>(pos)] = v;
            if (descend(pos + 1, v, rest, r))
                return true;
        }
        return false;
    }

    int m_;
    int slots_;
    std::uint64_t max_nodes_;
    std::uint64_t nodes_ = 0;
    std::vector<int> residue_;
    std::vector<int> word_;
};

} // namespace

ZclResult zcl_exact(int m, int s, const SearchLimits& limits)
{
    const RingSpec spec{m, s};
    require_within(spec, limits.basis_limit);

    WordSearch search(m, s - 1, limits.max_nodes);
    for (int length = spec.top_degree(); length >= 0; --length) {
        const auto b = search.find(length);
        if (!b)
            continue;
        const auto cert = word_nonzero(GeneratorWord{spec, *b});
        if (!cert)
            throw Defect("word search and word_nonzero disagree");
        ZclResult result{m, s, length, ZclMethod::exact, pivot_witness(spec, *b, *cert)};
        if (!verify_witness(result.witness))
            throw Defect("zcl_exact: witness for m=" + std::to_string(m) + ", s=" + std::to_string(s) +
                         " failed ring verification");
        return result;
    }
    throw Defect("zcl_exact: even the empty word vanished");
}

Witness extend_witness(const Witness& w, std::uint64_t basis_limit)
{
    const RingSpec next{w.spec.m, w.spec.s + 1};
    require_within(next, basis_limit);
    Witness out{next, w.factors, w.certificate};
    // Embedding keeps ranks; x_{s+1}^m adds m * stride(s+1).
    out.factors.push_back({1, next.s, next.m});
    out.certificate += static_cast<std::uint64_t>(next.m) * next.stride(next.s);
    return out;
}

namespace {

Witness extend_and_verify(Witness w, int s, std::uint64_t basis_limit, const char* what)
{
    require_within(RingSpec{w.spec.m, s}, basis_limit);
    while (w.spec.s < s)
        w = extend_witness(w, basis_limit);
    if (!verify_witness(w))
        throw Defect(std::string(what) + ": construction failed ring verification for m=" +
                     std::to_string(w.spec.m) + ", s=" + std::to_string(s));
    return w;
}

} // namespace

std::optional<Witness> paper_witness(int m, int s, std::uint64_t basis_limit)
{
    const RingSpec spec{m, s};
    spec.validate(std::numeric_limits<std::uint64_t>::max());
    const unsigned e = trailing_ones(static_cast<std::uint64_t>(m));
    const auto sigma = sigma_of(static_cast<std::uint64_t>(m));

    if (!sigma) {
        // m = 2^e - 1: (x_i + x_s)^m for i < s, surviving monomial x_1^m ... x_{s-1}^m.
        require_within(spec, basis_limit);
        Monomial cert;
        cert.exponents.assign(static_cast<std::size_t>(s), m);
        cert.exponents.back() = 0;
        Witness w{spec, {}, rank(spec, cert)};
        for (int i = 1; i < s; ++i)
            w.factors.push_back({i, s, m});
        return extend_and_verify(std::move(w), s, basis_limit, "paper_witness");
    }

    const int sig = static_cast<int>(*sigma);
    if (s < sig)
        return std::nullopt;
    const int two_e = 1 << e;
    const RingSpec base{m, sig};
    require_within(spec, basis_limit);
    // (x_i + x_sigma)^(m + 2^e) for i < sigma, surviving monomial
    // x_1^m ... x_{sigma-1}^m x_sigma^((sigma-1) 2^e).
    Monomial cert;
    cert.exponents.assign(static_cast<std::size_t>(sig), m);
    cert.exponents.back() = (sig - 1) * two_e;
    Witness w{base, {}, rank(base, cert)};
    for (int i = 1; i < sig; ++i)
        w.factors.push_back({i, sig, m + two_e});
    return extend_and_verify(std::move(w), s, basis_limit, "paper_witness");
}

Witness floor_witness(int m, int s, std::uint64_t basis_limit)
{
    const RingSpec spec{m, s};
    spec.validate(std::numeric_limits<std::uint64_t>::max());
    const RingSpec base{m, 2};
    Witness w{base, {{1, 2, m}}, static_cast<std::uint64_t>(m) * base.stride(2)};
    return extend_and_verify(std::move(w), s, basis_limit, "floor_witness");
}

GValue g_value(const ZclResult& result)
{
    return {result.g(), result.method == ZclMethod::exact};
}

GProbe g_stabilization_probe(int m, int s_max, const SearchLimits& limits)
{
    if (s_max < 2)
        throw std::invalid_argument("g_stabilization_probe: s_max must be >= 2");
    GProbe probe;
    probe.m = m;
    for (int s = 2; s <= s_max; ++s) {
        ZclResult r = zcl_exact(m, s, limits);
        const int g = r.g();
        if (g < 0)
            throw Defect("G(m,s) < 0 at m=" + std::to_string(m) + ", s=" + std::to_string(s));
        if (!probe.g.empty() && g > probe.g.back())
            throw Defect("G(m,s) increased at m=" + std::to_string(m) + ", s=" + std::to_string(s));
        probe.g.push_back(g);
        probe.results.push_back(std::move(r));
    }
    probe.last = probe.g.back();
    probe.expected_stable = (1 << trailing_ones(static_cast<std::uint64_t>(m))) - 1;
    probe.reached_expected = probe.last == probe.expected_stable;
    return probe;
}

} // namespace tcrp
