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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "oracles.hpp"
#include "tcrp/bounds_report.hpp"
#include "tcrp/cuplength.hpp"
#include "tcrp/errors.hpp"
#include "tcrp/join_model.hpp"
#include "tcrp/parity.hpp"
#include "tcrp/zero_divisors.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace tcrp;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

struct Criterion {
    const char* id;
    const char* title;
    double budget_s;
    std::function<Outcome()> run;
};

std::string mono_text(const Monomial& m) { return monomial_to_string(m); }

Outcome ac1_s2_closed_formula()
{
    Outcome o;
    const int expected[] = {1, 3, 3, 7, 7, 7, 7, 15};
    for (int m = 1; m <= 8; ++m) {
        const int v = zcl_exact(m, 2).value;
        const int formula = (1 << z_of(static_cast<std::uint64_t>(m))) - 1;
        if (v != expected[m - 1] || v != formula)
            o.fail("m=" + std::to_string(m) + ": zcl=" + std::to_string(v));
    }
    return o;
}

Outcome ac2_hopf_cases()
{
    Outcome o;
    std::vector<std::pair<int, int>> cases;
    for (int m : {1, 3})
        for (int s = 2; s <= 5; ++s)
            cases.emplace_back(m, s);
    for (int s : {2, 3, 4})
        cases.emplace_back(7, s);
    for (const auto& [m, s] : cases) {
        const int v = zcl_exact(m, s).value;
        if (v != m * (s - 1))
            o.fail("m=" + std::to_string(m) + ", s=" + std::to_string(s) + ": zcl=" + std::to_string(v));
    }
    return o;
}

Outcome ac3_even_m_equalities()
{
    Outcome o;
    for (const auto& [m, s] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {4, 5}}) {
        const ZclResult r = zcl_exact(m, s);
        const BoundsRow row = build_row(m, s, Policy::exact);
        if (r.value != s * m || !row.equality)
            o.fail("m=" + std::to_string(m) + ", s=" + std::to_string(s));
    }
    return o;
}

Outcome ac4_theorem_witness()
{
    Outcome o;
    const auto w53 = paper_witness(5, 3);
    if (!w53 || w53->length() != 14 || !verify_witness(*w53) ||
        mono_text(w53->certificate_monomial()) != "x1^5*x2^5*x3^4")
        o.fail("(5,3) witness");
    const auto w113 = paper_witness(11, 3);
    if (!w113 || w113->length() != 3 * 11 - 3 || !verify_witness(*w113))
        o.fail("(11,3) witness");
    return o;
}

Outcome ac5_g_sequence()
{
    Outcome o;
    for (int m = 1; m <= 6; ++m) {
        const GProbe p = g_stabilization_probe(m, 6);
        for (std::size_t i = 0; i < p.g.size(); ++i) {
            if (p.g[i] < 0 || (i > 0 && p.g[i] > p.g[i - 1]))
                o.fail("m=" + std::to_string(m) + " not nonincreasing");
        }
        if (m == 5 && !(p.g[1] == 1 && p.g[0] > 1 && p.expected_stable == 1))
            o.fail("m=5 does not reach 1 at s=3");
    }
    return o;
}

Outcome ac6_generators_lemma()
{
    Outcome o;
    std::size_t specs = 0;
    for (int m = 1;; ++m) {
        if (RingSpec{m, 2}.basis_size() > 10'000)
            break;
        for (int s = 2; RingSpec{m, s}.basis_size() <= 10'000; ++s) {
            ++specs;
            for (const auto& c : verify_generators_lemma({m, s}))
                if (!c.pass)
                    o.fail("m=" + std::to_string(m) + ", s=" + std::to_string(s) + ", degree " +
                           std::to_string(c.degree));
        }
    }
    o.detail = o.pass ? std::to_string(specs) + " specs" : o.detail;
    return o;
}

Outcome ac7_oracle_agreement()
{
    Outcome o;
    std::size_t words = 0;
    for (const RingSpec spec : {RingSpec{1, 2}, RingSpec{2, 2}, RingSpec{2, 3}, RingSpec{3, 3}, RingSpec{5, 3}}) {
        std::vector<int> b(static_cast<std::size_t>(spec.s - 1));
        auto rec = [&](auto&& self, std::size_t pos, int lo, int sum) -> void {
            if (pos == b.size()) {
                ++words;
                Poly prod = Poly::one(spec);
                for (std::size_t i = 0; i < b.size(); ++i)
                    prod = mul(prod, binomial_pow(spec, static_cast<int>(i) + 1, spec.s, static_cast<std::uint64_t>(b[i])));
                if (word_nonzero({spec, b}).has_value() == prod.is_zero())
                    o.fail("disagreement at m=" + std::to_string(spec.m) + ", s=" + std::to_string(spec.s));
                return;
            }
            for (int v = lo; v <= 2 * spec.m && sum + v <= spec.top_degree(); ++v) {
                b[pos] = v;
                self(self, pos + 1, v, sum + v);
            }
        };
        rec(rec, 0, 0, 0);
    }
    if (o.pass)
        o.detail = std::to_string(words) + " words";
    return o;
}

Outcome ac8_reduction_sanity()
{
    Outcome o;
    for (const RingSpec spec : {RingSpec{1, 2}, RingSpec{2, 2}, RingSpec{1, 3}}) {
        const int brute = oracle::max_kernel_product_length(spec);
        const int exact = zcl_exact(spec.m, spec.s).value;
        if (brute != exact)
            o.fail("m=" + std::to_string(spec.m) + ", s=" + std::to_string(spec.s) + ": brute " +
                   std::to_string(brute) + " vs " + std::to_string(exact));
    }
    return o;
}

Outcome ac9_join_model()
{
    Outcome o;
    for (int s = 2; s <= 5; ++s)
        for (int k = 0; k <= 4; ++k) {
            const JoinReport r = verify_join(s, k, 1000, 20260101);
            if (!r.pass() || r.segment_checks < 1000)
                o.fail("s=" + std::to_string(s) + ", k=" + std::to_string(k));
        }
    return o;
}

Outcome ac10_chain_consistency()
{
    Outcome o;
    std::size_t rows = 0, skipped = 0;
    for (int m = 1; m <= 7; ++m)
        for (int s = 2; s <= 5; ++s) {
            BoundsRow row;
            try {
                row = build_row(m, s, Policy::exact);
            } catch (const Undetermined&) {
                ++skipped;
                continue;
            }
            ++rows;
            if (row.known && !(row.zcl <= row.known->value && row.known->value <= row.upper))
                o.fail("m=" + std::to_string(m) + ", s=" + std::to_string(s));
        }
    if (o.pass)
        o.detail = std::to_string(rows) + " rows, " + std::to_string(skipped) + " skipped";
    return o;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"AC1", "zcl at s=2 equals 2^z(m) - 1 for m=1..8", 1, ac1_s2_closed_formula},
        {"AC2", "Hopf cases zcl = m(s-1)", 60, ac2_hopf_cases},
        {"AC3", "even m, s > m: zcl = sm and equality", 30, ac3_even_m_equalities},
        {"AC4", "explicit witnesses (5,3) and (11,3)", 10, ac4_theorem_witness},
        {"AC5", "G(m,s) nonincreasing, G(5,3) = 1", 60, ac5_g_sequence},
        {"AC6", "kernel = ideal of x_i + x_s for (m+1)^s <= 10^4", 60, ac6_generators_lemma},
        {"AC7", "word criterion agrees with ring product", 60, ac7_oracle_agreement},
        {"AC8", "generator words attain the cup-length (brute force)", 60, ac8_reduction_sanity},
        {"AC9", "join model components and action", 10, ac9_join_model},
        {"AC10", "bound chain consistency, m=1..7, s=2..5", 120, ac10_chain_consistency},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o.fail(std::string("exception: ") + ex.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_s)
            o.fail("over time budget");
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %-5s %-52s %8.3f s (budget %g s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.budget_s, o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
