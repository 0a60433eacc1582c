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

#include "tcrp/bounds_report.hpp"
#include "tcrp/cuplength.hpp"
#include "tcrp/errors.hpp"
#include "tcrp/join_model.hpp"
#include "tcrp/json_io.hpp"
#include "tcrp/parity.hpp"
#include "tcrp/zero_divisors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <utility>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDefect = 1;
constexpr int kExitUndetermined = 2;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + text + "', expected A..B");
    }
}

class Stopwatch {
public:
    long long elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zero-divisor cup-length of products of real projective spaces and bounds on TC_s(RP^m)"};
    app.require_subcommand(1);

    std::uint64_t limit_bits = tcrp::kDefaultBasisLimit;
    std::uint64_t max_nodes = tcrp::SearchLimits{}.max_nodes;
    app.add_option("--limit-bits", limit_bits, "Cap on the basis size (m+1)^s")
        ->check(CLI::Range(std::uint64_t{1}, tcrp::kHardBasisLimit));
    app.add_option("--max-nodes", max_nodes, "Cap on search nodes per exact computation");

    int m = 1, s = 2, s_max = 2, k = 0, max_degree = -1;
    std::size_t samples = 1000;
    std::uint64_t seed = 1;

    auto* profile = app.add_subcommand("profile", "2-adic profile (e, z, sigma) of m");
    profile->add_option("--m", m, "Dimension m")->required()->check(CLI::PositiveNumber);

    auto* zcl = app.add_subcommand("zcl", "Zero-divisor cup-length");
    zcl->require_subcommand(1);
    auto* zcl_exact = zcl->add_subcommand("exact", "Exact value by certified search");
    auto* zcl_witness = zcl->add_subcommand("witness", "Explicit construction only");
    auto* zcl_probe = zcl->add_subcommand("probe", "G(m, s) for s = 2..s_max");
    for (auto* sub : {zcl_exact, zcl_witness}) {
        sub->add_option("--m", m)->required()->check(CLI::PositiveNumber);
        sub->add_option("--s", s)->required()->check(CLI::Range(2, 64));
    }
    zcl_probe->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    zcl_probe->add_option("--s-max", s_max)->required()->check(CLI::Range(2, 64));

    auto* verify = app.add_subcommand("verify", "Computational checks");
    verify->require_subcommand(1);
    auto* verify_gen = verify->add_subcommand("generators", "Kernel of the diagonal = ideal of x_i + x_s, per degree");
    verify_gen->add_option("--m", m)->required()->check(CLI::PositiveNumber);
    verify_gen->add_option("--s", s)->required()->check(CLI::Range(2, 64));
    verify_gen->add_option("--max-degree", max_degree, "Highest degree checked (default sm)");
    auto* verify_join = verify->add_subcommand("join", "Components of U_j in the join J_k(G_s)");
    verify_join->add_option("--s", s)->required()->check(CLI::Range(2, 21));
    verify_join->add_option("--k", k)->required()->check(CLI::NonNegativeNumber);
    verify_join->add_option("--samples", samples, "Samples per U_j and same-key pairs");
    verify_join->add_option("--seed", seed);

    std::string m_range, s_range, policy_name = "exact", format_name = "json", cache_path;
    auto* report = app.add_subcommand("report", "Bound table for TC_s(RP^m)");
    report->add_option("--m-range", m_range, "A..B")->required();
    report->add_option("--s-range", s_range, "C..D")->required();
    report->add_option("--policy", policy_name)->check(CLI::IsMember({"exact", "witness-only"}));
    report->add_option("--format", format_name)->check(CLI::IsMember({"json", "csv"}));
    report->add_option("--cache", cache_path, std::string("Cache file (default $") + tcrp::kCacheEnvVar + ")");

    CLI11_PARSE(app, argc, argv);

    const tcrp::SearchLimits limits{limit_bits, max_nodes};
    try {
        if (*profile) {
            std::cout << tcrp::profile_to_json(tcrp::two_adic_profile(static_cast<std::uint64_t>(m))).dump() << '\n';
            return kExitOk;
        }

        if (*zcl_exact) {
            Stopwatch sw;
            const tcrp::ZclResult r = tcrp::zcl_exact(m, s, limits);
            auto j = tcrp::zcl_to_json(r);
            j["elapsed_ms"] = sw.elapsed_ms();
            std::cout << j.dump() << '\n';
            return kExitOk;
        }

        if (*zcl_witness) {
            Stopwatch sw;
            const auto w = tcrp::paper_witness(m, s, limit_bits);
            tcrp::Json j;
            if (w) {
                j = tcrp::zcl_to_json(
                    tcrp::ZclResult{m, s, w->length(), tcrp::ZclMethod::paper_lower_bound, *w});
            } else {
                j = tcrp::Json{{"m", m}, {"s", s}, {"zcl", nullptr}, {"method", nullptr},
                               {"g", nullptr},  {"witness", nullptr}};
            }
            j["elapsed_ms"] = sw.elapsed_ms();
            std::cout << j.dump() << '\n';
            return kExitOk;
        }

        if (*zcl_probe) {
            Stopwatch sw;
            const tcrp::GProbe probe = tcrp::g_stabilization_probe(m, s_max, limits);
            for (const auto& r : probe.results)
                std::cout << tcrp::zcl_to_json(r).dump() << '\n';
            auto j = tcrp::probe_to_json(probe);
            j["elapsed_ms"] = sw.elapsed_ms();
            std::cout << j.dump() << '\n';
            return kExitOk;
        }

        if (*verify_gen) {
            const tcrp::RingSpec spec{m, s};
            if (spec.basis_size() > std::min(limit_bits, tcrp::kHardBasisLimit))
                throw tcrp::Undetermined("basis size exceeds --limit-bits");
            bool ok = true;
            for (const auto& c : tcrp::verify_generators_lemma(spec, max_degree, limit_bits)) {
                std::cout << tcrp::degree_check_to_json(c).dump() << '\n';
                ok = ok && c.pass;
            }
            return ok ? kExitOk : kExitDefect;
        }

        if (*verify_join) {
            const tcrp::JoinReport r = tcrp::verify_join(s, k, samples, seed);
            std::cout << tcrp::join_report_to_json(r).dump() << '\n';
            return r.pass() ? kExitOk : kExitDefect;
        }

        if (*report) {
            const Range mr = parse_range(m_range), sr = parse_range(s_range);
            if (mr.lo < 1 || sr.lo < 2 || mr.hi < mr.lo || sr.hi < sr.lo)
                throw std::invalid_argument("ranges need 1 <= A <= B and 2 <= C <= D");
            const auto policy = policy_name == "exact" ? tcrp::Policy::exact : tcrp::Policy::witness_only;
            const auto format = format_name == "json" ? tcrp::Format::json : tcrp::Format::csv;
            if (cache_path.empty())
                if (const char* env = std::getenv(tcrp::kCacheEnvVar))
                    cache_path = env;
            std::optional<tcrp::ResultCache> cache;
            if (!cache_path.empty())
                cache.emplace(cache_path);

            std::vector<tcrp::BoundsRow> rows;
            bool skipped = false;
            for (int mm = mr.lo; mm <= mr.hi; ++mm) {
                for (int ss = sr.lo; ss <= sr.hi; ++ss) {
                    try {
                        rows.push_back(tcrp::build_row(mm, ss, policy, {limits, cache ? &*cache : nullptr}));
                    } catch (const tcrp::Undetermined& ex) {
                        std::cerr << "undetermined: m=" << mm << " s=" << ss << ": " << ex.what() << '\n';
                        skipped = true;
                    }
                }
            }
            tcrp::emit(std::move(rows), format, std::cout);
            return skipped ? kExitUndetermined : kExitOk;
        }
    } catch (const tcrp::Undetermined& ex) {
        std::cerr << "undetermined: " << ex.what() << '\n';
        return kExitUndetermined;
    } catch (const tcrp::Defect& ex) {
        std::cerr << "defect: " << ex.what() << '\n';
        return kExitDefect;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitDefect;
    }
    return kExitOk;
}
