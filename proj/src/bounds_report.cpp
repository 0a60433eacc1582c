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

#include "tcrp/errors.hpp"
#include "tcrp/json_io.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <stdexcept>

namespace tcrp {

std::optional<KnownTc> known_tc(int m, int s)
{
    if (m < 1 || s < 2)
        throw std::invalid_argument("known_tc: need m >= 1 and s >= 2");
    if (m == 1 || m == 3 || m == 7)
        return KnownTc{m * (s - 1), "hopf"};
    if (m % 2 == 0 && s > m)
        return KnownTc{s * m, "even_m_s_gt_m"};
    return std::nullopt;
}

void check_row(const BoundsRow& row)
{
    const std::string where = " at m=" + std::to_string(row.m) + ", s=" + std::to_string(row.s);
    if (row.upper != row.s * row.m)
        throw Defect("row upper bound is not sm" + where);
    if (row.zcl < 0 || row.zcl > row.upper)
        throw Defect("zcl outside [0, sm]" + where);
    if (row.lower_secat != row.zcl)
        throw Defect("secat lower bound differs from zcl" + where);
    if (row.known && (row.known->value < row.zcl || row.known->value > row.upper))
        throw Defect("known TC value violates zcl <= TC <= sm" + where);
    if (row.equality != (row.zcl == row.upper))
        throw Defect("equality flag inconsistent" + where);
}

// --- cache -------------------------------------------------------------------

namespace {

std::string utc_timestamp()
{
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::string serialize_entry(const CacheEntry& entry)
{
    const Json j{{"m", entry.m},
                 {"s", entry.s},
                 {"zcl", entry.zcl},
                 {"method", to_string(entry.method)},
                 {"witness", witness_to_json(entry.witness)},
                 {"engine_version", entry.engine_version},
                 {"timestamp", entry.timestamp}};
    return j.dump();
}

CacheEntry parse_entry(const std::string& line)
{
    try {
        const Json j = Json::parse(line);
        CacheEntry e;
        e.m = j.at("m").get<int>();
        e.s = j.at("s").get<int>();
        const RingSpec spec{e.m, e.s};
        spec.validate(kHardBasisLimit);
        e.zcl = j.at("zcl").get<int>();
        e.method = zcl_method_from_string(j.at("method").get<std::string>());
        e.witness = witness_from_json(spec, j.at("witness"));
        e.engine_version = j.at("engine_version").get<std::string>();
        e.timestamp = j.at("timestamp").get<std::string>();
        return e;
    } catch (const Json::exception& ex) {
        throw std::invalid_argument(std::string("cache entry: ") + ex.what());
    }
}

ResultCache::ResultCache(std::filesystem::path path, std::ostream* warnings)
    : path_(std::move(path)), warnings_(warnings ? warnings : &std::cerr)
{
}

void ResultCache::warn(const std::string& message) const
{
    *warnings_ << "warning: cache " << path_.string() << ": " << message << '\n';
}

std::optional<CacheEntry> ResultCache::get(int m, int s, std::uint64_t basis_limit) const
{
    std::ifstream in(path_);
    if (!in)
        return std::nullopt;
    std::optional<CacheEntry> newest, newest_exact;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.empty())
            continue;
        CacheEntry e;
        try {
            e = parse_entry(line);
        } catch (const std::exception& ex) {
            warn("line " + std::to_string(lineno) + " ignored: " + ex.what());
            continue;
        }
        if (e.m != m || e.s != s || e.engine_version != kEngineVersion)
            continue;
        if (e.witness.spec.basis_size() > std::min(basis_limit, kHardBasisLimit)) {
            warn("line " + std::to_string(lineno) + " ignored: witness too large to re-verify");
            continue;
        }
        bool ok = false;
        try {
            ok = e.witness.length() == e.zcl && verify_witness(e.witness);
        } catch (const std::exception&) {
            ok = false;
        }
        if (!ok) {
            warn("line " + std::to_string(lineno) + " ignored: witness does not verify");
            continue;
        }
        if (e.method == ZclMethod::exact)
            newest_exact = e;
        newest = std::move(e);
    }
    return newest_exact ? newest_exact : newest;
}

void ResultCache::put(const CacheEntry& entry) const
{
    CacheEntry stamped = entry;
    if (stamped.timestamp.empty())
        stamped.timestamp = utc_timestamp();
    const std::string line = serialize_entry(stamped) + '\n';
    std::ofstream out(path_, std::ios::app | std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open cache file " + path_.string());
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing cache file " + path_.string());
}

// --- rows --------------------------------------------------------------------

BoundsRow build_row(int m, int s, Policy policy, const RowOptions& options)
{
    const RingSpec spec{m, s};
    spec.validate(std::numeric_limits<std::uint64_t>::max());

    BoundsRow row;
    row.m = m;
    row.s = s;
    row.upper = s * m;

    std::optional<CacheEntry> cached;
    if (options.cache)
        cached = options.cache->get(m, s, options.limits.basis_limit);
    if (cached && (policy == Policy::witness_only || cached->method == ZclMethod::exact)) {
        row.zcl = cached->zcl;
        row.zcl_method = cached->method;
        row.witness = cached->witness;
    } else {
        if (policy == Policy::exact) {
            ZclResult r = zcl_exact(m, s, options.limits);
            row.zcl = r.value;
            row.zcl_method = ZclMethod::exact;
            row.witness = std::move(r.witness);
        } else if (auto w = paper_witness(m, s, options.limits.basis_limit)) {
            row.zcl = w->length();
            row.zcl_method = ZclMethod::paper_lower_bound;
            row.witness = std::move(*w);
        } else {
            row.witness = floor_witness(m, s, options.limits.basis_limit);
            row.zcl = row.witness->length();
            row.zcl_method = ZclMethod::floor_lower_bound;
        }
        if (options.cache)
            options.cache->put(CacheEntry{m, s, row.zcl, row.zcl_method, *row.witness, kEngineVersion, {}});
    }

    row.lower_secat = row.zcl;
    row.known = known_tc(m, s);
    row.equality = row.zcl == row.upper;
    check_row(row);
    return row;
}

void emit(std::vector<BoundsRow> rows, Format format, std::ostream& out)
{
    std::stable_sort(rows.begin(), rows.end(), [](const BoundsRow& a, const BoundsRow& b) {
        return a.m != b.m ? a.m < b.m : a.s < b.s;
    });
    for (const auto& row : rows)
        check_row(row);

    if (format == Format::json) {
        for (const auto& row : rows)
            out << row_to_json(row).dump() << '\n';
    } else {
        out << "m,s,upper,zcl,zcl_method,known_tc,tc_source,equality\n";
        for (const auto& row : rows) {
            out << row.m << ',' << row.s << ',' << row.upper << ',' << row.zcl << ','
                << to_string(row.zcl_method) << ',';
            if (row.known)
                out << row.known->value << ',' << row.known->source;
            else
                out << ',';
            out << ',' << (row.equality ? "true" : "false") << '\n';
        }
    }
    out.flush();
    if (!out)
        throw std::runtime_error("failed writing report output");
}

} // namespace tcrp
