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

// The chain  sm >= TC_s(RP^m) >= secat(pi_s) >= zcl_s(RP^m)  per (m, s), with
// provenance for every entry, plus an append-only result cache.

#include "tcrp/cuplength.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tcrp {

/// Bumped whenever the search or the nonvanishing criterion changes.
inline constexpr const char* kEngineVersion = "tcrp-1";
/// Environment variable naming the default cache file.
inline constexpr const char* kCacheEnvVar = "TCRP_CACHE";

struct KnownTc {
    int value = 0;
    /// "hopf" (m in {1, 3, 7}: TC_s = m(s-1)) or "even_m_s_gt_m" (TC_s = sm).
    std::string source;
    friend bool operator==(const KnownTc&, const KnownTc&) = default;
};

/// Only values with a published exact determination; absent otherwise.
std::optional<KnownTc> known_tc(int m, int s);

struct BoundsRow {
    int m = 0;
    int s = 0;
    int upper = 0;
    int zcl = 0;
    ZclMethod zcl_method = ZclMethod::exact;
    /// secat(pi_s) >= zcl; secat itself is not computed.
    int lower_secat = 0;
    std::optional<KnownTc> known;
    bool equality = false;
    std::optional<Witness> witness;
};

/// Throws Defect unless zcl <= known_tc <= upper, lower_secat = zcl and the
/// equality flag matches zcl == upper.
void check_row(const BoundsRow& row);

struct CacheEntry {
    int m = 0;
    int s = 0;
    int zcl = 0;
    ZclMethod method = ZclMethod::exact;
    Witness witness;
    std::string engine_version = kEngineVersion;
    std::string timestamp;
};

/// Line-delimited JSON store. Each put appends one whole line.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path path, std::ostream* warnings = nullptr);

    const std::filesystem::path& path() const { return path_; }

    /// Newest entry for (m, s, engine_version) whose witness re-verifies.
    /// Corrupt or unverifiable lines are skipped with a warning.
    std::optional<CacheEntry> get(int m, int s, std::uint64_t basis_limit = kDefaultBasisLimit) const;
    void put(const CacheEntry& entry) const;

private:
    void warn(const std::string& message) const;

    std::filesystem::path path_;
    std::ostream* warnings_;
};

std::string serialize_entry(const CacheEntry& entry);
/// Throws std::invalid_argument on malformed input.
CacheEntry parse_entry(const std::string& line);

enum class Policy { exact, witness_only };

struct RowOptions {
    SearchLimits limits;
    const ResultCache* cache = nullptr;
};

/// Fills one row from the cache, the exact search or the explicit constructions.
/// Throws Undetermined when a resource limit is hit and Defect on a chain violation.
BoundsRow build_row(int m, int s, Policy policy, const RowOptions& options = {});

enum class Format { json, csv };

/// Rows sorted by (m, s); each re-checked before writing.
void emit(std::vector<BoundsRow> rows, Format format, std::ostream& out);

} // namespace tcrp
