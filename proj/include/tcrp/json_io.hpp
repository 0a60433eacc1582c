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

// JSON forms shared by the CLI and the cache. Key order is fixed so output is
// byte-identical across runs.

#include "tcrp/bounds_report.hpp"
#include "tcrp/cuplength.hpp"
#include "tcrp/join_model.hpp"
#include "tcrp/parity.hpp"
#include "tcrp/zero_divisors.hpp"

#include <json.hpp>

namespace tcrp {

using Json = nlohmann::ordered_json;

/// {"factors": [[i, j, e], ...], "certificate": "x1^a1*...*xs^as"}
Json witness_to_json(const Witness& w);
Witness witness_from_json(const RingSpec& spec, const Json& j);

/// {m, s, zcl, method, g, witness}
Json zcl_to_json(const ZclResult& r);
Json profile_to_json(const TwoAdicProfile& p);
Json degree_check_to_json(const DegreeCheck& c);
Json join_report_to_json(const JoinReport& r);
Json probe_to_json(const GProbe& p);
/// BoundsRow fields, absent values as null.
Json row_to_json(const BoundsRow& row);

} // namespace tcrp
