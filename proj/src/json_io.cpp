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

#include "tcrp/json_io.hpp"

#include <stdexcept>

namespace tcrp {

Json witness_to_json(const Witness& w)
{
    Json factors = Json::array();
    for (const auto& f : w.factors)
        factors.push_back(Json::array({f.i, f.j, f.exponent}));
    return Json{{"factors", std::move(factors)},
                {"certificate", monomial_to_string(w.certificate_monomial())}};
}

Witness witness_from_json(const RingSpec& spec, const Json& j)
{
    if (!j.is_object() || !j.contains("factors") || !j.contains("certificate"))
        throw std::invalid_argument("witness: expected {factors, certificate}");
    Witness w{spec, {}, 0};
    for (const auto& f : j.at("factors")) {
        if (!f.is_array() || f.size() != 3)
            throw std::invalid_argument("witness: factor must be [i, j, e]");
        w.factors.push_back({f[0].get<int>(), f[1].get<int>(), f[2].get<int>()});
    }
    w.certificate = rank(spec, parse_monomial(spec, j.at("certificate").get<std::string>()));
    return w;
}

Json zcl_to_json(const ZclResult& r)
{
    return Json{{"m", r.m},
                {"s", r.s},
                {"zcl", r.value},
                {"method", to_string(r.method)},
                {"g", r.g()},
                {"witness", witness_to_json(r.witness)}};
}

Json profile_to_json(const TwoAdicProfile& p)
{
    return Json{{"m", p.m},
                {"e", p.e},
                {"z", p.z},
                {"sigma", p.sigma ? Json(*p.sigma) : Json(nullptr)}};
}

Json degree_check_to_json(const DegreeCheck& c)
{
    Json j{{"degree", c.degree}, {"dim_kernel", c.dim_kernel}, {"dim_ideal", c.dim_ideal}, {"pass", c.pass}};
    if (c.mismatch)
        j["mismatch"] = c.mismatch->to_string();
    return j;
}

Json join_report_to_json(const JoinReport& r)
{
    return Json{{"s", r.s},
                {"k", r.k},
                {"keys_found", r.keys_found},
                {"transitive", r.transitive},
                {"equivariant", r.equivariant},
                {"segment_checks", r.segment_checks},
                {"segment_checks_passed", r.segment_checks_passed}};
}

Json probe_to_json(const GProbe& p)
{
    return Json{{"m", p.m},
                {"s_max", static_cast<int>(p.g.size()) + 1},
                {"g", p.g},
                {"last", p.last},
                {"expected_stable", p.expected_stable},
                {"reached_expected", p.reached_expected}};
}

Json row_to_json(const BoundsRow& row)
{
    return Json{{"m", row.m},
                {"s", row.s},
                {"upper", row.upper},
                {"zcl", row.zcl},
                {"zcl_method", to_string(row.zcl_method)},
                {"lower_secat", row.lower_secat},
                {"known_tc", row.known ? Json(row.known->value) : Json(nullptr)},
                {"tc_source", row.known ? Json(row.known->source) : Json(nullptr)},
                {"equality", row.equality}};
}

} // namespace tcrp
