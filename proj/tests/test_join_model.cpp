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

#include "tcrp/join_model.hpp"

#include <doctest.h>

#include <set>

using namespace tcrp;

namespace {

JoinPoint point(int s, std::vector<std::pair<Rational, std::optional<std::uint64_t>>> entries)
{
    JoinPoint p{s, {}};
    for (auto& [t, g] : entries)
        p.entries.push_back({t, g ? std::optional<GroupElem>(GroupElem(s - 1, *g)) : std::nullopt});
    p.validate();
    return p;
}

} // namespace

TEST_CASE("rational arithmetic")
{
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(1 - Rational(1, 4) == Rational(3, 4));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(0) != 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(INT64_MAX) + 1, std::overflow_error);
}

TEST_CASE("join point invariants")
{
    CHECK_THROWS_AS(point(3, {{Rational(1, 2), 1}, {Rational(1, 3), 2}}), std::invalid_argument);
    CHECK_THROWS_AS(point(3, {{Rational(1), std::nullopt}}), std::invalid_argument);
    CHECK_THROWS_AS(point(3, {{Rational(1), 1}, {Rational(0), 2}}), std::invalid_argument);
    CHECK_THROWS_AS(GroupElem(2, 4), std::invalid_argument);
    CHECK_NOTHROW(point(3, {{Rational(1, 2), 1}, {Rational(1, 2), 3}}));
}

TEST_CASE("act")
{
    std::mt19937_64 rng(8);
    for (int s = 2; s <= 5; ++s)
        for (int k = 0; k <= 4; ++k)
            for (int trial = 0; trial < 20; ++trial) {
                const int j = trial % (k + 1);
                const JoinPoint p = random_point_in_U(s, k, j, rng);
                std::uniform_int_distribution<std::uint64_t> any(0, (std::uint64_t{1} << (s - 1)) - 1);
                const GroupElem g(s - 1, any(rng)), h(s - 1, any(rng));
                CHECK(act(GroupElem::identity(s - 1), p) == p);
                CHECK(act(g, act(g, p)) == p);
                CHECK(act(g + h, p) == act(g, act(h, p)));
                const JoinPoint gp = act(g, p);
                CHECK_NOTHROW(gp.validate());
                for (int l = 0; l <= k; ++l) {
                    CHECK(in_U(gp, l) == in_U(p, l));
                    CHECK(gp.entries[static_cast<std::size_t>(l)].t == p.entries[static_cast<std::size_t>(l)].t);
                }
                CHECK(component_key(gp, j) == g + component_key(p, j));
            }
}

TEST_CASE("in_U and component_key")
{
    const JoinPoint v = join_vertex(3, 2, 1, GroupElem(2, 3));
    CHECK(!in_U(v, 0));
    CHECK(in_U(v, 1));
    CHECK(!in_U(v, 2));
    CHECK(component_key(v, 1) == GroupElem(2, 3));
    CHECK_THROWS_AS(component_key(v, 0), std::invalid_argument);
    CHECK_THROWS_AS(in_U(v, 3), std::invalid_argument);
}

TEST_CASE("keys realise every group element")
{
    std::mt19937_64 rng(99);
    for (int s = 2; s <= 5; ++s)
        for (int k = 0; k <= 4; ++k)
            for (int j = 0; j <= k; ++j) {
                std::set<std::uint64_t> keys;
                for (int n = 0; n < 400; ++n)
                    keys.insert(component_key(random_point_in_U(s, k, j, rng), j).bits());
                CHECK(keys.size() == (std::size_t{1} << (s - 1)));
            }
}

TEST_CASE("segment_in_component")
{
    const JoinPoint p = point(3, {{Rational(1, 2), 1}, {Rational(1, 2), 2}, {Rational(0), std::nullopt}});
    CHECK(segment_in_component(p, p, 0));

    const JoinPoint a = point(3, {{Rational(1), 2}, {Rational(0), std::nullopt}});
    const JoinPoint b = point(3, {{Rational(1), 2}, {Rational(0), std::nullopt}});
    CHECK(segment_in_component(a, b, 0));

    // Labels disagree at coordinate 1: routed through the vertex at j = 0.
    const JoinPoint q = point(3, {{Rational(1, 3), 1}, {Rational(2, 3), 3}, {Rational(0), std::nullopt}});
    CHECK(segment_in_component(p, q, 0));

    const JoinPoint other = point(3, {{Rational(1, 3), 0}, {Rational(2, 3), 3}, {Rational(0), std::nullopt}});
    CHECK_THROWS_AS(segment_in_component(p, other, 0), std::invalid_argument);
}

TEST_CASE("verify_join")
{
    for (int s = 2; s <= 4; ++s)
        for (int k = 0; k <= 3; ++k) {
            const JoinReport r = verify_join(s, k, 300, 42);
            CHECK(r.pass());
            CHECK(r.keys_found == (std::size_t{1} << (s - 1)));
            CHECK(r.segment_checks == 300);
        }
    const JoinReport a = verify_join(3, 2, 200, 5), b = verify_join(3, 2, 200, 5);
    CHECK(a.segment_checks_passed == b.segment_checks_passed);
    CHECK_THROWS_AS(verify_join(1, 2, 10, 1), std::invalid_argument);
}
