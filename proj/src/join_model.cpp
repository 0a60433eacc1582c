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

#include <set>
#include <stdexcept>

namespace tcrp {

GroupElem::GroupElem(int dim, std::uint64_t bits) : dim_(dim), bits_(bits)
{
    if (dim < 1 || dim > 63)
        throw std::invalid_argument("GroupElem: dimension must lie in [1, 63]");
    if (bits >> dim)
        throw std::invalid_argument("GroupElem: bits outside the dimension");
}

GroupElem operator+(const GroupElem& a, const GroupElem& b)
{
    if (a.dim_ != b.dim_)
        throw std::invalid_argument("GroupElem: dimension mismatch");
    return GroupElem(a.dim_, a.bits_ ^ b.bits_);
}

void JoinPoint::validate() const
{
    if (s < 2 || s > 64)
        throw std::invalid_argument("JoinPoint: s must lie in [2, 64]");
    if (entries.empty())
        throw std::invalid_argument("JoinPoint: needs k+1 >= 1 entries");
    Rational sum = 0;
    for (const auto& e : entries) {
        if (e.t < 0)
            throw std::invalid_argument("JoinPoint: negative coordinate");
        if ((e.t > 0) != e.g.has_value())
            throw std::invalid_argument("JoinPoint: label must be present exactly at positive coordinates");
        if (e.g && e.g->dim() != s - 1)
            throw std::invalid_argument("JoinPoint: label has the wrong dimension");
        sum += e.t;
    }
    if (sum != 1)
        throw std::invalid_argument("JoinPoint: coordinates must sum to 1");
}

bool operator==(const JoinPoint& a, const JoinPoint& b)
{
    if (a.s != b.s || a.entries.size() != b.entries.size())
        return false;
    for (std::size_t l = 0; l < a.entries.size(); ++l)
        if (a.entries[l].t != b.entries[l].t || a.entries[l].g != b.entries[l].g)
            return false;
    return true;
}

JoinPoint join_vertex(int s, int k, int j, const GroupElem& g)
{
    if (j < 0 || j > k)
        throw std::invalid_argument("join_vertex: j out of range");
    JoinPoint p{s, std::vector<JoinEntry>(static_cast<std::size_t>(k) + 1)};
    p.entries[static_cast<std::size_t>(j)] = {Rational(1), g};
    p.validate();
    return p;
}

JoinPoint act(const GroupElem& g, const JoinPoint& p)
{
    if (g.dim() != p.s - 1)
        throw std::invalid_argument("act: group element of the wrong dimension");
    JoinPoint out = p;
    for (auto& e : out.entries)
        if (e.g)
            e.g = g + *e.g;
    return out;
}

bool in_U(const JoinPoint& p, int j)
{
    if (j < 0 || j > p.k())
        throw std::invalid_argument("in_U: j out of range");
    return p.entries[static_cast<std::size_t>(j)].t > 0;
}

GroupElem component_key(const JoinPoint& p, int j)
{
    if (!in_U(p, j))
        throw std::invalid_argument("component_key: point is not in U_j");
    return *p.entries[static_cast<std::size_t>(j)].g;
}

namespace {

// Whether the segment a -> b is a path in the join: where both ends are
// positive the labels must agree.
bool labels_compatible(const JoinPoint& a, const JoinPoint& b)
{
    for (std::size_t l = 0; l < a.entries.size(); ++l) {
        const auto& x = a.entries[l];
        const auto& y = b.entries[l];
        if (x.t > 0 && y.t > 0 && x.g != y.g)
            return false;
    }
    return true;
}

JoinPoint interpolate(const JoinPoint& a, const JoinPoint& b, const Rational& lambda)
{
    JoinPoint out{a.s, std::vector<JoinEntry>(a.entries.size())};
    for (std::size_t l = 0; l < a.entries.size(); ++l) {
        const auto& x = a.entries[l];
        const auto& y = b.entries[l];
        auto& z = out.entries[l];
        z.t = (1 - lambda) * x.t + lambda * y.t;
        if (z.t > 0)
            z.g = x.t > 0 ? x.g : y.g;
    }
    return out;
}

bool segment_stays(const JoinPoint& a, const JoinPoint& b, int j, const GroupElem& key)
{
    if (!labels_compatible(a, b))
        return false;
    // t_j is affine in lambda and positive at both ends, hence on the segment;
    // the interior samples recheck this together with the label at j.
    for (const Rational lambda : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
        const JoinPoint z = interpolate(a, b, lambda);
        z.validate();
        if (!in_U(z, j) || !(component_key(z, j) == key))
            return false;
    }
    return true;
}

} // namespace

bool segment_in_component(const JoinPoint& p, const JoinPoint& q, int j)
{
    p.validate();
    q.validate();
    if (p.s != q.s || p.k() != q.k())
        throw std::invalid_argument("segment_in_component: points live in different joins");
    const GroupElem key = component_key(p, j);
    if (!(component_key(q, j) == key))
        throw std::invalid_argument("segment_in_component: points have different component keys");
    if (labels_compatible(p, q))
        return segment_stays(p, q, j, key);
    const JoinPoint apex = join_vertex(p.s, p.k(), j, key);
    return segment_stays(p, apex, j, key) && segment_stays(apex, q, j, key);
}

JoinPoint random_point_in_U(int s, int k, int j, std::mt19937_64& rng, int max_weight)
{
    if (k < 0 || j < 0 || j > k)
        throw std::invalid_argument("random_point_in_U: need 0 <= j <= k");
    if (max_weight < 1)
        throw std::invalid_argument("random_point_in_U: max_weight must be >= 1");
    const int dim = s - 1;
    std::uniform_int_distribution<std::uint64_t> label(0, (std::uint64_t{1} << dim) - 1);
    std::uniform_int_distribution<int> weight(1, max_weight);
    std::bernoulli_distribution zero(1.0 / 3.0);

    std::vector<std::int64_t> w(static_cast<std::size_t>(k) + 1);
    std::int64_t total = 0;
    for (int l = 0; l <= k; ++l) {
        w[static_cast<std::size_t>(l)] = (l != j && zero(rng)) ? 0 : weight(rng);
        total += w[static_cast<std::size_t>(l)];
    }
    JoinPoint p{s, std::vector<JoinEntry>(static_cast<std::size_t>(k) + 1)};
    for (int l = 0; l <= k; ++l) {
        auto& e = p.entries[static_cast<std::size_t>(l)];
        e.t = Rational(w[static_cast<std::size_t>(l)], total);
        if (e.t > 0)
            e.g = GroupElem(dim, label(rng));
    }
    p.validate();
    return p;
}

JoinReport verify_join(int s, int k, std::size_t samples, std::uint64_t seed)
{
    if (s < 2 || s > 21)
        throw std::invalid_argument("verify_join: s must lie in [2, 21]");
    if (k < 0)
        throw std::invalid_argument("verify_join: k must be >= 0");
    const int dim = s - 1;
    const std::uint64_t order = std::uint64_t{1} << dim;

    JoinReport report;
    report.s = s;
    report.k = k;
    report.expected_keys = static_cast<std::size_t>(order);
    report.keys_found = static_cast<std::size_t>(order);
    report.transitive = true;
    report.equivariant = true;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> any_elem(0, order - 1);

    for (int j = 0; j <= k; ++j) {
        // One representative point per key seen.
        std::vector<std::optional<JoinPoint>> reps(order);
        std::size_t distinct = 0;
        for (std::size_t n = 0; n < samples; ++n) {
            JoinPoint p = random_point_in_U(s, k, j, rng);
            const std::uint64_t key = component_key(p, j).bits();
            if (!reps[key]) {
                reps[key] = std::move(p);
                ++distinct;
            }
            const GroupElem g(dim, any_elem(rng));
            const JoinPoint gp = act(g, *reps[key]);
            if (!in_U(gp, j) || !(component_key(gp, j) == g + GroupElem(dim, key)))
                report.equivariant = false;
        }
        report.keys_found = std::min(report.keys_found, distinct);

        // Orbit and stabiliser of one key under the induced action on keys.
        std::optional<std::uint64_t> base;
        for (std::uint64_t key = 0; key < order && !base; ++key)
            if (reps[key])
                base = key;
        if (!base) {
            report.transitive = false;
            continue;
        }
        std::set<std::uint64_t> orbit;
        std::size_t stabiliser = 0;
        for (std::uint64_t g = 0; g < order; ++g) {
            const JoinPoint moved = act(GroupElem(dim, g), *reps[*base]);
            if (!in_U(moved, j)) {
                report.equivariant = false;
                continue;
            }
            const std::uint64_t key = component_key(moved, j).bits();
            orbit.insert(key);
            if (key == *base)
                ++stabiliser;
        }
        if (orbit.size() != order || stabiliser != 1)
            report.transitive = false;
        for (std::uint64_t key = 0; key < order; ++key)
            if (reps[key] && !orbit.count(key))
                report.transitive = false;
    }

    std::uniform_int_distribution<int> pick_j(0, k);
    std::bernoulli_distribution share(0.5);
    for (std::size_t n = 0; n < samples; ++n) {
        const int j = pick_j(rng);
        const JoinPoint p = random_point_in_U(s, k, j, rng);
        JoinPoint q = random_point_in_U(s, k, j, rng);
        q.entries[static_cast<std::size_t>(j)].g = component_key(p, j);
        // Half the pairs agree on every shared label, exercising the straight segment.
        if (share(rng))
            for (std::size_t l = 0; l < q.entries.size(); ++l)
                if (q.entries[l].t > 0 && p.entries[l].t > 0)
                    q.entries[l].g = p.entries[l].g;
        ++report.segment_checks;
        if (segment_in_component(p, q, j))
            ++report.segment_checks_passed;
    }
    return report;
}

} // namespace tcrp
