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

// Finite model of the Milnor join J_k(G_s), G_s = (Z/2)^(s-1), with exact
// barycentric coordinates. U_j is the open set where the j-th coordinate is
// positive; its components are indexed by the label carried at coordinate j.

#include "tcrp/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace tcrp {

/// Element of (Z/2)^dim; bit i is the coordinate on the generator sigma_(i+1).
class GroupElem {
public:
    GroupElem() = default;
    GroupElem(int dim, std::uint64_t bits);

    static GroupElem identity(int dim) { return GroupElem(dim, 0); }

    int dim() const { return dim_; }
    std::uint64_t bits() const { return bits_; }

    friend GroupElem operator+(const GroupElem& a, const GroupElem& b);
    friend bool operator==(const GroupElem&, const GroupElem&) = default;

private:
    int dim_ = 0;
    std::uint64_t bits_ = 0;
};

struct JoinEntry {
    Rational t;
    /// Present exactly when t > 0.
    std::optional<GroupElem> g;
};

/// Formal barycentric point sum_l t_l g_l of J_k(G_s), k = entries.size() - 1.
struct JoinPoint {
    int s = 2;
    std::vector<JoinEntry> entries;

    int k() const { return static_cast<int>(entries.size()) - 1; }
    /// Throws std::invalid_argument unless the invariants hold.
    void validate() const;
    friend bool operator==(const JoinPoint& a, const JoinPoint& b);
};

/// The vertex with t_j = 1 and label g.
JoinPoint join_vertex(int s, int k, int j, const GroupElem& g);

/// Diagonal action: every defined label g_l becomes g + g_l.
JoinPoint act(const GroupElem& g, const JoinPoint& p);

bool in_U(const JoinPoint& p, int j);

/// The label at coordinate j. Requires in_U(p, j).
GroupElem component_key(const JoinPoint& p, int j);

/// Checks that p and q (same key in U_j) are joined by a path inside U_j that
/// keeps that key: the straight segment, or p -> vertex(g_j) -> q when the
/// labels of p and q disagree at some other shared positive coordinate.
bool segment_in_component(const JoinPoint& p, const JoinPoint& q, int j);

/// A random point of U_j with coordinate weights in [0, max_weight].
JoinPoint random_point_in_U(int s, int k, int j, std::mt19937_64& rng, int max_weight = 12);

struct JoinReport {
    int s = 0;
    int k = 0;
    /// Smallest number of distinct keys seen over j = 0..k.
    std::size_t keys_found = 0;
    std::size_t expected_keys = 0;
    /// The action on keys is free and has a single orbit, for every j.
    bool transitive = false;
    std::size_t segment_checks = 0;
    std::size_t segment_checks_passed = 0;
    /// act preserves U_j membership and shifts keys, on every sample.
    bool equivariant = false;

    bool pass() const
    {
        return keys_found == expected_keys && transitive && equivariant &&
               segment_checks_passed == segment_checks;
    }
};

/// Samples `samples` points per U_j and `samples` same-key pairs per (s, k).
JoinReport verify_join(int s, int k, std::size_t samples, std::uint64_t seed);

} // namespace tcrp
