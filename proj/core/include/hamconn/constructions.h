// Copyright 2026 The hamconn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named graph families with distinguished vertices.
//
//   smallest_counterexample  the cubic planar 8-vertex graph whose vertices 3
//                            and 4 have no path of length 4, optionally with
//                            the chords 3-8 and/or 4-7.
//   h_family(k)              cubic graphs on 16 + 6k vertices whose adjacent
//                            pair (a, c) misses every odd length in
//                            {3, 5, ..., 9 + 4k}.
//   f_family(k)              k cyclically linked copies of a 6-vertex gadget;
//                            cubic on 6k vertices with cycle spectrum
//                            {4} u {3m + 2 : 1 <= m < k} u [3k, 6k].

#ifndef HAMCONN_CONSTRUCTIONS_H_
#define HAMCONN_CONSTRUCTIONS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "hamconn/graph.h"

namespace hamconn {

struct LabeledGraph {
  Graph graph;
  // Role name to vertex id; injective.
  std::map<std::string, int> roles;
  std::optional<VertexPair> distinguished_pair;

  // Throws std::out_of_range for unknown roles.
  int role(std::string_view name) const;
  // One "role=vertex_id" line per role, ordered by vertex id.
  std::string role_sidecar() const;
};

enum class Fig1Variant { kBase, kPlusE1, kPlusE2, kBoth };

std::string_view to_string(Fig1Variant variant);
// Accepts "base", "e1", "e2", "both".
Fig1Variant parse_fig1_variant(std::string_view text);

// Vertices labelled "1".."8" map to ids 0..7; distinguished pair is (3, 4).
LabeledGraph smallest_counterexample(Fig1Variant variant = Fig1Variant::kBase);

// The 16-vertex cubic base graph: roles u0..u8 on ids 0..8, then f, a, b, e,
// c, d, g on ids 9..15. Distinguished pair is (a, c).
LabeledGraph h0();

// Applies the seven-vertex expansion k times to h0. Each round deletes ac and
// bc, appends six vertices and eleven edges, then renames the roles so that
// a..g again denote a copy of the expansion pattern. The pattern is checked
// after every round; a mismatch throws std::logic_error.
// Throws std::invalid_argument for k < 0 or when 16 + 6k > 64.
LabeledGraph h_family(int k);

// Gadget with vertices "1".."6" on ids 0..5 and edges 12 23 36 45 56 24 15.
LabeledGraph gadget_GA();

// k copies of the gadget; copy i (1-based) has roles "v<i>_<j>" on id
// 6(i-1) + j - 1, linked by v<i>_3 - v<i+1>_1 and v<i>_6 - v<i+1>_4 with i
// taken cyclically. Throws std::invalid_argument for k < 2 or k > 10.
LabeledGraph f_family(int k);

// Closed form of the cycle spectrum of f_family(k):
// {4} u {3m + 2 : 1 <= m <= k - 1} u [3k, 6k].
LengthSet f_family_expected_spectrum(int k);

// Odd lengths {3, 5, ..., 9 + 4k} that the distinguished pair of h_family(k)
// cannot realise.
LengthSet h_family_forbidden_lengths(int k);

}  // namespace hamconn

#endif  // HAMCONN_CONSTRUCTIONS_H_
