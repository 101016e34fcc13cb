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

#ifndef HAMCONN_ISOMORPHISM_H_
#define HAMCONN_ISOMORPHISM_H_

#include <optional>
#include <vector>

#include "hamconn/graph.h"

namespace hamconn {

// Returns a vertex map m with g.has_edge(u, v) == h.has_edge(m[u], m[v]) for
// all u, v, or nullopt when none exists.
//
// Vertices are first split by iterated degree refinement run on both graphs
// with a shared colour table; backtracking then only maps vertices onto
// vertices of the same colour. Fast for the small graphs this library deals
// with (order <= 16); correct for any order.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

}  // namespace hamconn

#endif  // HAMCONN_ISOMORPHISM_H_
