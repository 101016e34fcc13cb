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

#ifndef HAMCONN_SRC_SEARCH_BOUNDS_H_
#define HAMCONN_SRC_SEARCH_BOUNDS_H_

#include "hamconn/graph.h"

namespace hamconn {

// What a path ending at `last` can still do inside `allowed`.
struct TargetReach {
  // Vertices of `allowed` reachable from last.
  VertexSet component = 0;
  // Fewest further edges needed to end on a target vertex; 0 if unreachable.
  int distance = 0;

  bool reachable() const { return distance > 0; }
  int size() const { return popcount(component); }
};

// Breadth-first layers from last through allowed; layer i holds the vertices
// i edges away.
inline TargetReach reach_target(const Graph& g, int last, VertexSet targets,
                                VertexSet allowed) {
  TargetReach out;
  VertexSet frontier = g.neighbors(last) & allowed;
  int layer = 1;
  while (frontier != 0) {
    out.component |= frontier;
    if (out.distance == 0 && (frontier & targets) != 0) out.distance = layer;
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & allowed & ~out.component;
    ++layer;
  }
  return out;
}

}  // namespace hamconn

#endif  // HAMCONN_SRC_SEARCH_BOUNDS_H_
