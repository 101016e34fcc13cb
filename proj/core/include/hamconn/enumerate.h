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

#ifndef HAMCONN_ENUMERATE_H_
#define HAMCONN_ENUMERATE_H_

#include <vector>

#include "hamconn/graph.h"

namespace hamconn {

inline constexpr int kMaxEnumOrder = 8;

struct EnumFilter {
  int order = 0;
  int min_degree = 0;
  // 0 means no requirement, otherwise is_k_connected(g, connectivity).
  int connectivity = 0;
};

// One graph per isomorphism class of order filter.order passing the filter.
//
// Classes of order m + 1 are produced by attaching a new vertex to every
// class of order m in every possible way; duplicates are removed by
// are_isomorphic inside buckets of equal invariants (edge count, sorted
// degrees, sorted triangle counts, sorted neighbour-degree profiles). Output
// is ordered by bucket and then by first appearance, so it is deterministic.
//
// Throws std::invalid_argument when order is outside [0, 8], min_degree is
// negative, or connectivity is outside [0, 3].
std::vector<Graph> enumerate_graphs(const EnumFilter& filter);

}  // namespace hamconn

#endif  // HAMCONN_ENUMERATE_H_
