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

// Slow reference answers. Plain exhaustive enumeration with a visited check
// and nothing else; shares only graph-core with the fast searches it checks.

#ifndef HAMCONN_ORACLE_H_
#define HAMCONN_ORACLE_H_

#include <cstdint>
#include <stdexcept>

#include "hamconn/graph.h"

namespace hamconn::oracle {

// The node-expansion budget ran out before the enumeration finished. The
// answer is unknown; no partial result is returned.
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::uint64_t max_expansions = 1'000'000'000;
};

inline constexpr int kMaxPathOrder = 36;
inline constexpr int kMaxHamOrder = 12;

// Every l such that some u-v path has l edges. Requires n <= 36.
LengthSet all_path_lengths_naive(const Graph& g, const VertexPair& pair,
                                 Budget budget = {});

// Every l such that g has a cycle with l edges. Requires n <= 36.
LengthSet all_cycle_lengths_naive(const Graph& g, Budget budget = {});

// Per-pair hamiltonian path search. Requires 2 <= n <= 12.
bool ham_connected_naive(const Graph& g);

// True iff g has a hamiltonian cycle. Requires 3 <= n <= 12.
bool has_hamiltonian_cycle_naive(const Graph& g);

}  // namespace hamconn::oracle

#endif  // HAMCONN_ORACLE_H_
