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

// Stage 1: hamiltonian-connectedness by depth-first path extension.
//
// Paths are grown from a start vertex s. With H the subgraph induced by the
// vertices not yet on the path, the search backtracks when
//   1. H is disconnected;
//   2. H has three or more vertices of degree one (degree taken inside H);
//   3. H has two degree-one vertices and neither is adjacent in g to the
//      last path vertex;
//   4. H has one degree-one vertex v, v is not adjacent in g to the last path
//      vertex, and a hamiltonian s-v path is already known;
//   5. hamiltonian s-v paths are already known for every v in H.
// A degree-one vertex of H must end the remaining hamiltonian path of H, which
// is what makes each rule sound.

#ifndef HAMCONN_HAM_CONNECT_H_
#define HAMCONN_HAM_CONNECT_H_

#include <array>
#include <cstdint>
#include <vector>

#include "hamconn/graph.h"

namespace hamconn {

enum class PruningRule {
  kDisconnectedRemainder = 0,
  kThreeLeaves = 1,
  kTwoDetachedLeaves = 2,
  kResolvedDetachedLeaf = 3,
  kAllResolved = 4,
};

inline constexpr int kPruningRuleCount = 5;

struct HamSearchOptions {
  // Indexed by PruningRule.
  std::array<bool, kPruningRuleCount> rules = {true, true, true, true, true};
  // Keep one explicit path per confirmed pair.
  bool record_witnesses = false;

  HamSearchOptions& disable(PruningRule r) {
    rules[static_cast<int>(r)] = false;
    return *this;
  }
  bool enabled(PruningRule r) const { return rules[static_cast<int>(r)]; }
};

// found(i, j) is true iff a hamiltonian i-j path has been confirmed. Symmetric,
// diagonal always false.
class HamWitnessMatrix {
 public:
  HamWitnessMatrix() = default;
  explicit HamWitnessMatrix(int order);

  int order() const { return order_; }
  bool found(int i, int j) const { return contains(rows_[i], j); }
  // Partners of i with a confirmed path.
  VertexSet row(int i) const { return rows_[i]; }
  // True when every off-diagonal entry is set.
  bool complete() const;

  void mark(int i, int j);

  // Path from i to j recorded for the pair, empty when witnesses were not
  // recorded. The stored orientation may be j to i.
  const std::vector<int>& witness(int i, int j) const;
  void set_witness(int i, int j, std::vector<int> path);

 private:
  int order_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<std::vector<int>> paths_;
};

struct HamConnectResult {
  bool hamiltonian_connected = false;
  HamWitnessMatrix witnesses;
  // Number of search nodes expanded; useful when profiling rule variants.
  std::uint64_t nodes = 0;
};

// Throws std::invalid_argument when g has fewer than two vertices.
HamConnectResult check_hamiltonian_connected(const Graph& g,
                                             const HamSearchOptions& options = {});

inline bool is_hamiltonian_connected(const Graph& g) {
  return check_hamiltonian_connected(g).hamiltonian_connected;
}

// True iff a hamiltonian path with endpoints pair.u() and pair.v() exists.
// Throws std::invalid_argument for pairs outside the graph.
bool exists_ham_path(const Graph& g, const VertexPair& pair,
                     const HamSearchOptions& options = {});

// True when path visits every vertex of g once and consecutive vertices are
// adjacent.
bool is_hamiltonian_path(const Graph& g, const std::vector<int>& path);

}  // namespace hamconn

#endif  // HAMCONN_HAM_CONNECT_H_
