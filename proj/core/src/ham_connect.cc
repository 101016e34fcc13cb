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

#include "hamconn/ham_connect.h"

#include <stdexcept>
#include <string>

namespace hamconn {
namespace {

// Vertices of h whose degree inside h is exactly one.
VertexSet leaves_of(const Graph& g, VertexSet h) {
  VertexSet leaves = 0;
  for_each_vertex(h, [&](int v) {
    if (popcount(g.neighbors(v) & h) == 1) leaves |= singleton(v);
  });
  return leaves;
}

// Depth-first extension from one start vertex, filling row `start` of the
// witness matrix.
class StartSearch {
 public:
  StartSearch(const Graph& g, const HamSearchOptions& options,
              HamWitnessMatrix& matrix, int start, std::uint64_t& nodes)
      : g_(g), options_(options), matrix_(matrix), start_(start), nodes_(nodes) {}

  void run() {
    path_.assign(1, start_);
    extend(start_, singleton(start_));
  }

 private:
  bool prune(int last, VertexSet remainder) const {
    const VertexSet resolved = matrix_.row(start_);
    if (options_.enabled(PruningRule::kDisconnectedRemainder) &&
        !is_connected_within(g_, remainder)) {
      return true;
    }
    const VertexSet leaves = leaves_of(g_, remainder);
    const int leaf_count = popcount(leaves);
    const VertexSet detached = leaves & ~g_.neighbors(last);
    if (options_.enabled(PruningRule::kThreeLeaves) && leaf_count >= 3) {
      return true;
    }
    if (options_.enabled(PruningRule::kTwoDetachedLeaves) && leaf_count == 2 &&
        detached == leaves) {
      return true;
    }
    if (options_.enabled(PruningRule::kResolvedDetachedLeaf) &&
        leaf_count == 1 && detached != 0 && (detached & resolved) == detached) {
      return true;
    }
    if (options_.enabled(PruningRule::kAllResolved) &&
        (remainder & ~resolved) == 0) {
      return true;
    }
    return false;
  }

  void extend(int last, VertexSet on_path) {
    ++nodes_;
    const VertexSet remainder = g_.vertices() & ~on_path;
    if (remainder == 0) {
      if (!matrix_.found(start_, last)) {
        matrix_.mark(start_, last);
        if (options_.record_witnesses) matrix_.set_witness(start_, last, path_);
      }
      return;
    }
    if (prune(last, remainder)) return;
    for_each_vertex(g_.neighbors(last) & remainder, [&](int next) {
      path_.push_back(next);
      extend(next, on_path | singleton(next));
      path_.pop_back();
    });
  }

  const Graph& g_;
  const HamSearchOptions& options_;
  HamWitnessMatrix& matrix_;
  const int start_;
  std::uint64_t& nodes_;
  std::vector<int> path_;
};

class PairSearch {
 public:
  PairSearch(const Graph& g, const HamSearchOptions& options, int target)
      : g_(g), options_(options), target_(target) {}

  bool run(int source) { return extend(source, singleton(source)); }

 private:
  bool prune(int last, VertexSet remainder) const {
    if (options_.enabled(PruningRule::kDisconnectedRemainder) &&
        !is_connected_within(g_, remainder)) {
      return true;
    }
    const VertexSet leaves = leaves_of(g_, remainder);
    const int leaf_count = popcount(leaves);
    const VertexSet detached = leaves & ~g_.neighbors(last);
    if (options_.enabled(PruningRule::kThreeLeaves) && leaf_count >= 3) {
      return true;
    }
    if (options_.enabled(PruningRule::kTwoDetachedLeaves) && leaf_count == 2 &&
        detached == leaves) {
      return true;
    }
    // Single-target form of rules 4 and 5: the only leaf allowed to be away
    // from the last vertex is the target, which must end the path.
    if ((options_.enabled(PruningRule::kResolvedDetachedLeaf) ||
         options_.enabled(PruningRule::kAllResolved)) &&
        (detached & ~singleton(target_)) != 0) {
      return true;
    }
    return false;
  }

  bool extend(int last, VertexSet on_path) {
    const VertexSet remainder = g_.vertices() & ~on_path;
    if (remainder == singleton(target_)) return g_.has_edge(last, target_);
    if (prune(last, remainder)) return false;
    const VertexSet options = g_.neighbors(last) & remainder & ~singleton(target_);
    for (VertexSet rest = options; rest != 0; rest &= rest - 1) {
      const int next = lowest(rest);
      if (extend(next, on_path | singleton(next))) return true;
    }
    return false;
  }

  const Graph& g_;
  const HamSearchOptions& options_;
  const int target_;
};

}  // namespace

HamWitnessMatrix::HamWitnessMatrix(int order)
    : order_(order), rows_(order, 0) {}

bool HamWitnessMatrix::complete() const {
  for (int i = 0; i < order_; ++i) {
    if (rows_[i] != (full_set(order_) & ~singleton(i))) return false;
  }
  return true;
}

void HamWitnessMatrix::mark(int i, int j) {
  if (i == j) throw std::invalid_argument("witness matrix diagonal is fixed");
  rows_[i] |= singleton(j);
  rows_[j] |= singleton(i);
}

const std::vector<int>& HamWitnessMatrix::witness(int i, int j) const {
  static const std::vector<int> kNone;
  if (paths_.empty()) return kNone;
  return paths_[static_cast<std::size_t>(i) * order_ + j];
}

void HamWitnessMatrix::set_witness(int i, int j, std::vector<int> path) {
  if (paths_.empty()) paths_.resize(static_cast<std::size_t>(order_) * order_);
  paths_[static_cast<std::size_t>(j) * order_ + i] =
      std::vector<int>(path.rbegin(), path.rend());
  paths_[static_cast<std::size_t>(i) * order_ + j] = std::move(path);
}

HamConnectResult check_hamiltonian_connected(const Graph& g,
                                             const HamSearchOptions& options) {
  const int n = g.order();
  if (n < 2) {
    throw std::invalid_argument(
        "hamiltonian-connectedness needs at least two vertices, got " +
        std::to_string(n));
  }
  HamConnectResult result;
  result.witnesses = HamWitnessMatrix(n);
  HamWitnessMatrix& matrix = result.witnesses;
  for (int start = 0; start < n; ++start) {
    const VertexSet partners = g.vertices() & ~singleton(start);
    if (matrix.row(start) == partners) continue;
    StartSearch(g, options, matrix, start, result.nodes).run();
    // Every path from start has been tried; an unresolved partner now is a
    // pair with no hamiltonian path.
    if (matrix.row(start) != partners) return result;
  }
  result.hamiltonian_connected = true;
  return result;
}

bool exists_ham_path(const Graph& g, const VertexPair& pair,
                     const HamSearchOptions& options) {
  pair.check_order(g.order());
  return PairSearch(g, options, pair.v()).run(pair.u());
}

bool is_hamiltonian_path(const Graph& g, const std::vector<int>& path) {
  if (static_cast<int>(path.size()) != g.order()) return false;
  VertexSet seen = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int v = path[i];
    if (v < 0 || v >= g.order() || contains(seen, v)) return false;
    seen |= singleton(v);
    if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
  }
  return true;
}

}  // namespace hamconn
