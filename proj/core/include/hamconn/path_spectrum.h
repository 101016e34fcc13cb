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

// Stage 2: which path lengths join which vertex pairs.
//
// A graph has property P_k when every pair of distinct vertices is joined by a
// path on k vertices, i.e. with k - 1 edges. Lengths here are always edge
// counts.

#ifndef HAMCONN_PATH_SPECTRUM_H_
#define HAMCONN_PATH_SPECTRUM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hamconn/graph.h"
#include "hamconn/ham_connect.h"

namespace hamconn {

// Exact set of lengths l >= 1 such that g has a path with l edges between the
// two vertices. Throws std::invalid_argument for pairs outside g.
LengthSet path_length_set(const Graph& g, const VertexPair& pair);

// Confirmed path lengths per unordered pair of one graph.
class PairLengthTable {
 public:
  PairLengthTable() = default;
  explicit PairLengthTable(int order);

  int order() const { return order_; }
  LengthSet at(int u, int v) const { return sets_[index(u, v)]; }
  void add(int u, int v, int length) { sets_[index(u, v)].insert(length); }

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * order_ + v;
  }

  int order_ = 0;
  // Full n x n so index() needs no ordering; both halves are kept in sync by
  // callers through add() on (u, v) and (v, u).
  std::vector<LengthSet> sets_;
};

// Memoised P_k checker for one graph. Queries for long paths record every
// prefix they walk through, so asking for k in descending order makes later
// (shorter) queries mostly table lookups.
class PathSpectrumSearch {
 public:
  // g must outlive the search.
  explicit PathSpectrumSearch(const Graph& g);

  // Marks length n - 1 as present for every pair; valid once g is known to be
  // hamiltonian-connected.
  void seed_hamiltonian();

  // True iff some path with `length` edges joins u and v.
  bool has_path_of_length(int u, int v, int length);

  // Property P_k. Throws std::invalid_argument unless 2 <= k <= n.
  bool satisfies(int k);

  // First pair in lexicographic order lacking a path with k - 1 edges.
  std::optional<VertexPair> failing_pair(int k);

  const PairLengthTable& table() const { return table_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void record(int u, int v, int length);
  bool search(int target, int length, int last, VertexSet on_path, int depth);

  const Graph& g_;
  PairLengthTable table_;
  std::uint64_t nodes_ = 0;
  int source_ = 0;
};

// Property P_k on a fresh table. Throws std::invalid_argument unless
// 2 <= k <= n.
bool satisfies_Pk(const Graph& g, int k);

enum class FilterMode { kAll, kFull, kAny, kLast };

std::string_view to_string(FilterMode mode);
// Accepts "all", "full", "any", "last". Throws std::invalid_argument otherwise.
FilterMode parse_filter_mode(std::string_view text);

// Range of k (vertex counts) that the mode inspects: [3, n] for Full and Any,
// [ceil(n/2) + 1, n] for Last. All inspects nothing.
struct KWindow {
  int lo;
  int hi;
};
KWindow window_for(FilterMode mode, int n);

struct Stage2Outcome {
  bool passes = false;
  // Smallest k in the mode's window for which P_k fails, with the first pair
  // missing length k - 1. Set only when a witness was requested and exists.
  std::optional<int> failing_k;
  std::optional<VertexPair> failing_pair;
};

// Runs the stage-2 decision for one graph. k is examined from the top of the
// window downwards on a single table; `seed_hamiltonian` may be set when g
// already passed stage 1. Throws std::invalid_argument when n < 3.
Stage2Outcome evaluate_stage2(const Graph& g, FilterMode mode,
                              bool want_witness = false,
                              bool seed_hamiltonian = false);

inline bool classify(const Graph& g, FilterMode mode) {
  return evaluate_stage2(g, mode).passes;
}

}  // namespace hamconn

#endif  // HAMCONN_PATH_SPECTRUM_H_
