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

#include "hamconn/path_spectrum.h"

#include <stdexcept>

#include "search_bounds.h"

namespace hamconn {
namespace {

// Collects every length with a pruning test: the unfinished part of a path
// lives in the target's component of the unvisited vertices, so the final
// length lies in [len + dist, len + |component|]. Branches whose whole
// interval is already confirmed are cut.
class ExactLengthSearch {
 public:
  ExactLengthSearch(const Graph& g, int target) : g_(g), target_(target) {}

  LengthSet run(int source) {
    extend(source, singleton(source), 0);
    return found_;
  }

 private:
  void extend(int last, VertexSet on_path, int length) {
    const TargetReach reach =
        reach_target(g_, last, singleton(target_), g_.vertices() & ~on_path);
    if (!reach.reachable()) return;
    const LengthSet possible =
        LengthSet::range(length + reach.distance, length + reach.size());
    if ((possible - found_).empty()) return;
    for_each_vertex(g_.neighbors(last) & reach.component, [&](int next) {
      if (next == target_) {
        found_.insert(length + 1);
      } else {
        extend(next, on_path | singleton(next), length + 1);
      }
    });
  }

  const Graph& g_;
  const int target_;
  LengthSet found_;
};

}  // namespace

LengthSet path_length_set(const Graph& g, const VertexPair& pair) {
  pair.check_order(g.order());
  return ExactLengthSearch(g, pair.v()).run(pair.u());
}

PairLengthTable::PairLengthTable(int order)
    : order_(order), sets_(static_cast<std::size_t>(order) * order) {}

PathSpectrumSearch::PathSpectrumSearch(const Graph& g)
    : g_(g), table_(g.order()) {}

void PathSpectrumSearch::seed_hamiltonian() {
  const int n = g_.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) record(u, v, n - 1);
  }
}

void PathSpectrumSearch::record(int u, int v, int length) {
  table_.add(u, v, length);
  table_.add(v, u, length);
}

bool PathSpectrumSearch::has_path_of_length(int u, int v, int length) {
  VertexPair(u, v).check_order(g_.order());
  if (length < 1 || length >= g_.order()) return false;
  if (table_.at(u, v).contains(length)) return true;
  source_ = u;
  return search(v, length, u, singleton(u), 0);
}

// Depth-first search for a source-target path with exactly `length` edges,
// truncated at that length. Every prefix walked is a genuine path from the
// source and is stored for later queries.
bool PathSpectrumSearch::search(int target, int length, int last,
                                VertexSet on_path, int depth) {
  ++nodes_;
  if (depth > 0) record(source_, last, depth);
  if (last == target) return depth == length;
  if (depth == length) return false;
  const int needed = length - depth;
  const TargetReach reach =
      reach_target(g_, last, singleton(target), g_.vertices() & ~on_path);
  if (!reach.reachable() || reach.distance > needed || reach.size() < needed) {
    return false;
  }
  for (VertexSet next = g_.neighbors(last) & reach.component; next != 0;
       next &= next - 1) {
    const int w = lowest(next);
    if (search(target, length, w, on_path | singleton(w), depth + 1)) {
      return true;
    }
  }
  return false;
}

bool PathSpectrumSearch::satisfies(int k) {
  const int n = g_.order();
  if (k < 2 || k > n) {
    throw std::invalid_argument("P_k needs 2 <= k <= n, got k = " +
                                std::to_string(k) + ", n = " + std::to_string(n));
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!has_path_of_length(u, v, k - 1)) return false;
    }
  }
  return true;
}

std::optional<VertexPair> PathSpectrumSearch::failing_pair(int k) {
  const int n = g_.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!has_path_of_length(u, v, k - 1)) return VertexPair(u, v);
    }
  }
  return std::nullopt;
}

bool satisfies_Pk(const Graph& g, int k) {
  return PathSpectrumSearch(g).satisfies(k);
}

std::string_view to_string(FilterMode mode) {
  switch (mode) {
    case FilterMode::kAll:
      return "all";
    case FilterMode::kFull:
      return "full";
    case FilterMode::kAny:
      return "any";
    case FilterMode::kLast:
      return "last";
  }
  return "?";
}

FilterMode parse_filter_mode(std::string_view text) {
  if (text == "all") return FilterMode::kAll;
  if (text == "full") return FilterMode::kFull;
  if (text == "any") return FilterMode::kAny;
  if (text == "last") return FilterMode::kLast;
  throw std::invalid_argument("unknown filter mode '" + std::string(text) +
                              "' (expected all, full, any or last)");
}

KWindow window_for(FilterMode mode, int n) {
  switch (mode) {
    case FilterMode::kAll:
      return {n + 1, n};
    case FilterMode::kFull:
    case FilterMode::kAny:
      return {3, n};
    case FilterMode::kLast:
      // Path length >= n/2 means at least ceil(n/2) + 1 vertices.
      return {(n + 1) / 2 + 1, n};
  }
  return {n + 1, n};
}

Stage2Outcome evaluate_stage2(const Graph& g, FilterMode mode, bool want_witness,
                              bool seed_hamiltonian) {
  const int n = g.order();
  if (n < 3) {
    throw std::invalid_argument("stage 2 needs at least three vertices, got " +
                                std::to_string(n));
  }
  Stage2Outcome out;
  if (mode == FilterMode::kAll) {
    out.passes = true;
    return out;
  }
  const KWindow window = window_for(mode, n);
  PathSpectrumSearch search(g);
  if (seed_hamiltonian) search.seed_hamiltonian();

  if (mode == FilterMode::kFull) {
    out.passes = true;
    for (int k = window.hi; k >= window.lo; --k) {
      if (!search.satisfies(k)) {
        out.passes = false;
        break;
      }
    }
    return out;
  }

  for (int k = window.hi; k >= window.lo; --k) {
    if (search.satisfies(k)) continue;
    out.passes = true;
    if (!want_witness) return out;
    out.failing_k = k;
  }
  if (out.failing_k) out.failing_pair = search.failing_pair(*out.failing_k);
  return out;
}

}  // namespace hamconn
