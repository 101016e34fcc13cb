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

#include "hamconn/oracle.h"

#include <string>
#include <vector>

namespace hamconn::oracle {
namespace {

void require_order(const Graph& g, int lo, int hi, const char* what) {
  if (g.order() < lo || g.order() > hi) {
    throw std::invalid_argument(std::string(what) + " needs " +
                                std::to_string(lo) + " <= n <= " +
                                std::to_string(hi) + ", got n = " +
                                std::to_string(g.order()));
  }
}

class Walker {
 public:
  Walker(const Graph& g, Budget budget)
      : g_(g), budget_(budget), visited_(g.order(), false) {}

  // Simple paths from `from`; every time one reaches `to` its length is kept.
  LengthSet paths(int from, int to) {
    found_ = LengthSet();
    visited_[from] = true;
    walk_to(from, to, 0);
    visited_[from] = false;
    return found_;
  }

  // Cycles whose smallest vertex is `anchor`.
  void cycles(int anchor) {
    visited_[anchor] = true;
    walk_cycle(anchor, anchor, 0);
    visited_[anchor] = false;
  }

  LengthSet found() const { return found_; }

 private:
  void tick() {
    if (++expansions_ > budget_.max_expansions) {
      throw Inconclusive("oracle budget of " +
                         std::to_string(budget_.max_expansions) +
                         " expansions exhausted");
    }
  }

  void walk_to(int at, int to, int length) {
    tick();
    for (int next = 0; next < g_.order(); ++next) {
      if (!g_.has_edge(at, next) || visited_[next]) continue;
      if (next == to) {
        found_.insert(length + 1);
        continue;
      }
      visited_[next] = true;
      walk_to(next, to, length + 1);
      visited_[next] = false;
    }
  }

  void walk_cycle(int anchor, int at, int length) {
    tick();
    for (int next = anchor + 1; next < g_.order(); ++next) {
      if (!g_.has_edge(at, next) || visited_[next]) continue;
      if (length + 1 >= 2 && g_.has_edge(next, anchor)) {
        found_.insert(length + 2);
      }
      visited_[next] = true;
      walk_cycle(anchor, next, length + 1);
      visited_[next] = false;
    }
  }

  const Graph& g_;
  const Budget budget_;
  std::vector<bool> visited_;
  LengthSet found_;
  std::uint64_t expansions_ = 0;
};

bool ham_path_between(const Graph& g, std::vector<bool>& visited, int at,
                      int to, int placed) {
  if (at == to) return placed == g.order();
  for (int next = 0; next < g.order(); ++next) {
    if (!g.has_edge(at, next) || visited[next]) continue;
    visited[next] = true;
    const bool ok = ham_path_between(g, visited, next, to, placed + 1);
    visited[next] = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace

LengthSet all_path_lengths_naive(const Graph& g, const VertexPair& pair,
                                 Budget budget) {
  require_order(g, 2, kMaxPathOrder, "all_path_lengths_naive");
  pair.check_order(g.order());
  return Walker(g, budget).paths(pair.u(), pair.v());
}

LengthSet all_cycle_lengths_naive(const Graph& g, Budget budget) {
  require_order(g, 0, kMaxPathOrder, "all_cycle_lengths_naive");
  Walker walker(g, budget);
  for (int anchor = 0; anchor < g.order(); ++anchor) walker.cycles(anchor);
  return walker.found();
}

bool ham_connected_naive(const Graph& g) {
  require_order(g, 2, kMaxHamOrder, "ham_connected_naive");
  std::vector<bool> visited(g.order(), false);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      visited[u] = true;
      const bool ok = ham_path_between(g, visited, u, v, 1);
      visited[u] = false;
      if (!ok) return false;
    }
  }
  return true;
}

bool has_hamiltonian_cycle_naive(const Graph& g) {
  require_order(g, 3, kMaxHamOrder, "has_hamiltonian_cycle_naive");
  std::vector<bool> visited(g.order(), false);
  // Any hamiltonian cycle passes through vertex 0 and one of its neighbours.
  for (int v = 1; v < g.order(); ++v) {
    if (!g.has_edge(0, v)) continue;
    // A hamiltonian v-0 path closes into a cycle through the edge 0-v. Stepping
    // onto 0 early ends the walk with vertices left over.
    visited[v] = true;
    const bool ok = ham_path_between(g, visited, v, 0, 1);
    visited[v] = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace hamconn::oracle
