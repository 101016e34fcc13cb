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

#include "hamconn/graph.h"

#include <algorithm>
#include <stdexcept>

namespace hamconn {

LengthSet LengthSet::range(int lo, int hi) {
  lo = std::max(lo, 0);
  hi = std::min(hi, 63);
  if (lo > hi) return LengthSet();
  const std::uint64_t upper =
      hi == 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << (hi + 1)) - 1;
  const std::uint64_t lower = (std::uint64_t{1} << lo) - 1;
  return LengthSet(upper & ~lower);
}

void LengthSet::insert(int length) {
  if (length < 0 || length > 63) {
    throw std::out_of_range("length " + std::to_string(length) +
                            " outside [0, 63]");
  }
  mask_ |= std::uint64_t{1} << length;
}

std::vector<int> LengthSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_vertex(mask_, [&](int l) { out.push_back(l); });
  return out;
}

std::string LengthSet::to_string() const {
  const std::vector<int> values = to_vector();
  std::string out = "{";
  std::size_t i = 0;
  bool first = true;
  while (i < values.size()) {
    std::size_t j = i;
    while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
    auto emit = [&](const std::string& s) {
      if (!first) out += ',';
      out += s;
      first = false;
    };
    if (j - i >= 2) {
      emit(std::to_string(values[i]) + ".." + std::to_string(values[j]));
    } else {
      for (std::size_t t = i; t <= j; ++t) emit(std::to_string(values[t]));
    }
    i = j + 1;
  }
  out += '}';
  return out;
}

VertexPair::VertexPair(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative vertex id");
  if (a == b) {
    throw std::invalid_argument("vertex pair needs two distinct vertices, got " +
                                std::to_string(a) + " twice");
  }
  u_ = std::min(a, b);
  v_ = std::max(a, b);
}

void VertexPair::check_order(int order) const {
  if (v_ >= order) {
    throw std::invalid_argument("vertex " + std::to_string(v_) +
                                " out of range for order " +
                                std::to_string(order));
  }
}

Graph::Graph(int n) : order_(n) {
  if (n < 0 || n > kMaxOrder) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " outside [0, 64]");
  }
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "} has an endpoint outside [0, " +
                                std::to_string(order_) + ")");
  }
  if (u == v) {
    throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  adj_[u] |= singleton(v);
  adj_[v] |= singleton(u);
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) {
    throw std::invalid_argument("edge endpoint out of range");
  }
  adj_[u] &= ~singleton(v);
  adj_[v] &= ~singleton(u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < order_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::min_degree() const {
  int best = order_ == 0 ? 0 : kMaxOrder;
  for (int v = 0; v < order_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::is_regular(int d) const {
  for (int v = 0; v < order_; ++v) {
    if (degree(v) != d) return false;
  }
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order_; ++u) {
    for_each_vertex(adj_[u] & ~full_set(u + 1),
                    [&](int v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::array<int, kMaxOrder> index{};
  int next = 0;
  for_each_vertex(keep, [&](int v) { index[v] = next++; });
  Graph h(next);
  for_each_vertex(keep, [&](int u) {
    for_each_vertex(adj_[u] & keep, [&](int v) {
      h.adj_[index[u]] |= singleton(index[v]);
    });
  });
  return h;
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order_) {
    throw std::invalid_argument("permutation size does not match graph order");
  }
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= order_ || contains(seen, p)) {
      throw std::invalid_argument("relabel argument is not a permutation");
    }
    seen |= singleton(p);
  }
  Graph h(order_);
  for (int u = 0; u < order_; ++u) {
    for_each_vertex(adj_[u], [&](int v) { h.adj_[perm[u]] |= singleton(perm[v]); });
  }
  return h;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.order_ != b.order_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.order_, b.adj_.begin());
}

VertexSet reachable(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = singleton(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected_within(const Graph& g, VertexSet s) {
  if (s == 0) return true;
  return reachable(g, lowest(s), s) == s;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1 || k > 3) {
    throw std::invalid_argument("connectivity k must be in {1, 2, 3}");
  }
  const int n = g.order();
  if (n <= k) return false;
  const VertexSet all = g.vertices();
  if (!is_connected_within(g, all)) return false;
  if (k >= 2) {
    for (int a = 0; a < n; ++a) {
      if (!is_connected_within(g, all & ~singleton(a))) return false;
    }
  }
  if (k >= 3) {
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (!is_connected_within(g, all & ~singleton(a) & ~singleton(b))) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> triangle_counts(const Graph& g) {
  std::vector<int> counts(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    int twice = 0;
    for_each_vertex(g.neighbors(v),
                    [&](int w) { twice += popcount(g.neighbors(v) & g.neighbors(w)); });
    counts[v] = twice / 2;
  }
  return counts;
}

}  // namespace hamconn
