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

#ifndef HAMCONN_GRAPH_H_
#define HAMCONN_GRAPH_H_

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hamconn {

// A set of vertices of a graph with at most 64 vertices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxOrder = 64;

constexpr VertexSet singleton(int v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr int lowest(VertexSet s) { return std::countr_zero(s); }
// All vertices 0..n-1.
constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Calls fn(v) for every member of s in ascending order.
template <class Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    fn(lowest(s));
    s &= s - 1;
  }
}

// A set of non-negative integers below 64. Used for path lengths and cycle
// lengths, both counted in edges.
class LengthSet {
 public:
  constexpr LengthSet() = default;
  constexpr explicit LengthSet(std::uint64_t mask) : mask_(mask) {}

  // All lengths in [lo, hi]; empty when lo > hi.
  static LengthSet range(int lo, int hi);

  constexpr bool contains(int length) const {
    return length >= 0 && length < 64 && ((mask_ >> length) & 1U);
  }
  void insert(int length);
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr std::uint64_t mask() const { return mask_; }
  int min() const { return std::countr_zero(mask_); }
  int max() const { return 63 - std::countl_zero(mask_); }

  // True when every member of other is also in *this.
  constexpr bool includes(LengthSet other) const {
    return (other.mask_ & ~mask_) == 0;
  }

  std::vector<int> to_vector() const;
  // Compact form with runs of three or more collapsed, e.g. "{4,5,8..12}".
  std::string to_string() const;

  LengthSet operator|(LengthSet o) const { return LengthSet(mask_ | o.mask_); }
  LengthSet operator&(LengthSet o) const { return LengthSet(mask_ & o.mask_); }
  // Set difference.
  LengthSet operator-(LengthSet o) const { return LengthSet(mask_ & ~o.mask_); }
  LengthSet& operator|=(LengthSet o) {
    mask_ |= o.mask_;
    return *this;
  }
  friend constexpr bool operator==(LengthSet, LengthSet) = default;

 private:
  std::uint64_t mask_ = 0;
};

// An unordered pair of distinct vertices, stored with u < v.
class VertexPair {
 public:
  // Throws std::invalid_argument when a == b or either is negative.
  VertexPair(int a, int b);

  int u() const { return u_; }
  int v() const { return v_; }
  // Throws std::invalid_argument unless both endpoints are below order.
  void check_order(int order) const;

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;

 private:
  int u_;
  int v_;
};

using Edge = std::pair<int, int>;

// Simple undirected graph on at most 64 vertices with one adjacency word per
// vertex. Immutable once built except through add_edge.
class Graph {
 public:
  Graph() = default;
  // Edgeless graph on n vertices. Throws std::invalid_argument if n is
  // outside [0, 64].
  explicit Graph(int n);

  // Throws std::invalid_argument on loops, endpoints >= n, or n > 64.
  // Duplicate edges are merged.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return order_; }
  int edge_count() const;
  VertexSet vertices() const { return full_set(order_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool has_edge(int u, int v) const { return contains(adj_[u], v); }
  int min_degree() const;
  int max_degree() const;
  // True when every vertex has degree d.
  bool is_regular(int d) const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  // Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  // Graph on popcount(keep) vertices, relabelled in ascending order.
  Graph induced(VertexSet keep) const;
  // Vertex v of *this becomes perm[v].
  Graph relabel(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  int order_ = 0;
  std::array<VertexSet, kMaxOrder> adj_{};
};

// Vertices reachable from start using only vertices in allowed. start must be
// in allowed.
VertexSet reachable(const Graph& g, int start, VertexSet allowed);

// True when the subgraph induced by s is connected. The empty set counts as
// connected.
bool is_connected_within(const Graph& g, VertexSet s);

inline bool is_connected(const Graph& g) {
  return is_connected_within(g, g.vertices());
}

// True iff g has more than k vertices and stays connected after deleting any
// set of fewer than k vertices. Brute force over all vertex subsets of size
// below k; k must be in {1, 2, 3}.
bool is_k_connected(const Graph& g, int k);

// Number of triangles through each vertex.
std::vector<int> triangle_counts(const Graph& g);

}  // namespace hamconn

#endif  // HAMCONN_GRAPH_H_
