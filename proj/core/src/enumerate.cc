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

#include "hamconn/enumerate.h"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "hamconn/isomorphism.h"

namespace hamconn {
namespace {

using BucketKey = std::vector<int>;

BucketKey bucket_key(const Graph& g) {
  const int n = g.order();
  BucketKey key{g.edge_count()};
  std::vector<int> degrees(n);
  for (int v = 0; v < n; ++v) degrees[v] = g.degree(v);
  std::vector<int> sorted = degrees;
  std::sort(sorted.begin(), sorted.end());
  key.insert(key.end(), sorted.begin(), sorted.end());

  std::vector<int> triangles = triangle_counts(g);
  std::sort(triangles.begin(), triangles.end());
  key.insert(key.end(), triangles.begin(), triangles.end());

  // Per vertex: degree followed by its neighbours' sorted degrees, packed
  // base 64 into one int for n <= 8.
  std::vector<long long> profiles(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> around;
    for_each_vertex(g.neighbors(v), [&](int w) { around.push_back(degrees[w]); });
    std::sort(around.begin(), around.end());
    long long p = degrees[v];
    for (int d : around) p = p * 16 + d;
    profiles[v] = p;
  }
  std::sort(profiles.begin(), profiles.end());
  for (long long p : profiles) {
    key.push_back(static_cast<int>(p >> 31));
    key.push_back(static_cast<int>(p & 0x7fffffff));
  }
  return key;
}

// Isomorphism-free collection in deterministic bucket order.
class ClassSet {
 public:
  // Returns true when g was new.
  bool insert(const Graph& g) {
    auto& bucket = buckets_[bucket_key(g)];
    for (const Graph& h : bucket) {
      if (are_isomorphic(g, h)) return false;
    }
    bucket.push_back(g);
    return true;
  }

  std::vector<Graph> take() {
    std::vector<Graph> out;
    for (auto& [key, bucket] : buckets_) {
      for (Graph& g : bucket) out.push_back(std::move(g));
    }
    buckets_.clear();
    return out;
  }

 private:
  std::map<BucketKey, std::vector<Graph>> buckets_;
};

// Every graph of order m + 1 arises from a class of order m by attaching a
// vertex of minimum degree, so only those extensions are generated.
std::vector<Graph> extend_all(const std::vector<Graph>& parents,
                              const std::function<bool(const Graph&)>& keep) {
  ClassSet classes;
  for (const Graph& parent : parents) {
    const int m = parent.order();
    for (VertexSet hood = 0; hood < (VertexSet{1} << m); ++hood) {
      const int new_degree = popcount(hood);
      bool minimal = true;
      for (int v = 0; v < m && minimal; ++v) {
        const int d = parent.degree(v) + (contains(hood, v) ? 1 : 0);
        if (d < new_degree) minimal = false;
      }
      if (!minimal) continue;
      Graph g(m + 1);
      for (const auto& [u, v] : parent.edges()) g.add_edge(u, v);
      for_each_vertex(hood, [&](int v) { g.add_edge(v, m); });
      if (!keep(g)) continue;
      classes.insert(g);
    }
  }
  return classes.take();
}

}  // namespace

std::vector<Graph> enumerate_graphs(const EnumFilter& filter) {
  if (filter.order < 0 || filter.order > kMaxEnumOrder) {
    throw std::invalid_argument("enumeration supports orders 0.." +
                                std::to_string(kMaxEnumOrder) + ", got " +
                                std::to_string(filter.order));
  }
  if (filter.min_degree < 0) {
    throw std::invalid_argument("minimum degree must be non-negative");
  }
  if (filter.connectivity < 0 || filter.connectivity > 3) {
    throw std::invalid_argument("connectivity must be in [0, 3]");
  }
  auto passes = [&filter](const Graph& g) {
    if (g.min_degree() < filter.min_degree) return false;
    if (filter.connectivity > 0 && !is_k_connected(g, filter.connectivity)) {
      return false;
    }
    return true;
  };

  if (filter.order == 0) {
    Graph empty(0);
    return passes(empty) ? std::vector<Graph>{empty} : std::vector<Graph>{};
  }
  std::vector<Graph> level{Graph(1)};
  for (int m = 1; m < filter.order - 1; ++m) {
    level = extend_all(level, [](const Graph&) { return true; });
  }
  if (filter.order == 1) {
    return passes(level.front()) ? level : std::vector<Graph>{};
  }
  return extend_all(level, passes);
}

}  // namespace hamconn
