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

#include "hamconn/constructions.h"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hamconn/isomorphism.h"

namespace hamconn {
namespace {

constexpr std::array<std::string_view, 7> kPatternRoles = {"a", "b", "c", "d",
                                                           "e", "f", "g"};

// Edges of the seven-vertex expansion pattern among its own vertices.
constexpr std::array<std::pair<std::string_view, std::string_view>, 9>
    kPatternEdges = {{{"a", "b"},
                      {"a", "c"},
                      {"b", "c"},
                      {"a", "f"},
                      {"f", "g"},
                      {"g", "d"},
                      {"d", "c"},
                      {"b", "e"},
                      {"d", "e"}}};

VertexSet pattern_vertices(const LabeledGraph& h) {
  VertexSet s = 0;
  for (auto name : kPatternRoles) s |= singleton(h.role(name));
  return s;
}

// The expansion needs a..g to induce exactly the pattern, with f, g and e each
// carrying one edge that leaves the pattern and a, b, c, d carrying none.
void check_expansion_pattern(const LabeledGraph& h) {
  const Graph& g = h.graph;
  const VertexSet inside = pattern_vertices(h);
  if (popcount(inside) != 7) {
    throw std::logic_error("expansion roles a..g are not distinct vertices");
  }
  int internal_edges = 0;
  for_each_vertex(inside, [&](int v) {
    internal_edges += popcount(g.neighbors(v) & inside);
  });
  if (internal_edges / 2 != static_cast<int>(kPatternEdges.size())) {
    throw std::logic_error("expansion pattern has the wrong number of edges");
  }
  for (const auto& [x, y] : kPatternEdges) {
    if (!g.has_edge(h.role(x), h.role(y))) {
      throw std::logic_error("expansion pattern is missing edge " +
                             std::string(x) + std::string(y));
    }
  }
  for (auto name : kPatternRoles) {
    const int outside = popcount(g.neighbors(h.role(name)) & ~inside);
    const bool attached = name == "e" || name == "f" || name == "g";
    if (outside != (attached ? 1 : 0)) {
      throw std::logic_error("expansion vertex " + std::string(name) +
                             " has the wrong external degree");
    }
  }
}

void expand(LabeledGraph& h) {
  const int n = h.graph.order();
  const int a = h.role("a");
  const int b = h.role("b");
  const int c = h.role("c");
  const int a1 = n, a2 = n + 1, b1 = n + 2, b2 = n + 3, c1 = n + 4, c2 = n + 5;

  const Graph before_pattern = h.graph.induced(pattern_vertices(h));

  Graph g(n + 6);
  for (const auto& [u, v] : h.graph.edges()) g.add_edge(u, v);
  g.remove_edge(a, c);
  g.remove_edge(b, c);
  const std::array<Edge, 11> added = {{{a, a1},
                                       {a1, c},
                                       {a1, a2},
                                       {a2, b2},
                                       {a2, c2},
                                       {b1, b},
                                       {b1, c1},
                                       {b1, b2},
                                       {b2, c2},
                                       {c1, c},
                                       {c1, c2}}};
  for (const auto& [u, v] : added) g.add_edge(u, v);
  h.graph = g;

  // Old a, b, d, e, f drop out of the pattern; old c becomes the new g.
  h.roles["a"] = a2;
  h.roles["b"] = b2;
  h.roles["c"] = c2;
  h.roles["d"] = c1;
  h.roles["e"] = b1;
  h.roles["f"] = a1;
  h.roles["g"] = c;
  h.distinguished_pair = VertexPair(a2, c2);

  check_expansion_pattern(h);
  if (!are_isomorphic(before_pattern, h.graph.induced(pattern_vertices(h)))) {
    throw std::logic_error("expanded pattern is not isomorphic to the old one");
  }
}

}  // namespace

int LabeledGraph::role(std::string_view name) const {
  auto it = roles.find(std::string(name));
  if (it == roles.end()) {
    throw std::out_of_range("unknown role '" + std::string(name) + "'");
  }
  return it->second;
}

std::string LabeledGraph::role_sidecar() const {
  std::vector<std::pair<int, std::string>> by_id;
  by_id.reserve(roles.size());
  for (const auto& [name, id] : roles) by_id.emplace_back(id, name);
  std::sort(by_id.begin(), by_id.end());
  std::string out;
  for (const auto& [id, name] : by_id) {
    out += name + "=" + std::to_string(id) + "\n";
  }
  return out;
}

std::string_view to_string(Fig1Variant variant) {
  switch (variant) {
    case Fig1Variant::kBase:
      return "base";
    case Fig1Variant::kPlusE1:
      return "e1";
    case Fig1Variant::kPlusE2:
      return "e2";
    case Fig1Variant::kBoth:
      return "both";
  }
  return "?";
}

Fig1Variant parse_fig1_variant(std::string_view text) {
  if (text == "base") return Fig1Variant::kBase;
  if (text == "e1") return Fig1Variant::kPlusE1;
  if (text == "e2") return Fig1Variant::kPlusE2;
  if (text == "both") return Fig1Variant::kBoth;
  throw std::invalid_argument("unknown variant '" + std::string(text) +
                              "' (expected base, e1, e2 or both)");
}

LabeledGraph smallest_counterexample(Fig1Variant variant) {
  // 1-based labels as drawn.
  std::vector<Edge> edges = {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 4},
                             {3, 7}, {4, 8}, {5, 6}, {5, 8}, {6, 7}, {7, 8}};
  if (variant == Fig1Variant::kPlusE1 || variant == Fig1Variant::kBoth) {
    edges.emplace_back(3, 8);
  }
  if (variant == Fig1Variant::kPlusE2 || variant == Fig1Variant::kBoth) {
    edges.emplace_back(4, 7);
  }
  for (auto& [u, v] : edges) {
    --u;
    --v;
  }
  LabeledGraph out;
  out.graph = Graph::from_edges(8, edges);
  for (int v = 0; v < 8; ++v) out.roles[std::to_string(v + 1)] = v;
  out.distinguished_pair = VertexPair(2, 3);
  return out;
}

LabeledGraph h0() {
  LabeledGraph out;
  for (int i = 0; i <= 8; ++i) out.roles["u" + std::to_string(i)] = i;
  const std::array<std::string_view, 7> named = {"f", "a", "b", "e", "c", "d", "g"};
  for (int i = 0; i < 7; ++i) out.roles[std::string(named[i])] = 9 + i;
  const int f = 9, a = 10, b = 11, e = 12, c = 13, d = 14, g = 15;
  out.graph = Graph::from_edges(
      16, {{7, 5}, {5, 4}, {4, 7}, {7, 8}, {8, 6}, {6, 5}, {g, d}, {d, c},
           {d, e}, {b, e}, {b, c}, {c, a}, {a, b}, {g, f}, {f, a}, {f, 2},
           {3, e}, {2, 3}, {0, 2}, {1, 3}, {6, 0}, {1, 4}, {0, 1}, {8, g}});
  out.distinguished_pair = VertexPair(a, c);
  check_expansion_pattern(out);
  return out;
}

LabeledGraph h_family(int k) {
  if (k < 0) throw std::invalid_argument("h_family needs k >= 0");
  if (16 + 6 * k > kMaxOrder) {
    throw std::invalid_argument("h_family(" + std::to_string(k) +
                                ") exceeds 64 vertices");
  }
  LabeledGraph h = h0();
  for (int round = 0; round < k; ++round) expand(h);
  return h;
}

LabeledGraph gadget_GA() {
  LabeledGraph out;
  out.graph = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 5}, {3, 4}, {4, 5}, {1, 3}, {0, 4}});
  for (int v = 0; v < 6; ++v) out.roles[std::to_string(v + 1)] = v;
  return out;
}

LabeledGraph f_family(int k) {
  if (k < 2) throw std::invalid_argument("f_family needs k >= 2");
  if (k > 10) throw std::invalid_argument("f_family supports k <= 10");
  const Graph gadget = gadget_GA().graph;
  auto id = [k](int i, int j) { return 6 * (((i - 1) % k + k) % k) + (j - 1); };
  LabeledGraph out;
  out.graph = Graph(6 * k);
  for (int i = 1; i <= k; ++i) {
    for (const auto& [u, v] : gadget.edges()) {
      out.graph.add_edge(id(i, u + 1), id(i, v + 1));
    }
    out.graph.add_edge(id(i, 3), id(i + 1, 1));
    out.graph.add_edge(id(i, 6), id(i + 1, 4));
    for (int j = 1; j <= 6; ++j) {
      out.roles["v" + std::to_string(i) + "_" + std::to_string(j)] = id(i, j);
    }
  }
  return out;
}

LengthSet f_family_expected_spectrum(int k) {
  LengthSet s = LengthSet::range(3 * k, 6 * k);
  s.insert(4);
  for (int m = 1; m <= k - 1; ++m) s.insert(3 * m + 2);
  return s;
}

LengthSet h_family_forbidden_lengths(int k) {
  LengthSet s;
  for (int l = 3; l <= 9 + 4 * k; l += 2) s.insert(l);
  return s;
}

}  // namespace hamconn
