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

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <vector>

#include "hamconn/constructions.h"
#include "hamconn/graph.h"
#include "hamconn/graph6.h"
#include "hamconn/isomorphism.h"
#include "test_util.h"

namespace hamconn {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

// Written straight from the format description: order byte, then the bits
// x(0,1) x(0,2) x(1,2) x(0,3) ... as a '0'/'1' string cut into sixes.
std::string reference_graph6(const std::vector<std::vector<bool>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::string bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits += adj[i][j] ? '1' : '0';
  }
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(63 + n));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    out += static_cast<char>(63 + std::stoi(bits.substr(k, 6), nullptr, 2));
  }
  return out;
}

std::vector<std::vector<bool>> matrix_of(const Graph& g) {
  std::vector<std::vector<bool>> m(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

bool symmetric_and_loopless(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.has_edge(u, u)) return false;
    for (int v = 0; v < g.order(); ++v) {
      if (g.has_edge(u, v) != g.has_edge(v, u)) return false;
    }
  }
  return true;
}

TEST(FromEdges, CompleteGraph) {
  const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(k4.edge_count(), 6);
  EXPECT_TRUE(k4.is_regular(3));
}

TEST(FromEdges, EdgelessAndDuplicates) {
  const Graph g = Graph::from_edges(3, {});
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edge_count(), 0);
  const Graph d = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(d.edge_count(), 1);
}

TEST(FromEdges, SmallestCounterexampleIsCubic) {
  const Graph g = Graph::from_edges(
      8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 6}, {3, 7}, {4, 5},
          {4, 7}, {5, 6}, {6, 7}});
  EXPECT_EQ(g.edge_count(), 12);
  EXPECT_TRUE(g.is_regular(3));
}

TEST(FromEdges, Errors) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph::from_edges(65, {}), std::invalid_argument);
  EXPECT_NO_THROW(Graph::from_edges(64, {{0, 63}}));
}

TEST(FromEdges, TinyGraphsAreValid) {
  EXPECT_TRUE(symmetric_and_loopless(Graph(0)));
  EXPECT_TRUE(symmetric_and_loopless(Graph(1)));
}

TEST(VertexPairTest, NormalisesAndRejects) {
  const VertexPair p(5, 2);
  EXPECT_EQ(p.u(), 2);
  EXPECT_EQ(p.v(), 5);
  EXPECT_THROW(VertexPair(3, 3), std::invalid_argument);
  EXPECT_THROW(p.check_order(5), std::invalid_argument);
}

TEST(LengthSetTest, FormattingAndRanges) {
  LengthSet s = LengthSet::range(9, 18);
  s.insert(4);
  s.insert(5);
  s.insert(8);
  EXPECT_EQ(s.to_string(), "{4,5,8..18}");
  EXPECT_EQ(LengthSet().to_string(), "{}");
  EXPECT_EQ(LengthSet::range(0, 63).size(), 64);
  EXPECT_TRUE(LengthSet::range(5, 4).empty());
  EXPECT_THROW(s.insert(64), std::out_of_range);
}

TEST(Graph6, TrivialOrders) {
  EXPECT_EQ(decode_graph6("?").order(), 0);
  const Graph one = decode_graph6("@");
  EXPECT_EQ(one.order(), 1);
  EXPECT_EQ(one.edge_count(), 0);
  EXPECT_EQ(encode_graph6(Graph(0)), "?");
  EXPECT_EQ(encode_graph6(Graph(1)), "@");
}

TEST(Graph6, K2MatchesReferenceEncoder) {
  const Graph k2 = complete(2);
  EXPECT_EQ(reference_graph6(matrix_of(k2)), "A_");
  EXPECT_EQ(encode_graph6(k2), "A_");
}

TEST(Graph6, AgreesWithReferenceEncoderOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 40);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) g.add_edge(u, v);
      }
    }
    ASSERT_EQ(encode_graph6(g), reference_graph6(matrix_of(g)));
  }
}

TEST(Graph6, RoundTripOnCorpusAndConstructions) {
  std::vector<Graph> corpus = testing::all_graphs_up_to(6);
  for (auto v : {Fig1Variant::kBase, Fig1Variant::kPlusE1, Fig1Variant::kPlusE2,
                 Fig1Variant::kBoth}) {
    corpus.push_back(smallest_counterexample(v).graph);
  }
  for (int k = 0; k <= 3; ++k) corpus.push_back(h_family(k).graph);
  for (int k = 2; k <= 5; ++k) corpus.push_back(f_family(k).graph);
  corpus.push_back(gadget_GA().graph);
  corpus.push_back(complete(62));
  for (const Graph& g : corpus) {
    ASSERT_EQ(decode_graph6(encode_graph6(g)), g) << encode_graph6(g);
    ASSERT_TRUE(symmetric_and_loopless(decode_graph6(encode_graph6(g))));
  }
}

TEST(Graph6, MalformedInput) {
  EXPECT_THROW(decode_graph6(""), Graph6Error);
  EXPECT_THROW(decode_graph6("A"), Graph6Error);        // missing data byte
  EXPECT_THROW(decode_graph6("A__"), Graph6Error);      // one byte too many
  EXPECT_THROW(decode_graph6("A "), Graph6Error);       // byte below 63
  EXPECT_THROW(decode_graph6("A\x7f"), Graph6Error);    // byte above 126
  EXPECT_THROW(decode_graph6("~?@A"), Graph6Error);     // long form
  EXPECT_THROW(encode_graph6(Graph(63)), Graph6Error);
}

TEST(Graph6, PayloadStripsHeaderAndCarriageReturn) {
  EXPECT_EQ(graph6_payload(">>graph6<<A_\r"), "A_");
  EXPECT_EQ(graph6_payload(">>graph6<<"), "");
  EXPECT_EQ(graph6_payload("C~"), "C~");
}

// Plain adjacency-list connectivity used to cross-check is_k_connected.
bool connected_without(const Graph& g, const std::vector<int>& removed) {
  std::vector<bool> gone(g.order(), false);
  for (int r : removed) gone[r] = true;
  int start = -1, alive = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!gone[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<int> stack{start};
  seen[start] = true;
  int count = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++count;
    for (int w = 0; w < g.order(); ++w) {
      if (g.has_edge(v, w) && !gone[w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return count == alive;
}

TEST(KConnected, Examples) {
  EXPECT_TRUE(is_k_connected(complete(4), 3));
  EXPECT_FALSE(is_k_connected(path(4), 2));
  EXPECT_TRUE(is_k_connected(path(4), 1));
  EXPECT_FALSE(is_k_connected(complete(3), 3));  // needs more than k vertices
  EXPECT_THROW(is_k_connected(complete(3), 4), std::invalid_argument);

  const Graph base = smallest_counterexample().graph;
  bool brute = connected_without(base, {});
  for (int a = 0; a < 8; ++a) {
    brute = brute && connected_without(base, {a});
    for (int b = a + 1; b < 8; ++b) brute = brute && connected_without(base, {a, b});
  }
  EXPECT_TRUE(brute);
  EXPECT_TRUE(is_k_connected(base, 3));
}

TEST(KConnected, MonotoneAndMatchesIndependentCheck) {
  for (const Graph& g : testing::all_graphs_up_to(6)) {
    for (int k = 2; k <= 3; ++k) {
      if (is_k_connected(g, k)) ASSERT_TRUE(is_k_connected(g, k - 1));
    }
    const int n = g.order();
    bool two = n > 2 && connected_without(g, {});
    for (int a = 0; a < n && two; ++a) two = connected_without(g, {a});
    ASSERT_EQ(is_k_connected(g, 2), two) << encode_graph6(g);
  }
}

TEST(Isomorphism, RelabelingIsAnIsomorphism) {
  std::mt19937_64 rng(11);
  std::vector<Graph> corpus = testing::all_graphs_up_to(6);
  corpus.push_back(h_family(0).graph);
  corpus.push_back(f_family(2).graph);
  for (const Graph& g : corpus) {
    const Graph h = g.relabel(testing::random_permutation(rng, g.order()));
    const auto map = find_isomorphism(g, h);
    ASSERT_TRUE(map.has_value());
    for (int u = 0; u < g.order(); ++u) {
      for (int v = 0; v < g.order(); ++v) {
        ASSERT_EQ(g.has_edge(u, v), h.has_edge((*map)[u], (*map)[v]));
      }
    }
  }
}

TEST(Isomorphism, CycleVersusTwoTriangles) {
  const Graph two_triangles =
      Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(are_isomorphic(cycle(6), two_triangles));
}

TEST(Isomorphism, RegularGraphsNeedBacktracking) {
  // K_{3,3} and the triangular prism are both cubic on six vertices.
  const Graph k33 = Graph::from_edges(
      6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  const Graph prism = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(are_isomorphic(k33, prism));
}

// The two single-chord variants are swapped by 3<->4, 5<->6, 7<->8, which
// maps the base edge set to itself and chord {3,8} to chord {4,7}.
TEST(Isomorphism, SingleChordVariantsAreIsomorphic) {
  const Graph e1 = smallest_counterexample(Fig1Variant::kPlusE1).graph;
  const Graph e2 = smallest_counterexample(Fig1Variant::kPlusE2).graph;
  const std::vector<int> swap = {0, 1, 3, 2, 5, 4, 7, 6};
  EXPECT_EQ(e1.relabel(swap), e2);
  EXPECT_TRUE(are_isomorphic(e1, e2));
  EXPECT_FALSE(are_isomorphic(smallest_counterexample().graph, e1));
}

TEST(Isomorphism, EquivalenceRelationOnSmallCorpus) {
  const std::vector<Graph> corpus = testing::all_graphs_up_to(5);
  for (const Graph& g : corpus) ASSERT_TRUE(are_isomorphic(g, g));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      ASSERT_EQ(are_isomorphic(corpus[i], corpus[j]),
                are_isomorphic(corpus[j], corpus[i]));
      // Distinct classes from the enumerator.
      ASSERT_EQ(are_isomorphic(corpus[i], corpus[j]), i == j);
    }
  }
  // Transitivity on relabelled triples.
  std::mt19937_64 rng(3);
  for (const Graph& g : corpus) {
    const Graph a = g.relabel(testing::random_permutation(rng, g.order()));
    const Graph b = a.relabel(testing::random_permutation(rng, g.order()));
    ASSERT_TRUE(are_isomorphic(g, a) && are_isomorphic(a, b) && are_isomorphic(g, b));
  }
}

}  // namespace
}  // namespace hamconn
