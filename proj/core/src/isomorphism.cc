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

#include "hamconn/isomorphism.h"

#include <algorithm>
#include <map>

namespace hamconn {
namespace {

using Colouring = std::vector<int>;

// Refines both colourings in lockstep until the number of colours stops
// growing. Colour ids are shared so equal ids mean equal signatures.
void refine(const Graph& g, const Graph& h, Colouring& cg, Colouring& ch) {
  int classes = 0;
  while (true) {
    std::map<std::vector<int>, int> table;
    auto signature = [](const Graph& x, const Colouring& c, int v) {
      std::vector<int> sig{c[v]};
      for_each_vertex(x.neighbors(v), [&](int w) { sig.push_back(c[w]); });
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<int>> sg(g.order()), sh(h.order());
    for (int v = 0; v < g.order(); ++v) {
      sg[v] = signature(g, cg, v);
      table.emplace(sg[v], 0);
    }
    for (int v = 0; v < h.order(); ++v) {
      sh[v] = signature(h, ch, v);
      table.emplace(sh[v], 0);
    }
    int next = 0;
    for (auto& [sig, id] : table) id = next++;
    for (int v = 0; v < g.order(); ++v) cg[v] = table[sg[v]];
    for (int v = 0; v < h.order(); ++v) ch[v] = table[sh[v]];
    if (next == classes) return;
    classes = next;
  }
}

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, const Colouring& cg,
          const Colouring& ch)
      : g_(g), h_(h), cg_(cg), ch_(ch), map_(g.order(), -1) {
    for (int v = 0; v < g.order(); ++v) {
      class_size_[cg[v]] += 1;
    }
  }

  bool run() { return extend(0); }
  std::vector<int> mapping() const { return map_; }

 private:
  // Unmapped vertex of g with the most mapped neighbours; ties go to the
  // smaller colour class.
  int pick() const {
    int best = -1;
    int best_links = -1;
    int best_class = 0;
    for_each_vertex(g_.vertices() & ~mapped_g_, [&](int v) {
      const int links = popcount(g_.neighbors(v) & mapped_g_);
      const int size = class_size_.at(cg_[v]);
      if (links > best_links || (links == best_links && size < best_class)) {
        best = v;
        best_links = links;
        best_class = size;
      }
    });
    return best;
  }

  bool consistent(int v, int w) const {
    VertexSet image = 0;
    for_each_vertex(g_.neighbors(v) & mapped_g_,
                    [&](int u) { image |= singleton(map_[u]); });
    return image == (h_.neighbors(w) & used_h_);
  }

  bool extend(int depth) {
    if (depth == g_.order()) return true;
    const int v = pick();
    for (int w = 0; w < h_.order(); ++w) {
      if (contains(used_h_, w) || ch_[w] != cg_[v]) continue;
      if (!consistent(v, w)) continue;
      map_[v] = w;
      mapped_g_ |= singleton(v);
      used_h_ |= singleton(w);
      if (extend(depth + 1)) return true;
      map_[v] = -1;
      mapped_g_ &= ~singleton(v);
      used_h_ &= ~singleton(w);
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  const Colouring& cg_;
  const Colouring& ch_;
  std::vector<int> map_;
  std::map<int, int> class_size_;
  VertexSet mapped_g_ = 0;
  VertexSet used_h_ = 0;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  Colouring cg(g.order()), ch(h.order());
  for (int v = 0; v < g.order(); ++v) cg[v] = g.degree(v);
  for (int v = 0; v < h.order(); ++v) ch[v] = h.degree(v);
  refine(g, h, cg, ch);

  Colouring sorted_g = cg, sorted_h = ch;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return std::nullopt;

  Matcher matcher(g, h, cg, ch);
  if (!matcher.run()) return std::nullopt;
  return matcher.mapping();
}

}  // namespace hamconn
