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

#include "hamconn/graph6.h"

#include <vector>

namespace hamconn {
namespace {

constexpr int kBias = 63;

int triangle_bits(int n) { return n * (n - 1) / 2; }

}  // namespace

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 string");
  for (char c : text) {
    const int b = static_cast<unsigned char>(c);
    if (b < kBias || b > 126) {
      throw Graph6Error("byte " + std::to_string(b) + " outside [63, 126]");
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - kBias;
  if (n > kMaxGraph6Order) {
    throw Graph6Error("only the short graph6 form (n <= 62) is supported");
  }
  const int bits = triangle_bits(n);
  const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() != expected) {
    throw Graph6Error("graph6 length " + std::to_string(text.size()) +
                      " does not match order " + std::to_string(n) +
                      " (expected " + std::to_string(expected) + ")");
  }
  Graph g(n);
  int k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int group = static_cast<unsigned char>(text[1 + k / 6]) - kBias;
      if ((group >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) {
    throw Graph6Error("graph of order " + std::to_string(n) +
                      " exceeds the short graph6 form");
  }
  const int bits = triangle_bits(n);
  std::string out(1 + static_cast<std::size_t>((bits + 5) / 6), '\0');
  out[0] = static_cast<char>(kBias + n);
  std::vector<int> groups(out.size() - 1, 0);
  int k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      if (g.has_edge(u, v)) groups[k / 6] |= 1 << (5 - k % 6);
    }
  }
  for (std::size_t i = 0; i < groups.size(); ++i) {
    out[i + 1] = static_cast<char>(kBias + groups[i]);
  }
  return out;
}

std::string_view graph6_payload(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  return line;
}

}  // namespace hamconn
