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

// graph6 codec, short form only (n <= 62).
//
// Layout: one byte 63 + n, then the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups,
// each group offset by 63 and the last one zero-padded.

#ifndef HAMCONN_GRAPH6_H_
#define HAMCONN_GRAPH6_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "hamconn/graph.h"

namespace hamconn {

inline constexpr int kMaxGraph6Order = 62;
inline constexpr std::string_view kGraph6Header = ">>graph6<<";

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws Graph6Error on an empty line, a byte outside [63, 126], n > 62, or a
// length that does not match n.
Graph decode_graph6(std::string_view text);

// Throws Graph6Error if g has more than 62 vertices.
std::string encode_graph6(const Graph& g);

// Strips a trailing '\r' and a leading ">>graph6<<" header. Returns the
// remaining payload, which is empty for header-only and blank lines.
std::string_view graph6_payload(std::string_view line);

}  // namespace hamconn

#endif  // HAMCONN_GRAPH6_H_
