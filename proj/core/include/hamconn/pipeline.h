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

// Streaming two-stage filter over newline-delimited graph6.
//
// Stage 1 keeps hamiltonian-connected graphs; stage 2 applies a FilterMode.
// The reader thread decodes lines into batches, a pool of workers evaluates
// whole batches, and a reducer folds results back in input order, so reports
// do not depend on the number of workers.

#ifndef HAMCONN_PIPELINE_H_
#define HAMCONN_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hamconn/graph.h"
#include "hamconn/path_spectrum.h"

namespace hamconn {

enum class Stage { kOne, kTwo, kBoth };

std::string_view to_string(Stage stage);
// Accepts "1", "2", "both".
Stage parse_stage(std::string_view text);

struct FilterOptions {
  FilterMode mode = FilterMode::kLast;
  Stage stage = Stage::kBoth;
  int workers = 1;
  std::size_t batch_size = 64;
  // Skip undecodable lines instead of failing.
  bool lenient = false;
  // Stop recording flagged graphs after this many; counts are unaffected.
  std::optional<std::size_t> max_flagged;
};

struct FlaggedGraph {
  // 1-based position among the graphs of the input.
  std::uint64_t sequence = 0;
  std::string graph6;
  // Smallest failing k in the mode's window and a pair without a path of
  // k - 1 edges. Empty for stage-1-only runs and modes All and Full.
  std::optional<int> failing_k;
  std::optional<VertexPair> failing_pair;

  friend bool operator==(const FlaggedGraph&, const FlaggedGraph&) = default;
};

// counterexamples <= ham_connected <= graphs_seen.
//
// ham_connected counts stage-1 survivors; a stage-2-only run treats its input
// as already filtered and sets it to graphs_seen. counterexamples counts
// graphs passing stage 2 and stays 0 for stage-1-only runs. flagged lists the
// graphs that passed every stage that ran, in input order.
struct FilterReport {
  std::uint64_t graphs_seen = 0;
  std::uint64_t ham_connected = 0;
  std::uint64_t counterexamples = 0;
  std::uint64_t skipped = 0;
  std::vector<FlaggedGraph> flagged;

  friend bool operator==(const FilterReport&, const FilterReport&) = default;
};

class FilterInputError : public std::runtime_error {
 public:
  FilterInputError(std::uint64_t line, const std::string& message);
  std::uint64_t line() const { return line_; }

 private:
  std::uint64_t line_;
};

// Throws FilterInputError for an undecodable line unless options.lenient, and
// std::invalid_argument when options.workers < 1 or batch_size == 0.
FilterReport run_filter(std::istream& input, const FilterOptions& options);

// Outcome for a single graph, as computed by a worker.
struct GraphVerdict {
  bool ham_connected = false;
  bool passed = false;
  std::optional<int> failing_k;
  std::optional<VertexPair> failing_pair;
};

// Graphs with fewer than two vertices fail stage 1 and graphs with fewer
// than three fail stage 2.
GraphVerdict evaluate_graph(const Graph& g, const FilterOptions& options);

// Aligned human-readable report ending in the summary line.
std::string format_table(const FilterReport& report, const FilterOptions& options);
// One "flagged" record per line, then the summary line.
std::string format_records(const FilterReport& report);
// "summary\t<graphs>\t<ham-connected>\t<counterexamples>\t<skipped>".
std::string format_summary(const FilterReport& report);

}  // namespace hamconn

#endif  // HAMCONN_PIPELINE_H_
