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

// Build a named family member, run the requested analyses and compare the
// results with the properties the family is known to have.

#ifndef HAMCONN_ANALYSIS_H_
#define HAMCONN_ANALYSIS_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamconn/constructions.h"

namespace hamconn {

enum class Family { kFig1, kH, kF, kGA };

struct FamilySpec {
  Family family = Family::kFig1;
  Fig1Variant variant = Fig1Variant::kBase;
  int k = 0;
};

// "fig1", "h", "f", "ga".
Family parse_family(std::string_view text);
std::string_view to_string(Family family);

// Throws std::invalid_argument for parameters the family rejects.
LabeledGraph build_family(const FamilySpec& spec);

struct AnalysisRequest {
  bool hamconn = false;
  // Endpoints as role names or vertex ids.
  std::optional<std::pair<std::string, std::string>> pathspec;
  bool cyclespec = false;
  bool gaps = false;
  // Use the naive reference implementations instead of the pruned searches.
  bool use_oracle = false;
};

struct PropertyCheck {
  std::string name;
  bool holds = false;
};

struct AnalysisReport {
  std::string text;
  std::vector<PropertyCheck> checks;

  bool all_hold() const;
};

// Resolves a role name, falling back to a decimal vertex id. Throws
// std::invalid_argument when neither matches a vertex of g.
int resolve_vertex(const LabeledGraph& g, std::string_view name);

// Runs the analyses on g. When `family` is given, the family's known
// properties that the analyses touch are checked and reported.
AnalysisReport analyze(const LabeledGraph& g, const AnalysisRequest& request,
                       const std::optional<FamilySpec>& family = std::nullopt);

inline AnalysisReport run_construct_and_analyze(const FamilySpec& family,
                                                const AnalysisRequest& request) {
  return analyze(build_family(family), request, family);
}

}  // namespace hamconn

#endif  // HAMCONN_ANALYSIS_H_
