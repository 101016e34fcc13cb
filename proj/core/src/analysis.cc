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

#include "hamconn/analysis.h"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "hamconn/cycle_spectrum.h"
#include "hamconn/graph6.h"
#include "hamconn/ham_connect.h"
#include "hamconn/oracle.h"
#include "hamconn/path_spectrum.h"

namespace hamconn {

Family parse_family(std::string_view text) {
  if (text == "fig1") return Family::kFig1;
  if (text == "h") return Family::kH;
  if (text == "f") return Family::kF;
  if (text == "ga") return Family::kGA;
  throw std::invalid_argument("unknown family '" + std::string(text) +
                              "' (expected fig1, h, f or ga)");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kFig1:
      return "fig1";
    case Family::kH:
      return "h";
    case Family::kF:
      return "f";
    case Family::kGA:
      return "ga";
  }
  return "?";
}

LabeledGraph build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kFig1:
      return smallest_counterexample(spec.variant);
    case Family::kH:
      return h_family(spec.k);
    case Family::kF:
      return f_family(spec.k);
    case Family::kGA:
      return gadget_GA();
  }
  throw std::invalid_argument("unknown family");
}

bool AnalysisReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PropertyCheck& c) { return c.holds; });
}

int resolve_vertex(const LabeledGraph& g, std::string_view name) {
  if (auto it = g.roles.find(std::string(name)); it != g.roles.end()) {
    return it->second;
  }
  int id = -1;
  const auto [end, ec] = std::from_chars(name.data(), name.data() + name.size(), id);
  if (ec != std::errc() || end != name.data() + name.size() || id < 0 ||
      id >= g.graph.order()) {
    throw std::invalid_argument("'" + std::string(name) +
                                "' is neither a role nor a vertex id");
  }
  return id;
}

AnalysisReport analyze(const LabeledGraph& g, const AnalysisRequest& request,
                       const std::optional<FamilySpec>& family) {
  AnalysisReport report;
  std::ostringstream out;
  const Graph& graph = g.graph;
  const int n = graph.order();
  out << "graph6\t" << encode_graph6(graph) << '\n';
  out << "order\t" << n << "\tedges\t" << graph.edge_count() << '\n';
  std::istringstream roles(g.role_sidecar());
  for (std::string line; std::getline(roles, line);) out << "role\t" << line << '\n';
  if (g.distinguished_pair) {
    out << "distinguished\t" << g.distinguished_pair->u() << ','
        << g.distinguished_pair->v() << '\n';
  }

  const bool fig1_asserted =
      family && family->family == Family::kFig1 && family->variant != Fig1Variant::kBoth;
  auto check = [&](std::string name, bool holds) {
    report.checks.push_back({name, holds});
  };

  if (request.hamconn) {
    const bool hc = request.use_oracle ? oracle::ham_connected_naive(graph)
                                       : is_hamiltonian_connected(graph);
    out << "hamconn\t" << (hc ? "true" : "false") << '\n';
    if (fig1_asserted || (family && (family->family == Family::kH ||
                                     family->family == Family::kF))) {
      check("hamiltonian-connected", hc);
    }
  }

  if (request.pathspec) {
    const VertexPair pair(resolve_vertex(g, request.pathspec->first),
                          resolve_vertex(g, request.pathspec->second));
    const LengthSet lengths = request.use_oracle
                                  ? oracle::all_path_lengths_naive(graph, pair)
                                  : path_length_set(graph, pair);
    const LengthSet missing = LengthSet::range(1, n - 1) - lengths;
    out << "pathspec\t" << pair.u() << ',' << pair.v() << "\tlengths\t"
        << lengths.to_string() << "\tmissing\t" << missing.to_string() << '\n';
    if (fig1_asserted && pair == VertexPair(2, 3)) {
      check("no path of length 4 between 3 and 4", !lengths.contains(4));
    }
    if (family && family->family == Family::kH && g.distinguished_pair &&
        pair == *g.distinguished_pair) {
      const LengthSet forbidden = h_family_forbidden_lengths(family->k);
      check("pair (a,c) misses " + forbidden.to_string(),
            (lengths & forbidden).empty());
    }
  }

  if (request.cyclespec || request.gaps) {
    const CycleSpectrum spectrum = request.use_oracle
                                       ? oracle::all_cycle_lengths_naive(graph)
                                       : cycle_spectrum(graph);
    if (request.cyclespec) {
      out << "cyclespec\t" << spectrum.to_string() << '\n';
      if (family && family->family == Family::kF) {
        const LengthSet expected = f_family_expected_spectrum(family->k);
        check("cycle spectrum equals " + expected.to_string(), spectrum == expected);
      }
    }
    if (request.gaps) {
      const SpectrumGaps gaps = spectrum_gap_metrics(spectrum, std::max(n, 1));
      out << "gaps\tcardinality\t" << gaps.cardinality << "\tlongest_run\t"
          << gaps.longest_run << "\tratio\t" << gaps.run_ratio << '\n';
    }
  }

  for (const PropertyCheck& c : report.checks) {
    out << "check\t" << c.name << '\t' << (c.holds ? "ok" : "FAIL") << '\n';
  }
  report.text = out.str();
  return report;
}

}  // namespace hamconn
