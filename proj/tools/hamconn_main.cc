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

// hamconn: filter graph6 streams for hamiltonian-connected graphs and path
// length gaps, enumerate small graphs, and build/analyse named families.
//
// Exit codes: 0 success, 1 a known property failed to hold, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "hamconn/analysis.h"
#include "hamconn/enumerate.h"
#include "hamconn/graph6.h"
#include "hamconn/pipeline.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct FilterArgs {
  std::string mode = "last";
  std::string stage = "both";
  int workers = 1;
  std::size_t batch_size = 64;
  std::string input = "-";
  std::string output_flagged;
  bool lenient = false;
  std::optional<std::size_t> max_flagged;
  std::string format = "table";
};

struct EnumArgs {
  int n = 0;
  int min_degree = 0;
  int connectivity = 0;
};

struct FamilyArgs {
  std::string family;
  std::string variant = "base";
  int k = 0;
};

struct AnalyzeArgs {
  FamilyArgs family;
  std::string graph6;
  bool hamconn = false;
  std::string pathspec;
  bool cyclespec = false;
  bool gaps = false;
};

void add_family_options(CLI::App* cmd, FamilyArgs& args, bool required) {
  auto* opt = cmd->add_option("--family", args.family, "fig1, h, f or ga")
                  ->check(CLI::IsMember({"fig1", "h", "f", "ga"}));
  if (required) opt->required();
  cmd->add_option("--variant", args.variant, "fig1 variant: base, e1, e2, both")
      ->check(CLI::IsMember({"base", "e1", "e2", "both"}));
  cmd->add_option("--k", args.k, "family parameter for h and f");
}

hamconn::FamilySpec to_spec(const FamilyArgs& args) {
  hamconn::FamilySpec spec;
  spec.family = hamconn::parse_family(args.family);
  spec.variant = hamconn::parse_fig1_variant(args.variant);
  spec.k = args.k;
  if (spec.family == hamconn::Family::kF && args.k == 0) spec.k = 2;
  return spec;
}

int run_filter_command(const FilterArgs& args) {
  hamconn::FilterOptions options;
  options.mode = hamconn::parse_filter_mode(args.mode);
  options.stage = hamconn::parse_stage(args.stage);
  options.workers = args.workers;
  options.batch_size = args.batch_size;
  options.lenient = args.lenient;
  options.max_flagged = args.max_flagged;

  hamconn::FilterReport report;
  if (args.input == "-") {
    report = hamconn::run_filter(std::cin, options);
  } else {
    std::ifstream in(args.input);
    if (!in) {
      std::cerr << "cannot open " << args.input << '\n';
      return kExitInput;
    }
    report = hamconn::run_filter(in, options);
  }

  if (!args.output_flagged.empty()) {
    std::ofstream out(args.output_flagged);
    if (!out) {
      std::cerr << "cannot write " << args.output_flagged << '\n';
      return kExitInput;
    }
    for (const auto& f : report.flagged) out << f.graph6 << '\n';
  }
  std::cout << (args.format == "records" ? hamconn::format_records(report)
                                         : hamconn::format_table(report, options));
  return kExitOk;
}

int run_enum_command(const EnumArgs& args) {
  const auto graphs = hamconn::enumerate_graphs(
      {.order = args.n, .min_degree = args.min_degree, .connectivity = args.connectivity});
  for (const auto& g : graphs) std::cout << hamconn::encode_graph6(g) << '\n';
  return kExitOk;
}

int run_construct_command(const FamilyArgs& args, const std::string& roles_path) {
  const hamconn::LabeledGraph g = hamconn::build_family(to_spec(args));
  std::cout << hamconn::encode_graph6(g.graph) << '\n';
  if (!roles_path.empty()) {
    std::ofstream out(roles_path);
    if (!out) {
      std::cerr << "cannot write " << roles_path << '\n';
      return kExitInput;
    }
    out << g.role_sidecar();
  }
  return kExitOk;
}

int run_analyze_command(const AnalyzeArgs& args, bool use_oracle) {
  hamconn::AnalysisRequest request;
  request.hamconn = args.hamconn;
  request.cyclespec = args.cyclespec;
  request.gaps = args.gaps;
  request.use_oracle = use_oracle;
  if (!args.pathspec.empty()) {
    const auto comma = args.pathspec.find(',');
    if (comma == std::string::npos) {
      std::cerr << "--pathspec expects U,V\n";
      return kExitInput;
    }
    request.pathspec.emplace(args.pathspec.substr(0, comma),
                             args.pathspec.substr(comma + 1));
  }

  hamconn::AnalysisReport report;
  if (!args.graph6.empty()) {
    hamconn::LabeledGraph g;
    g.graph = hamconn::decode_graph6(hamconn::graph6_payload(args.graph6));
    report = hamconn::analyze(g, request);
  } else if (!args.family.family.empty()) {
    report = hamconn::run_construct_and_analyze(to_spec(args.family), request);
  } else {
    std::cerr << "analyze needs --family or --graph6\n";
    return kExitInput;
  }
  std::cout << report.text;
  return report.all_hold() ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian-connectedness and path/cycle length spectra of small graphs"};
  app.require_subcommand(1);

  FilterArgs filter_args;
  auto* filter = app.add_subcommand("filter", "Two-stage filter over graph6 input");
  filter->add_option("--mode", filter_args.mode, "all, full, any or last")
      ->check(CLI::IsMember({"all", "full", "any", "last"}));
  filter->add_option("--stage", filter_args.stage, "1, 2 or both")
      ->check(CLI::IsMember({"1", "2", "both"}));
  filter->add_option("--workers", filter_args.workers)->check(CLI::PositiveNumber);
  filter->add_option("--batch-size", filter_args.batch_size)->check(CLI::PositiveNumber);
  filter->add_option("--input", filter_args.input, "graph6 file or - for stdin");
  filter->add_option("--output-flagged", filter_args.output_flagged,
                     "write flagged graphs as graph6");
  filter->add_flag("--lenient", filter_args.lenient, "skip malformed lines");
  filter->add_option("--max-flagged", filter_args.max_flagged);
  filter->add_option("--format", filter_args.format, "table or records")
      ->check(CLI::IsMember({"table", "records"}));

  EnumArgs enum_args;
  auto* enumerate = app.add_subcommand("enum", "Enumerate graphs up to isomorphism (n <= 8)");
  enumerate->add_option("--n", enum_args.n)->required();
  enumerate->add_option("--min-degree", enum_args.min_degree);
  enumerate->add_option("--connectivity", enum_args.connectivity)
      ->check(CLI::Range(0, 3));

  FamilyArgs construct_args;
  std::string roles_path;
  auto* construct = app.add_subcommand("construct", "Print a family member as graph6");
  add_family_options(construct, construct_args, true);
  construct->add_option("--roles", roles_path, "write role=vertex_id sidecar");

  AnalyzeArgs analyze_args;
  AnalyzeArgs oracle_args;
  auto* analyze = app.add_subcommand("analyze", "Analyse a family member or graph6");
  auto* oracle = app.add_subcommand("oracle", "Same analyses with the naive reference code");
  for (auto [cmd, args] : {std::pair{analyze, &analyze_args}, std::pair{oracle, &oracle_args}}) {
    add_family_options(cmd, args->family, false);
    cmd->add_option("--graph6", args->graph6, "analyse this graph6 string instead");
    cmd->add_flag("--hamconn", args->hamconn);
    cmd->add_option("--pathspec", args->pathspec, "U,V as role names or ids");
    cmd->add_flag("--cyclespec", args->cyclespec);
    cmd->add_flag("--gaps", args->gaps);
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (*filter) return run_filter_command(filter_args);
    if (*enumerate) return run_enum_command(enum_args);
    if (*construct) return run_construct_command(construct_args, roles_path);
    if (*analyze) return run_analyze_command(analyze_args, false);
    if (*oracle) return run_analyze_command(oracle_args, true);
  } catch (const hamconn::FilterInputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const hamconn::Graph6Error& e) {
    std::cerr << "graph6 error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
