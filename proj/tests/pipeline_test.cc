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

#include <sstream>
#include <string>

#include "hamconn/analysis.h"
#include "hamconn/constructions.h"
#include "hamconn/enumerate.h"
#include "hamconn/graph6.h"
#include "hamconn/oracle.h"
#include "hamconn/pipeline.h"

namespace hamconn {
namespace {

std::string stream_of(int n, int connectivity) {
  std::string text;
  for (const Graph& g : enumerate_graphs({.order = n, .connectivity = connectivity})) {
    text += encode_graph6(g) + '\n';
  }
  return text;
}

FilterReport filter_text(const std::string& text, FilterOptions options = {}) {
  std::istringstream in(text);
  return run_filter(in, options);
}

TEST(Pipeline, SmallestCounterexample) {
  const std::string g6 = encode_graph6(smallest_counterexample().graph);
  const FilterReport report = filter_text(g6 + "\n");
  EXPECT_EQ(report.graphs_seen, 1U);
  EXPECT_EQ(report.ham_connected, 1U);
  EXPECT_EQ(report.counterexamples, 1U);
  ASSERT_EQ(report.flagged.size(), 1U);
  EXPECT_EQ(report.flagged[0].sequence, 1U);
  EXPECT_EQ(report.flagged[0].graph6, g6);
  EXPECT_EQ(report.flagged[0].failing_k, 5);
  EXPECT_EQ(report.flagged[0].failing_pair, VertexPair(2, 3));
  EXPECT_EQ(format_records(report), "flagged\t1\t" + g6 + "\t5\t2,3\nsummary\t1\t1\t1\t0\n");
}

TEST(Pipeline, EmptyInput) {
  const FilterReport report = filter_text("");
  EXPECT_EQ(report, FilterReport{});
  EXPECT_EQ(format_summary(report), "summary\t0\t0\t0\t0");
}

TEST(Pipeline, TableCountsUpToSeven) {
  const std::uint64_t expected[][3] = {
      {1, 1, 0}, {3, 1, 0}, {10, 3, 0}, {56, 13, 0}, {468, 116, 0}};
  for (int n = 3; n <= 7; ++n) {
    const FilterReport r = filter_text(stream_of(n, 2));
    EXPECT_EQ(r.graphs_seen, expected[n - 3][0]) << n;
    EXPECT_EQ(r.ham_connected, expected[n - 3][1]) << n;
    EXPECT_EQ(r.counterexamples, expected[n - 3][2]) << n;
  }
}

TEST(Pipeline, IndependentOfWorkersAndBatching) {
  const std::string text = stream_of(7, 2) + encode_graph6(smallest_counterexample().graph) + '\n';
  for (FilterMode mode : {FilterMode::kLast, FilterMode::kAny, FilterMode::kFull}) {
    FilterOptions base;
    base.mode = mode;
    const FilterReport reference = filter_text(text, base);
    const std::string reference_text = format_records(reference);
    for (int workers : {1, 2, 4, 32}) {
      for (std::size_t batch : {std::size_t{1}, std::size_t{7}, std::size_t{64}}) {
        FilterOptions o = base;
        o.workers = workers;
        o.batch_size = batch;
        const FilterReport r = filter_text(text, o);
        ASSERT_EQ(r, reference);
        ASSERT_EQ(format_records(r), reference_text);
      }
    }
  }
}

TEST(Pipeline, StagesCompose) {
  const std::string text = stream_of(7, 2);
  FilterOptions one;
  one.stage = Stage::kOne;
  const FilterReport first = filter_text(text, one);
  EXPECT_EQ(first.counterexamples, 0U);
  EXPECT_EQ(first.flagged.size(), first.ham_connected);
  std::string survivors;
  for (const FlaggedGraph& f : first.flagged) survivors += f.graph6 + '\n';

  FilterOptions two;
  two.stage = Stage::kTwo;
  const FilterReport second = filter_text(survivors, two);
  const FilterReport both = filter_text(text);
  EXPECT_EQ(second.graphs_seen, both.ham_connected);
  EXPECT_EQ(second.ham_connected, both.ham_connected);
  EXPECT_EQ(second.counterexamples, both.counterexamples);
}

TEST(Pipeline, StrictAndLenientInput) {
  const std::string text = "A_\nnot graph6\nBw\n";
  try {
    filter_text(text);
    FAIL() << "malformed line accepted";
  } catch (const FilterInputError& e) {
    EXPECT_EQ(e.line(), 2U);
  }
  FilterOptions lenient;
  lenient.lenient = true;
  const FilterReport r = filter_text(text, lenient);
  EXPECT_EQ(r.graphs_seen, 2U);
  EXPECT_EQ(r.skipped, 1U);
  EXPECT_EQ(r.ham_connected, 2U);  // K2 and K3
}

TEST(Pipeline, HeaderBlankLinesAndCarriageReturns) {
  const std::string g6 = encode_graph6(smallest_counterexample().graph);
  const FilterReport r = filter_text(">>graph6<<" + g6 + "\r\n\n");
  EXPECT_EQ(r.graphs_seen, 1U);
  EXPECT_EQ(r.counterexamples, 1U);
}

TEST(Pipeline, FlaggedCap) {
  const std::string g6 = encode_graph6(smallest_counterexample().graph) + '\n';
  FilterOptions o;
  o.max_flagged = 2;
  const FilterReport r = filter_text(g6 + g6 + g6 + g6, o);
  EXPECT_EQ(r.counterexamples, 4U);
  ASSERT_EQ(r.flagged.size(), 2U);
  EXPECT_EQ(r.flagged[1].sequence, 2U);
}

TEST(Pipeline, WitnessesRevalidateWithOracle) {
  std::string text = stream_of(8, 3);
  for (auto v : {Fig1Variant::kPlusE1, Fig1Variant::kBoth}) {
    text += encode_graph6(smallest_counterexample(v).graph) + '\n';
  }
  const FilterReport r = filter_text(text);
  ASSERT_FALSE(r.flagged.empty());
  for (const FlaggedGraph& f : r.flagged) {
    const Graph g = decode_graph6(f.graph6);
    ASSERT_TRUE(oracle::ham_connected_naive(g));
    ASSERT_TRUE(f.failing_k && f.failing_pair);
    const int n = g.order();
    ASSERT_GE(*f.failing_k, (n + 1) / 2 + 1);
    ASSERT_LE(*f.failing_k, n);
    ASSERT_FALSE(oracle::all_path_lengths_naive(g, *f.failing_pair).contains(*f.failing_k - 1));
  }
}

TEST(Pipeline, RejectsBadOptions) {
  FilterOptions o;
  o.workers = 0;
  EXPECT_THROW(filter_text("", o), std::invalid_argument);
  EXPECT_EQ(parse_stage("both"), Stage::kBoth);
  EXPECT_THROW(parse_stage("3"), std::invalid_argument);
}

TEST(Analysis, FamilyReports) {
  AnalysisRequest request;
  request.cyclespec = true;
  AnalysisReport f3 = run_construct_and_analyze({.family = Family::kF, .k = 3}, request);
  EXPECT_NE(f3.text.find("cyclespec\t{4,5,8..18}\n"), std::string::npos);
  EXPECT_TRUE(f3.all_hold());

  AnalysisReport ga = run_construct_and_analyze({.family = Family::kGA}, request);
  EXPECT_NE(ga.text.find("cyclespec\t{4,5}\n"), std::string::npos);

  AnalysisRequest path;
  path.hamconn = true;
  path.pathspec.emplace("a", "c");
  AnalysisReport h1 = run_construct_and_analyze({.family = Family::kH, .k = 1}, path);
  EXPECT_NE(h1.text.find("missing\t{3,5,7,9,11,13}"), std::string::npos) << h1.text;
  EXPECT_TRUE(h1.all_hold());

  AnalysisRequest fig;
  fig.hamconn = true;
  fig.pathspec.emplace("3", "4");
  fig.use_oracle = true;
  EXPECT_TRUE(run_construct_and_analyze({.family = Family::kFig1}, fig).all_hold());
  EXPECT_THROW(run_construct_and_analyze({.family = Family::kH, .k = 1},
                                         [] {
                                           AnalysisRequest r;
                                           r.pathspec.emplace("a", "zz");
                                           return r;
                                         }()),
               std::invalid_argument);
}

}  // namespace
}  // namespace hamconn
