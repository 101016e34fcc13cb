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

#include "hamconn/cycle_spectrum.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "search_bounds.h"

namespace hamconn {
namespace {

class AnchoredCycleSearch {
 public:
  explicit AnchoredCycleSearch(const Graph& g)
      : g_(g), all_lengths_(LengthSet::range(3, g.order())) {}

  CycleSpectrum run() {
    for (int anchor = 0; anchor + 3 <= g_.order() && !done(); ++anchor) {
      anchor_ = anchor;
      // Only vertices above the anchor may appear on its cycles.
      above_ = g_.vertices() & ~full_set(anchor + 1);
      extend(anchor, singleton(anchor), 0);
    }
    return found_;
  }

 private:
  bool done() const { return found_ == all_lengths_; }

  void extend(int last, VertexSet on_path, int length) {
    if (done()) return;
    if (length >= 2 && g_.has_edge(last, anchor_)) found_.insert(length + 1);
    const VertexSet allowed = above_ & ~on_path;
    const TargetReach reach =
        reach_target(g_, last, g_.neighbors(anchor_) & allowed, allowed);
    if (!reach.reachable()) return;
    // A closing edge back to the anchor adds one to the path length.
    const LengthSet possible = LengthSet::range(length + 1 + reach.distance,
                                                length + 1 + reach.size());
    if ((possible - found_).empty()) return;
    for_each_vertex(g_.neighbors(last) & reach.component, [&](int next) {
      extend(next, on_path | singleton(next), length + 1);
    });
  }

  const Graph& g_;
  const LengthSet all_lengths_;
  LengthSet found_;
  int anchor_ = 0;
  VertexSet above_ = 0;
};

}  // namespace

CycleSpectrum cycle_spectrum(const Graph& g) {
  if (g.order() > 63) {
    throw std::invalid_argument("cycle spectrum supports at most 63 vertices");
  }
  return AnchoredCycleSearch(g).run();
}

SpectrumGaps spectrum_gap_metrics(const CycleSpectrum& spectrum, int n) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  SpectrumGaps gaps;
  gaps.cardinality = spectrum.size();
  int run = 0;
  for (int l = 0; l < 64; ++l) {
    run = spectrum.contains(l) ? run + 1 : 0;
    gaps.longest_run = std::max(gaps.longest_run, run);
  }
  gaps.run_ratio = static_cast<double>(gaps.longest_run) / n;
  return gaps;
}

}  // namespace hamconn
