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

#ifndef HAMCONN_CYCLE_SPECTRUM_H_
#define HAMCONN_CYCLE_SPECTRUM_H_

#include "hamconn/graph.h"

namespace hamconn {

// Cycle lengths (edge counts) present in a graph; members lie in [3, n].
using CycleSpectrum = LengthSet;

// Exact cycle spectrum. Each cycle is searched from its lowest vertex only,
// and the search stops once every length in [3, n] is confirmed.
// Throws std::invalid_argument for n = 64 (length 64 does not fit a
// LengthSet).
CycleSpectrum cycle_spectrum(const Graph& g);

struct SpectrumGaps {
  int cardinality = 0;
  // Longest interval of consecutive integers inside the spectrum.
  int longest_run = 0;
  // longest_run / n.
  double run_ratio = 0.0;
};

// Throws std::invalid_argument when n < 1.
SpectrumGaps spectrum_gap_metrics(const CycleSpectrum& spectrum, int n);

}  // namespace hamconn

#endif  // HAMCONN_CYCLE_SPECTRUM_H_
