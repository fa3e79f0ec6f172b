// Copyright 2026 The covertgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef COVERT_DETECTION_H_
#define COVERT_DETECTION_H_

#include "covert/model.h"

namespace covert {

// Willie's energy detector statistic T = (1/N) sum |y_k|^2 is Gamma(N, s/N)
// distributed, with s = sigma_w^2 + J without Alice and s = P + sigma_w^2 + J
// with her. The per-cell terms below are the tail probabilities at one
// threshold for one joint action.

// P(T > t | H0) = Q(N, N t / (sigma_w^2 + J)).
double PfaCell(double jam_mw, double threshold_mw, int n, double sigma_w_sq_mw);

// P(T <= t | H1) = 1 - Q(N, N t / (P + sigma_w^2 + J)).
double PmCell(double power_mw, double jam_mw, double threshold_mw, int n,
              double sigma_w_sq_mw);

// PfaCell + PmCell, the detection error probability of one cell.
double DepCell(double power_mw, double jam_mw, double threshold_mw, int n,
               double sigma_w_sq_mw);

struct DetectionErrors {
  double pfa = 0.0;
  double pm = 0.0;
  double dep() const { return pfa + pm; }
};

// False-alarm and missed-detection probabilities when Alice(-jammer) plays
// `joint` over JointActions(s) and Willie plays `thresholds` over
// s.threshold_grid. Throws std::invalid_argument on size mismatch.
DetectionErrors Detection(const Scenario& s, const MixedStrategy& joint,
                          const MixedStrategy& thresholds);
double Pfa(const Scenario& s, const MixedStrategy& joint,
           const MixedStrategy& thresholds);
double Pm(const Scenario& s, const MixedStrategy& joint,
          const MixedStrategy& thresholds);

}  // namespace covert

#endif  // COVERT_DETECTION_H_
