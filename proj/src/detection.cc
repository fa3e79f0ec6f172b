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

#include "covert/detection.h"

#include <map>
#include <utility>
#include <stdexcept>
#include <string>

#include "covert/specfun.h"

namespace covert {
namespace {

void CheckCell(double power_mw, double jam_mw, double threshold_mw, int n,
               double sigma_w_sq_mw) {
  if (!(power_mw >= 0.0) || !(jam_mw >= 0.0) || !(threshold_mw >= 0.0) ||
      n < 1 || !(sigma_w_sq_mw > 0.0)) {
    throw std::domain_error("detection cell parameters out of range");
  }
}

void CheckSizes(const Scenario& s, std::size_t joint_size,
                const MixedStrategy& thresholds) {
  const auto rows = JointActions(s).size();
  if (joint_size != rows) {
    throw std::invalid_argument("joint strategy has " +
                                std::to_string(joint_size) +
                                " entries, scenario has " +
                                std::to_string(rows) + " joint actions");
  }
  if (thresholds.size() != s.threshold_grid.size()) {
    throw std::invalid_argument("threshold strategy has " +
                                std::to_string(thresholds.size()) +
                                " entries, scenario has " +
                                std::to_string(s.threshold_grid.size()) +
                                " thresholds");
  }
}

}  // namespace

double PfaCell(double jam_mw, double threshold_mw, int n,
               double sigma_w_sq_mw) {
  CheckCell(0.0, jam_mw, threshold_mw, n, sigma_w_sq_mw);
  return RegGammaQ(n, n * threshold_mw / (sigma_w_sq_mw + jam_mw));
}

double PmCell(double power_mw, double jam_mw, double threshold_mw, int n,
              double sigma_w_sq_mw) {
  CheckCell(power_mw, jam_mw, threshold_mw, n, sigma_w_sq_mw);
  return RegGammaP(n, n * threshold_mw / (power_mw + sigma_w_sq_mw + jam_mw));
}

double DepCell(double power_mw, double jam_mw, double threshold_mw, int n,
               double sigma_w_sq_mw) {
  return PfaCell(jam_mw, threshold_mw, n, sigma_w_sq_mw) +
         PmCell(power_mw, jam_mw, threshold_mw, n, sigma_w_sq_mw);
}

DetectionErrors Detection(const Scenario& s, const MixedStrategy& joint,
                          const MixedStrategy& thresholds) {
  CheckSizes(s, joint.size(), thresholds);
  const auto actions = JointActions(s);

  // Both probabilities are bilinear; under H0 only the J-marginal matters.
  std::map<double, double> jam_mass;
  std::map<std::pair<double, double>, double> pair_mass;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    if (joint[k] == 0.0) continue;
    jam_mass[actions[k].jam_mw] += joint[k];
    pair_mass[{actions[k].power_mw, actions[k].jam_mw}] += joint[k];
  }

  DetectionErrors out;
  for (std::size_t m = 0; m < thresholds.size(); ++m) {
    const double w = thresholds[m];
    if (w == 0.0) continue;
    const double t = s.threshold_grid[m];
    double pfa = 0.0;
    for (const auto& [jam, mass] : jam_mass) {
      pfa += mass * PfaCell(jam, t, s.blocklength_n, s.sigma_w_sq_mw);
    }
    double pm = 0.0;
    for (const auto& [action, mass] : pair_mass) {
      pm += mass * PmCell(action.first, action.second, t, s.blocklength_n,
                          s.sigma_w_sq_mw);
    }
    out.pfa += w * pfa;
    out.pm += w * pm;
  }
  return out;
}

double Pfa(const Scenario& s, const MixedStrategy& joint,
           const MixedStrategy& thresholds) {
  return Detection(s, joint, thresholds).pfa;
}

double Pm(const Scenario& s, const MixedStrategy& joint,
          const MixedStrategy& thresholds) {
  return Detection(s, joint, thresholds).pm;
}

}  // namespace covert
