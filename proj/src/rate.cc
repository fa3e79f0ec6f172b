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

#include "covert/rate.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "covert/specfun.h"

namespace covert {

double Rbar(const RateParams& p) {
  if (!(p.snr >= 0.0) || p.blocklength_n < 1 ||
      !(p.delta > 0.0 && p.delta < 1.0)) {
    throw std::domain_error("Rbar: invalid parameters");
  }
  const double x = p.snr;
  const double inv = 1.0 / (x + 1.0);
  const double dispersion = 1.0 - inv * inv;
  return std::log2(1.0 + x) -
         std::sqrt(dispersion / p.blocklength_n) * InvQ(p.delta) /
             std::numbers::ln2;
}

double ActionRate(const Scenario& s, const JointAction& a) {
  return Rbar({s.SnrAtBob(a.power_mw, a.jam_mw), s.blocklength_n, s.delta});
}

double ExpectedRate(const Scenario& s, const MixedStrategy& strategy) {
  const auto actions = JointActions(s);
  if (actions.size() != strategy.size()) {
    throw std::invalid_argument(
        "ExpectedRate: strategy has " + std::to_string(strategy.size()) +
        " entries but the scenario has " + std::to_string(actions.size()) +
        " joint actions");
  }
  double rate = 0.0;
  for (std::size_t k = 0; k < actions.size(); ++k) {
    if (strategy[k] != 0.0) rate += strategy[k] * ActionRate(s, actions[k]);
  }
  return rate;
}

}  // namespace covert
