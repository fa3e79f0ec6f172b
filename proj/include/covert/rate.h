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

#ifndef COVERT_RATE_H_
#define COVERT_RATE_H_

#include "covert/model.h"

namespace covert {

struct RateParams {
  double snr = 0.0;
  int blocklength_n = 1;
  double delta = 0.1;
};

// Normal approximation of the achievable rate in bits per channel use,
//   log2(1 + snr) - sqrt((1 - 1/(1+snr)^2) / N) Q^{-1}(delta) / ln 2.
// Negative results are returned unchanged.
double Rbar(const RateParams& p);

// Rate of a single joint action under scenario `s`.
double ActionRate(const Scenario& s, const JointAction& a);

// Sum of ActionRate weighted by `strategy` over JointActions(s). Throws
// std::invalid_argument on a size mismatch.
double ExpectedRate(const Scenario& s, const MixedStrategy& strategy);

}  // namespace covert

#endif  // COVERT_RATE_H_
