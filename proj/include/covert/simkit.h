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

#ifndef COVERT_SIMKIT_H_
#define COVERT_SIMKIT_H_

#include <cstdint>
#include <limits>

#include "covert/model.h"

namespace covert {

// Counter-based stream: the state is derived from (seed, stream) alone, so
// any block can be regenerated independently of scheduling. Satisfies
// UniformRandomBitGenerator.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng(std::uint64_t seed, std::uint64_t stream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform();

 private:
  std::uint64_t state_;
};

enum class Hypothesis { kH0, kH1 };

enum class SamplingPath {
  kGamma,      // T drawn directly as Gamma(N, s / N)
  kPerSample,  // T = (1/N) sum |y_k|^2 with y_k complex Gaussian
};

struct BlockSample {
  Hypothesis hypothesis = Hypothesis::kH0;
  double power_mw = 0.0;
  double jam_mw = 0.0;
  double statistic = 0.0;
};

// Draws Willie's energy statistic for one block. Under H0 the received
// variance is sigma_w^2 + J, under H1 it is P + sigma_w^2 + J.
double SampleStatistic(Hypothesis h, double power_mw, double jam_mw, int n,
                       double sigma_w_sq_mw, CounterRng& rng,
                       SamplingPath path = SamplingPath::kGamma);

struct EmpiricalDetection {
  double pfa_hat = 0.0;
  double pm_hat = 0.0;
  long blocks = 0;
  std::uint64_t seed = 0;

  double pfa_stderr() const;
  double pm_stderr() const;
};

// Simulates `blocks` blocks under each hypothesis. Every block draws a
// joint action from `joint`, a threshold from `thresholds`, and a statistic;
// the tallies are false alarms under H0 and misses under H1. The result is
// a pure function of the arguments. Throws std::invalid_argument for
// blocks < 1 or mismatched strategies.
EmpiricalDetection EstimateDetection(const Scenario& s,
                                     const MixedStrategy& joint,
                                     const MixedStrategy& thresholds,
                                     long blocks, std::uint64_t seed,
                                     SamplingPath path = SamplingPath::kGamma);

}  // namespace covert

#endif  // COVERT_SIMKIT_H_
