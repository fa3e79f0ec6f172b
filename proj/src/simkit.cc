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

#include "covert/simkit.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace covert {
namespace {

std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Sampler {
 public:
  explicit Sampler(const MixedStrategy& s) {
    double acc = 0.0;
    cumulative_.reserve(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
      acc += std::max(s[k], 0.0);
      cumulative_.push_back(acc);
    }
    if (!(acc > 0.0)) throw std::invalid_argument("strategy has no mass");
    for (double& c : cumulative_) c /= acc;
  }

  std::size_t Draw(CounterRng& rng) const {
    const double u = rng.Uniform();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const auto k = static_cast<std::size_t>(it - cumulative_.begin());
    return std::min(k, cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : state_(Mix64(seed + 0x9e3779b97f4a7c15ULL) ^
             Mix64(stream * 0xd1b54a32d192ed03ULL + 0x632be59bd9b4e019ULL)) {}

CounterRng::result_type CounterRng::operator()() {
  state_ += 0x9e3779b97f4a7c15ULL;
  return Mix64(state_);
}

double CounterRng::Uniform() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double SampleStatistic(Hypothesis h, double power_mw, double jam_mw, int n,
                       double sigma_w_sq_mw, CounterRng& rng,
                       SamplingPath path) {
  const double scale = (h == Hypothesis::kH1 ? power_mw : 0.0) +
                       sigma_w_sq_mw + jam_mw;
  if (path == SamplingPath::kGamma) {
    std::gamma_distribution<double> gamma(n, scale / n);
    return gamma(rng);
  }
  // Each component of CN(0, scale) has variance scale / 2.
  std::normal_distribution<double> normal(0.0, std::sqrt(scale / 2.0));
  double energy = 0.0;
  for (int k = 0; k < n; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    energy += re * re + im * im;
  }
  return energy / n;
}

double EmpiricalDetection::pfa_stderr() const {
  return std::sqrt(pfa_hat * (1.0 - pfa_hat) / static_cast<double>(blocks));
}

double EmpiricalDetection::pm_stderr() const {
  return std::sqrt(pm_hat * (1.0 - pm_hat) / static_cast<double>(blocks));
}

EmpiricalDetection EstimateDetection(const Scenario& s,
                                     const MixedStrategy& joint,
                                     const MixedStrategy& thresholds,
                                     long blocks, std::uint64_t seed,
                                     SamplingPath path) {
  if (blocks < 1) {
    throw std::invalid_argument("EstimateDetection: blocks must be >= 1, got " +
                                std::to_string(blocks));
  }
  const auto actions = JointActions(s);
  if (joint.size() != actions.size() ||
      thresholds.size() != s.threshold_grid.size()) {
    throw std::invalid_argument("EstimateDetection: strategy sizes do not "
                                "match the scenario");
  }
  const Sampler action_sampler(joint);
  const Sampler threshold_sampler(thresholds);

  // Block b uses stream 2b under H0 and 2b + 1 under H1.
  auto run_range = [&](long begin, long end, long& alarms, long& misses) {
    for (long b = begin; b < end; ++b) {
      const auto block = static_cast<std::uint64_t>(b);
      {
        CounterRng rng(seed, 2 * block);
        const auto& a = actions[action_sampler.Draw(rng)];
        const double t = s.threshold_grid[threshold_sampler.Draw(rng)];
        const double stat = SampleStatistic(Hypothesis::kH0, a.power_mw,
                                            a.jam_mw, s.blocklength_n,
                                            s.sigma_w_sq_mw, rng, path);
        if (stat > t) ++alarms;
      }
      {
        CounterRng rng(seed, 2 * block + 1);
        const auto& a = actions[action_sampler.Draw(rng)];
        const double t = s.threshold_grid[threshold_sampler.Draw(rng)];
        const double stat = SampleStatistic(Hypothesis::kH1, a.power_mw,
                                            a.jam_mw, s.blocklength_n,
                                            s.sigma_w_sq_mw, rng, path);
        if (stat <= t) ++misses;
      }
    }
  };

  const long workers = std::clamp<long>(
      static_cast<long>(std::thread::hardware_concurrency()), 1,
      std::max<long>(1, blocks / 4096));
  std::vector<long> alarms(workers, 0), misses(workers, 0);
  std::vector<std::thread> threads;
  const long chunk = (blocks + workers - 1) / workers;
  for (long w = 1; w < workers; ++w) {
    const long begin = std::min(blocks, w * chunk);
    const long end = std::min(blocks, begin + chunk);
    threads.emplace_back(run_range, begin, end, std::ref(alarms[w]),
                         std::ref(misses[w]));
  }
  run_range(0, std::min(blocks, chunk), alarms[0], misses[0]);
  for (auto& th : threads) th.join();

  long total_alarms = 0, total_misses = 0;
  for (long w = 0; w < workers; ++w) {
    total_alarms += alarms[w];
    total_misses += misses[w];
  }
  EmpiricalDetection out;
  out.blocks = blocks;
  out.seed = seed;
  out.pfa_hat = static_cast<double>(total_alarms) / static_cast<double>(blocks);
  out.pm_hat = static_cast<double>(total_misses) / static_cast<double>(blocks);
  return out;
}

}  // namespace covert
