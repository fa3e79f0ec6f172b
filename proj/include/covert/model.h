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

#ifndef COVERT_MODEL_H_
#define COVERT_MODEL_H_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace covert {

// Raised for any invalid scenario content. `line()` is the 1-based line of
// the offending entry when the scenario came from a file, 0 otherwise.
class ScenarioError : public std::invalid_argument {
 public:
  explicit ScenarioError(const std::string& what, int line = 0)
      : std::invalid_argument(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// One (transmit power, jamming power) pair. Indices are 1-based positions in
// the scenario's power and jam grids.
struct JointAction {
  double power_mw = 0.0;
  double jam_mw = 0.0;
  int power_index = 0;
  int jam_index = 0;

  friend bool operator==(const JointAction&, const JointAction&) = default;
};

// Probability vector over an indexed finite action set.
struct MixedStrategy {
  std::vector<double> probs;

  std::size_t size() const { return probs.size(); }
  double operator[](std::size_t i) const { return probs[i]; }

  static MixedStrategy Uniform(std::size_t n);
  static MixedStrategy PointMass(std::size_t n, std::size_t index);

  // Throws std::invalid_argument unless every entry is >= -tol and the sum
  // is within tol of one.
  void Validate(double tol = 1e-9) const;
};

// All physical and game parameters. Powers and variances are linear mW.
// The no-jammer model is the special case jam_grid == {0}.
struct Scenario {
  int blocklength_n = 200;
  double sigma_b_sq_mw = 1.0;
  double sigma_w_sq_mw = 1.0;
  double delta = 0.1;
  double alpha = 1.0;
  double beta = 1.6;
  std::vector<double> power_grid;
  std::vector<double> jam_grid;
  std::vector<double> threshold_grid;

  // Candidate Alice(-jammer) actions in vectorized order: power index runs
  // fastest. Pruning removes entries; an empty list means "all pairs".
  std::vector<JointAction> joint_actions;

  bool HasJammer() const;
  // Bob's SNR for a joint action, P / (sigma_b^2 + alpha^2 J).
  double SnrAtBob(double power_mw, double jam_mw) const;
};

// Evenly spaced grid start, start+step, ..., stop with entries rounded to
// 1e-12 so that decimal inputs land on their nearest doubles.
std::vector<double> MakeGrid(double start, double step, double stop);

// Every (P_i, J_l) pair of the grids in vectorized order.
std::vector<JointAction> AllJointActions(const Scenario& s);

// Returns the scenario's joint actions, falling back to AllJointActions.
std::vector<JointAction> JointActions(const Scenario& s);

// Throws ScenarioError on any invariant violation.
void Validate(const Scenario& s);

// Parameters of the numerical study: N = 200, unit noise variances,
// delta = 0.1, 0.01 mW power steps up to 1 mW, thresholds 0..3 by 0.01.
// Without jammer beta = 1.6 and jam grid {0}; with jammer beta = 1.5,
// alpha = 1 and jam grid 0..1 mW by 0.01.
Scenario DefaultScenario(bool with_jammer);

// Jammer scenario on 0.05 mW power and jam steps (20 x 21 joint actions).
Scenario DeskJammerScenario();

// Removes joint actions whose finite-blocklength rate is negative. Throws
// ScenarioError when nothing survives. Idempotent.
Scenario PruneNegativeRate(const Scenario& s);

double LinearToDb(double linear);
double DbToLinear(double db);

// Scenario text format: one `key = value` per line, '#' starts a comment.
// Grid values are either `start:step:stop` or a comma separated list.
// Keys absent from the text keep their values from `base`.
Scenario ParseScenario(std::string_view text, const Scenario& base);
Scenario ReadScenarioFile(const std::filesystem::path& path,
                          const Scenario& base);

// Applies a single `key`/`value` setting; the same keys as the file format.
void ApplySetting(Scenario& s, std::string_view key, std::string_view value,
                  int line = 0);

// Serializes the scenario so that ParseScenario reproduces it.
std::string FormatScenario(const Scenario& s);

}  // namespace covert

#endif  // COVERT_MODEL_H_
