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

#ifndef COVERT_REPORT_H_
#define COVERT_REPORT_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "covert/experiments.h"
#include "covert/model.h"

namespace covert {

// Output serialization. Every number is printed with 12 significant digits,
// columns are in fixed order and lines end in '\n'.

inline constexpr std::string_view kToolVersion = "1.0.0";

std::string FormatNumber(double v);

// Probabilities <= `floor` are omitted.
std::string RowStrategyCsv(const std::vector<JointAction>& actions,
                           const MixedStrategy& strategy, double floor = 1e-9);
std::string ColStrategyCsv(const std::vector<double>& thresholds,
                           const MixedStrategy& strategy, double floor = 1e-9);

class StrategyFileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Inverse of the writers above against the (pruned) scenario; actions that
// are not listed get probability zero. Throws StrategyFileError for rows
// that do not name an action of the scenario.
MixedStrategy ParseRowStrategyCsv(std::string_view text, const Scenario& s);
MixedStrategy ParseColStrategyCsv(std::string_view text, const Scenario& s);

std::string TradeoffCsv(const std::vector<TradeoffPoint>& points);
std::string BaselineCsv(const std::vector<BaselineResult>& results);
std::string DominanceCsv(const DominanceReport& report);

std::uint64_t Fnv1a64(std::string_view data);

struct RunManifest {
  std::string subcommand;
  std::string scenario;  // file path or preset name
  std::vector<std::string> overrides;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string output_dir;
  std::string timestamp;
  std::vector<std::pair<std::string, std::uint64_t>> outputs;  // file, hash

  // Hash of every field except the timestamp.
  std::uint64_t ContentHash() const;
  std::string Format() const;
};

}  // namespace covert

#endif  // COVERT_REPORT_H_
