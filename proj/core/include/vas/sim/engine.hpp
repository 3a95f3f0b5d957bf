// Copyright 2026 The vaslab Authors.
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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "vas/forecast/observation.hpp"
#include "vas/matching/instance.hpp"
#include "vas/metrics/metrics.hpp"
#include "vas/sim/config.hpp"

namespace vas::sim {

// The executable version of the school-choice data-flow diagram: each round
// traverses the feedback loop once (predict -> present -> elicit -> match
// -> interact -> record), and the recorded outcomes feed the next round's
// predictions.

struct StudentAgent {
  std::string id;
  std::string group;  // "A" or "B"
  forecast::Bucket bucket = forecast::Bucket::Low;
  double theta = 0;  // ability in [0, 1]
  std::map<std::string, double> intrinsic;  // taste per school
  double trust = 0;
};

enum class SchoolPolicy { Truthful, Strategic };

struct SchoolAgent {
  std::string id;
  int capacity = 0;
  double quality = 0;
  double support_gain = 0;
  double support_cost = 0;
  // Truthful schools support every matched low-bucket student; strategic
  // schools support none.
  SchoolPolicy policy = SchoolPolicy::Truthful;
};

struct SimState {
  SimConfig config;
  int round = 1;  // the next round to execute (1-based)
  std::vector<SchoolAgent> schools;
  std::vector<StudentAgent> cohort;  // arrives fresh every round
  std::vector<forecast::Observation> history;
};

// Seeds the master stream, draws school parameters and the first cohort.
// Deterministic per config seed. Throws ConfigError on invalid config.
SimState init_market(const SimConfig& cfg);

struct RoundOutput {
  std::vector<metrics::OutcomeRecord> records;  // one per student
  metrics::MetricsRow row;
};

// Executes one full loop traversal on the current cohort, appends the new
// observations to history, draws the next cohort, and advances the round
// counter. Stage randomness is keyed by (seed, round, stage), so runs are
// replayable round by round.
RoundOutput run_round(SimState& state);

struct RunResult {
  SimConfig config;
  std::vector<std::string> school_ids;
  std::vector<metrics::MetricsRow> rows;         // one per round
  std::vector<metrics::OutcomeRecord> trace;     // rounds * n_students rows
};

RunResult run_simulation(const SimConfig& cfg);

// The per-round stage order as process ids of the bundled school-choice
// diagram; the cycle detector on that diagram must agree with it.
const std::vector<std::string>& execution_process_order();

}  // namespace vas::sim
