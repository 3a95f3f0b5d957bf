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
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vas/forecast/observation.hpp"

namespace vas::metrics {

// One realized student-school interaction; the row type of the trace CSV.
struct OutcomeRecord {
  int round = 0;
  std::string student_id;
  std::string group;  // protected-group label
  forecast::Bucket bucket = forecast::Bucket::Low;
  std::string school_id;
  double outcome = 0;      // in [0, 1]
  bool favorable = false;  // outcome >= configured threshold
  bool supported = false;  // school provided additional support
};

struct AccuracyResult {
  double mae = 0;
  double rmse = 0;
};

// Errors over the (student, school) pairs present in both maps; pairs
// missing from either side are ignored. Throws ConfigError when the
// intersection is empty.
using PairKey = std::pair<std::string, std::string>;
AccuracyResult prediction_accuracy(const std::map<PairKey, double>& predicted,
                                   const std::map<PairKey, double>& realized);

// P(favorable | group_a) / P(favorable | group_b). Both rates zero gives
// 1.0; a zero denominator with a positive numerator gives +infinity.
// Throws ConfigError when either group has no records.
double disparate_impact(std::span<const OutcomeRecord> records,
                        const std::string& group_a, const std::string& group_b);

// Gini index, (sum_ij |x_i - x_j|) / (2 n^2 mean), computed via the sorted
// O(n log n) identity. Throws ConfigError on an empty list, a negative
// value, or an all-zero list.
double gini(std::span<const double> values);

struct SchoolUtility {
  double value = 0;
  bool no_students = false;  // set when the school matched nobody
};

// Mean outcome of the school's matched students minus support_cost times
// the fraction of them that received support. A school with no matched
// students has utility 0, flagged.
SchoolUtility school_utility(std::span<const OutcomeRecord> school_records,
                             double support_cost);

// Per-round metric summary. School vectors follow school_ids order as
// passed to the CSV writer.
struct MetricsRow {
  int round = 0;
  double mae = 0;
  double rmse = 0;
  double gini = 0;
  double disparate_impact = 0;
  std::vector<double> school_mean_outcome;
  std::vector<double> school_utility;
  std::vector<bool> school_strategic;
};

// Header `round,mae,rmse,gini,disparate_impact,mean_<id>...,util_<id>...`
// with school columns in school_ids order.
std::string metrics_to_csv(std::span<const MetricsRow> rows,
                           std::span<const std::string> school_ids);

// Header `round,student_id,group,bucket,school_id,outcome,favorable,supported`.
std::string trace_to_csv(std::span<const OutcomeRecord> records);

}  // namespace vas::metrics
