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

#include "vas/metrics/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vas/common/errors.hpp"
#include "vas/common/format.hpp"

namespace vas::metrics {

AccuracyResult prediction_accuracy(const std::map<PairKey, double>& predicted,
                                   const std::map<PairKey, double>& realized) {
  double abs_sum = 0;
  double sq_sum = 0;
  long long n = 0;
  for (const auto& [key, pred] : predicted) {
    const auto it = realized.find(key);
    if (it == realized.end()) continue;
    const double err = pred - it->second;
    abs_sum += std::abs(err);
    sq_sum += err * err;
    ++n;
  }
  if (n == 0) {
    throw ConfigError(
        "prediction_accuracy: no (student, school) pair appears in both maps");
  }
  const double dn = static_cast<double>(n);
  return AccuracyResult{abs_sum / dn, std::sqrt(sq_sum / dn)};
}

double disparate_impact(std::span<const OutcomeRecord> records,
                        const std::string& group_a,
                        const std::string& group_b) {
  long long na = 0, nb = 0, fa = 0, fb = 0;
  for (const auto& r : records) {
    if (r.group == group_a) {
      ++na;
      if (r.favorable) ++fa;
    }
    if (r.group == group_b) {
      ++nb;
      if (r.favorable) ++fb;
    }
  }
  if (na == 0 || nb == 0) {
    throw ConfigError("disparate_impact: group \"" + (na == 0 ? group_a : group_b) +
                      "\" has no records");
  }
  const double ra = static_cast<double>(fa) / static_cast<double>(na);
  const double rb = static_cast<double>(fb) / static_cast<double>(nb);
  if (rb == 0.0) {
    return ra == 0.0 ? 1.0 : std::numeric_limits<double>::infinity();
  }
  return ra / rb;
}

double gini(std::span<const double> values) {
  if (values.empty()) {
    throw ConfigError("gini: empty value list");
  }
  std::vector<double> sorted(values.begin(), values.end());
  double total = 0;
  for (double v : sorted) {
    if (v < 0) throw ConfigError("gini: negative value");
    total += v;
  }
  if (total == 0) {
    throw ConfigError("gini: all values are zero");
  }
  std::sort(sorted.begin(), sorted.end());
  // sum_ij |x_i - x_j| = 2 * sum_i (2i - n + 1) * x_(i)  (0-based i)
  const double n = static_cast<double>(sorted.size());
  double weighted = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    weighted += (2.0 * static_cast<double>(i) - n + 1.0) * sorted[i];
  }
  return weighted / (n * total);
}

SchoolUtility school_utility(std::span<const OutcomeRecord> school_records,
                             double support_cost) {
  if (school_records.empty()) {
    return SchoolUtility{0.0, true};
  }
  double outcome_sum = 0;
  long long supported = 0;
  for (const auto& r : school_records) {
    outcome_sum += r.outcome;
    if (r.supported) ++supported;
  }
  const double n = static_cast<double>(school_records.size());
  return SchoolUtility{outcome_sum / n -
                           support_cost * (static_cast<double>(supported) / n),
                       false};
}

std::string metrics_to_csv(std::span<const MetricsRow> rows,
                           std::span<const std::string> school_ids) {
  std::string out = "round,mae,rmse,gini,disparate_impact";
  for (const auto& id : school_ids) out += ",mean_" + id;
  for (const auto& id : school_ids) out += ",util_" + id;
  out += '\n';
  for (const auto& row : rows) {
    out += std::to_string(row.round);
    out += ',';
    out += format_double(row.mae);
    out += ',';
    out += format_double(row.rmse);
    out += ',';
    out += format_double(row.gini);
    out += ',';
    out += format_double(row.disparate_impact);
    for (double v : row.school_mean_outcome) {
      out += ',';
      out += format_double(v);
    }
    for (double v : row.school_utility) {
      out += ',';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

std::string trace_to_csv(std::span<const OutcomeRecord> records) {
  std::string out =
      "round,student_id,group,bucket,school_id,outcome,favorable,supported\n";
  for (const auto& r : records) {
    out += std::to_string(r.round);
    out += ',';
    out += r.student_id;
    out += ',';
    out += r.group;
    out += ',';
    out += forecast::to_string(r.bucket);
    out += ',';
    out += r.school_id;
    out += ',';
    out += format_double(r.outcome);
    out += ',';
    out += r.favorable ? '1' : '0';
    out += ',';
    out += r.supported ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace vas::metrics
