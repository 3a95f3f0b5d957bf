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

#include "vas/forecast/forecaster.hpp"

#include <algorithm>

#include "vas/common/errors.hpp"

namespace vas::forecast {

Forecaster fit_forecaster(std::span<const Observation> obs,
                          std::optional<int> window) {
  Forecaster f;
  f.window = window;

  int max_round = 0;
  for (const auto& o : obs) max_round = std::max(max_round, o.round);
  // Retain the last `window` rounds: (max_round - window, max_round].
  const int min_round =
      window ? max_round - *window + 1 : std::numeric_limits<int>::min();

  std::map<std::pair<std::string, Bucket>, std::pair<double, int>> sums;
  double total = 0;
  long long n = 0;
  for (const auto& o : obs) {
    if (o.round < min_round) continue;
    auto& [sum, count] = sums[{o.school_id, o.bucket}];
    sum += o.outcome;
    ++count;
    total += o.outcome;
    ++n;
  }

  for (const auto& [key, sc] : sums) {
    f.table[key] = Forecaster::Cell{sc.first / sc.second, sc.second};
  }
  f.global_mean = n > 0 ? total / static_cast<double>(n) : 0.5;
  return f;
}

std::vector<Prediction> predict(const Forecaster& f,
                                std::span<const PredictionRequest> requests,
                                double sigma, Rng& rng) {
  if (sigma < 0) {
    throw ConfigError("predict: sigma must be >= 0, got " +
                      std::to_string(sigma));
  }
  std::vector<Prediction> out;
  out.reserve(requests.size());
  for (const auto& req : requests) {
    const Forecaster::Cell* cell = f.cell(req.school_id, req.bucket);
    const double base = cell ? cell->mean : f.global_mean;
    const double z = rng.normal();  // always drawn: stream is sigma-invariant
    const double value = std::clamp(base + sigma * z, 0.0, 1.0);
    out.push_back(Prediction{req.student_id, req.school_id, value, sigma});
  }
  return out;
}

}  // namespace vas::forecast
