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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vas/common/rng.hpp"
#include "vas/forecast/observation.hpp"

namespace vas::forecast {

// Bucketed empirical-mean forecaster. Deliberately transparent (no learned
// model) so the feedback dynamics it drives stay analyzable; prediction
// accuracy is controlled externally through the noise level sigma.
struct Forecaster {
  struct Cell {
    double mean = 0;
    int count = 0;
  };

  std::map<std::pair<std::string, Bucket>, Cell> table;
  double global_mean = 0.5;
  std::optional<int> window;  // rounds of history used; nullopt = unbounded

  const Cell* cell(const std::string& school_id, Bucket bucket) const {
    const auto it = table.find({school_id, bucket});
    return it == table.end() ? nullptr : &it->second;
  }
};

// Per-(school, bucket) arithmetic means over the last `window` rounds of
// history (all rounds when unbounded). With no retained history the table
// is empty and global_mean is 0.5, the midpoint of the outcome scale.
Forecaster fit_forecaster(std::span<const Observation> obs,
                          std::optional<int> window);

struct PredictionRequest {
  std::string student_id;
  Bucket bucket = Bucket::Low;
  std::string school_id;
};

struct Prediction {
  std::string student_id;
  std::string school_id;
  double value = 0;
  double noise_sigma = 0;
};

// Cell mean (global mean for unseen cells) plus N(0, sigma^2) noise,
// clamped to [0, 1]. A standard normal is drawn per request and scaled by
// sigma, so sigma = 0 reproduces the mean exactly while consuming the same
// number of draws as any other sigma. Throws ConfigError when sigma < 0.
std::vector<Prediction> predict(const Forecaster& f,
                                std::span<const PredictionRequest> requests,
                                double sigma, Rng& rng);

}  // namespace vas::forecast
