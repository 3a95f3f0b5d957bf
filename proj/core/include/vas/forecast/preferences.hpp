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
#include <vector>

#include "vas/forecast/forecaster.hpp"

namespace vas::forecast {

// Top-k schools for one student, ranked by predicted value descending with
// ties broken by ascending school id. Throws ConfigError when k < 1 or the
// student has no predictions.
std::vector<std::string> recommend(std::span<const Prediction> predictions,
                                   const std::string& student_id, int k);

// What a student brings to preference formation: private taste per school
// and how much weight the system's predictions get.
struct PreferenceInputs {
  std::map<std::string, double> intrinsic;  // school id -> utility in [0, 1]
  double trust = 0;                         // tau in [0, 1]
};

// Submitted preference order: schools sorted by
//   score(s) = trust * prediction(s) + (1 - trust) * intrinsic(s)
// descending, ties by ascending school id. trust = 0 reproduces the
// intrinsic ranking, trust = 1 the prediction ranking. Throws ConfigError
// when the school sets of the two maps differ or trust is outside [0, 1].
std::vector<std::string> elicit_preferences(
    const PreferenceInputs& inputs,
    const std::map<std::string, double>& predictions);

}  // namespace vas::forecast
