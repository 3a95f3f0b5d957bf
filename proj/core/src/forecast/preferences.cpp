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

#include "vas/forecast/preferences.hpp"

#include <algorithm>

#include "vas/common/errors.hpp"

namespace vas::forecast {

namespace {

// Descending by value, ascending by id on ties.
void sort_ranked(std::vector<std::pair<std::string, double>>& scored) {
  std::sort(scored.begin(), scored.end(),
            [](const auto& a, const auto& b) {
              if (a.second != b.second) return a.second > b.second;
              return a.first < b.first;
            });
}

}  // namespace

std::vector<std::string> recommend(std::span<const Prediction> predictions,
                                   const std::string& student_id, int k) {
  if (k < 1) {
    throw ConfigError("recommend: k must be >= 1, got " + std::to_string(k));
  }
  std::vector<std::pair<std::string, double>> scored;
  for (const auto& p : predictions) {
    if (p.student_id == student_id) scored.emplace_back(p.school_id, p.value);
  }
  if (scored.empty()) {
    throw ConfigError("recommend: no predictions for student \"" + student_id +
                      "\"");
  }
  sort_ranked(scored);
  if (static_cast<int>(scored.size()) > k) scored.resize(k);
  std::vector<std::string> out;
  out.reserve(scored.size());
  for (auto& [school, _] : scored) out.push_back(std::move(school));
  return out;
}

std::vector<std::string> elicit_preferences(
    const PreferenceInputs& inputs,
    const std::map<std::string, double>& predictions) {
  if (!(inputs.trust >= 0.0 && inputs.trust <= 1.0)) {
    throw ConfigError("elicit_preferences: trust must lie in [0, 1]");
  }
  if (inputs.intrinsic.size() != predictions.size()) {
    throw ConfigError(
        "elicit_preferences: intrinsic and prediction school sets differ");
  }
  std::vector<std::pair<std::string, double>> scored;
  scored.reserve(predictions.size());
  for (const auto& [school, pred] : predictions) {
    const auto it = inputs.intrinsic.find(school);
    if (it == inputs.intrinsic.end()) {
      throw ConfigError("elicit_preferences: school \"" + school +
                        "\" has a prediction but no intrinsic utility");
    }
    const double score =
        inputs.trust * pred + (1.0 - inputs.trust) * it->second;
    scored.emplace_back(school, score);
  }
  sort_ranked(scored);
  std::vector<std::string> out;
  out.reserve(scored.size());
  for (auto& [school, _] : scored) out.push_back(std::move(school));
  return out;
}

}  // namespace vas::forecast
