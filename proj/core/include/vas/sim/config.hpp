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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace vas::sim {

enum class MechanismKind { DA, Boston, SD, RSD };

const char* to_string(MechanismKind m);
std::optional<MechanismKind> mechanism_from_string(std::string_view s);

// Full parameterization of one simulated market. JSON keys match the field
// names below; unknown keys are rejected and invalid fields are reported
// together in one itemized error.
struct SimConfig {
  int n_students = 200;
  int n_schools = 5;
  // Per-school seats; empty = equal split covering all students.
  std::vector<int> capacities;
  int rounds = 30;
  MechanismKind mechanism = MechanismKind::DA;

  double trust = 0.8;   // tau: weight of predictions in preference formation
  double sigma = 0.05;  // prediction noise; the accuracy knob
  std::optional<int> window;  // forecaster history window; nullopt = all

  double support_gain = 0.15;  // beta: outcome lift from school support
  double support_cost = 0.1;   // kappa: cost per supported student
  double w_theta = 0.5;        // outcome weight on student ability
  double w_q = 0.3;            // outcome weight on school quality
  double outcome_noise = 0.05;

  double group_a_share = 0.5;
  double low_bucket_share = 0.5;
  // Optional fixed qualities (length n_schools); empty = drawn uniformly
  // from [0.3, 0.9] at market setup.
  std::vector<double> school_qualities;
  std::vector<std::string> strategic_schools;  // withhold support entirely
  double favorable_threshold = 0.5;
  std::uint64_t seed = 42;

  // "s1".."sK".
  std::vector<std::string> school_ids() const;
  int capacity_of(int school_index) const;
};

// Throws ConfigError listing every offending field.
void validate_config(const SimConfig& cfg);

// seed_override wins over the file's seed; fallback_seed (e.g. from the
// environment) is used when the file has none.
SimConfig parse_config_json(const std::string& text, const std::string& origin,
                            std::optional<std::uint64_t> seed_override = {},
                            std::optional<std::uint64_t> fallback_seed = {});
SimConfig load_config_file(const std::filesystem::path& path,
                           std::optional<std::uint64_t> seed_override = {},
                           std::optional<std::uint64_t> fallback_seed = {});

// Canonical JSON with every field resolved; reparsing it yields the same
// config.
std::string config_to_json(const SimConfig& cfg);

}  // namespace vas::sim
