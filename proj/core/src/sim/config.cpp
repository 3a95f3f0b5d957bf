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

#include "vas/sim/config.hpp"

#include <algorithm>
#include <set>

#include "internal/json_util.hpp"
#include "vas/common/fs.hpp"

namespace vas::sim {

using detail::json;

const char* to_string(MechanismKind m) {
  switch (m) {
    case MechanismKind::DA:
      return "DA";
    case MechanismKind::Boston:
      return "Boston";
    case MechanismKind::SD:
      return "SD";
    case MechanismKind::RSD:
      return "RSD";
  }
  return "?";
}

std::optional<MechanismKind> mechanism_from_string(std::string_view s) {
  if (s == "DA") return MechanismKind::DA;
  if (s == "Boston") return MechanismKind::Boston;
  if (s == "SD") return MechanismKind::SD;
  if (s == "RSD") return MechanismKind::RSD;
  return std::nullopt;
}

std::vector<std::string> SimConfig::school_ids() const {
  std::vector<std::string> ids;
  ids.reserve(static_cast<std::size_t>(n_schools));
  for (int j = 1; j <= n_schools; ++j) ids.push_back("s" + std::to_string(j));
  return ids;
}

int SimConfig::capacity_of(int school_index) const {
  if (!capacities.empty()) return capacities[static_cast<std::size_t>(school_index)];
  // Equal split, rounded up so total capacity always covers the cohort.
  return (n_students + n_schools - 1) / n_schools;
}

void validate_config(const SimConfig& cfg) {
  std::vector<std::string> problems;
  auto bad = [&problems](const std::string& msg) { problems.push_back(msg); };

  if (cfg.n_students < 1) bad("n_students must be >= 1");
  if (cfg.n_schools < 1) bad("n_schools must be >= 1");
  if (cfg.rounds < 1) bad("rounds must be >= 1");
  if (!cfg.capacities.empty()) {
    if (static_cast<int>(cfg.capacities.size()) != cfg.n_schools) {
      bad("capacities must list exactly n_schools entries");
    } else {
      long long total = 0;
      for (int c : cfg.capacities) {
        if (c < 0) bad("capacities must be >= 0");
        total += c;
      }
      if (total < cfg.n_students) {
        bad("capacities must sum to at least n_students");
      }
    }
  }
  auto in_unit = [&bad](double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0)) {
      bad(std::string(name) + " must lie in [0, 1]");
    }
  };
  in_unit(cfg.trust, "trust");
  in_unit(cfg.group_a_share, "group_a_share");
  in_unit(cfg.low_bucket_share, "low_bucket_share");
  in_unit(cfg.favorable_threshold, "favorable_threshold");
  if (cfg.sigma < 0) bad("sigma must be >= 0");
  if (cfg.outcome_noise < 0) bad("outcome_noise must be >= 0");
  if (cfg.support_gain < 0) bad("support_gain must be >= 0");
  if (cfg.support_cost < 0) bad("support_cost must be >= 0");
  if (cfg.w_theta < 0) bad("w_theta must be >= 0");
  if (cfg.w_q < 0) bad("w_q must be >= 0");
  // Keeps the pre-noise outcome inside [0, 1] for any theta/quality/support.
  if (cfg.w_theta + cfg.w_q + cfg.support_gain > 1.0 + 1e-12) {
    bad("w_theta + w_q + support_gain must not exceed 1");
  }
  if (cfg.window && *cfg.window < 1) bad("window must be >= 1 or null");
  if (!cfg.school_qualities.empty()) {
    if (static_cast<int>(cfg.school_qualities.size()) != cfg.n_schools) {
      bad("school_qualities must list exactly n_schools entries");
    }
    for (double q : cfg.school_qualities) {
      if (!(q >= 0.0 && q <= 1.0)) {
        bad("school_qualities entries must lie in [0, 1]");
        break;
      }
    }
  }
  {
    const auto ids = cfg.school_ids();
    const std::set<std::string> known(ids.begin(), ids.end());
    for (const auto& s : cfg.strategic_schools) {
      if (known.count(s) == 0) {
        bad("strategic_schools entry \"" + s + "\" is not a school id");
      }
    }
  }

  if (!problems.empty()) {
    std::string msg = "invalid config:";
    for (const auto& p : problems) msg += "\n  - " + p;
    throw ConfigError(msg);
  }
}

SimConfig parse_config_json(const std::string& text, const std::string& origin,
                            std::optional<std::uint64_t> seed_override,
                            std::optional<std::uint64_t> fallback_seed) {
  const json root = detail::parse_json(text, origin);
  detail::require_keys(root,
                       {"n_students", "n_schools", "capacities", "rounds",
                        "mechanism", "trust", "sigma", "window", "support_gain",
                        "support_cost", "w_theta", "w_q", "outcome_noise",
                        "group_a_share", "low_bucket_share", "school_qualities",
                        "strategic_schools", "favorable_threshold", "seed"},
                       origin);

  SimConfig cfg;
  auto get_int = [&](const char* key, int& field) {
    if (!root.contains(key)) return;
    if (!root[key].is_number_integer()) {
      throw ConfigError(origin + ": \"" + key + "\" must be an integer");
    }
    field = root[key].get<int>();
  };
  auto get_double = [&](const char* key, double& field) {
    if (!root.contains(key)) return;
    if (!root[key].is_number()) {
      throw ConfigError(origin + ": \"" + key + "\" must be a number");
    }
    field = root[key].get<double>();
  };

  get_int("n_students", cfg.n_students);
  get_int("n_schools", cfg.n_schools);
  get_int("rounds", cfg.rounds);
  get_double("trust", cfg.trust);
  get_double("sigma", cfg.sigma);
  get_double("support_gain", cfg.support_gain);
  get_double("support_cost", cfg.support_cost);
  get_double("w_theta", cfg.w_theta);
  get_double("w_q", cfg.w_q);
  get_double("outcome_noise", cfg.outcome_noise);
  get_double("group_a_share", cfg.group_a_share);
  get_double("low_bucket_share", cfg.low_bucket_share);
  get_double("favorable_threshold", cfg.favorable_threshold);

  if (root.contains("mechanism")) {
    if (!root["mechanism"].is_string()) {
      throw ConfigError(origin + ": \"mechanism\" must be a string");
    }
    const auto m = mechanism_from_string(root["mechanism"].get<std::string>());
    if (!m) {
      throw ConfigError(origin + ": \"mechanism\" must be one of DA, Boston, "
                                 "SD, RSD");
    }
    cfg.mechanism = *m;
  }
  if (root.contains("window") && !root["window"].is_null()) {
    if (!root["window"].is_number_integer()) {
      throw ConfigError(origin + ": \"window\" must be an integer or null");
    }
    cfg.window = root["window"].get<int>();
  }
  if (root.contains("capacities")) {
    if (!root["capacities"].is_array()) {
      throw ConfigError(origin + ": \"capacities\" must be an array");
    }
    for (const auto& c : root["capacities"]) {
      if (!c.is_number_integer()) {
        throw ConfigError(origin + ": \"capacities\" entries must be integers");
      }
      cfg.capacities.push_back(c.get<int>());
    }
  }
  if (root.contains("school_qualities")) {
    if (!root["school_qualities"].is_array()) {
      throw ConfigError(origin + ": \"school_qualities\" must be an array");
    }
    for (const auto& q : root["school_qualities"]) {
      if (!q.is_number()) {
        throw ConfigError(origin +
                          ": \"school_qualities\" entries must be numbers");
      }
      cfg.school_qualities.push_back(q.get<double>());
    }
  }
  if (root.contains("strategic_schools")) {
    if (!root["strategic_schools"].is_array()) {
      throw ConfigError(origin + ": \"strategic_schools\" must be an array");
    }
    for (const auto& s : root["strategic_schools"]) {
      if (!s.is_string()) {
        throw ConfigError(origin +
                          ": \"strategic_schools\" entries must be strings");
      }
      cfg.strategic_schools.push_back(s.get<std::string>());
    }
  }

  // Seed precedence: explicit override, then the file, then the fallback
  // (environment), then the built-in default.
  if (seed_override) {
    cfg.seed = *seed_override;
  } else if (root.contains("seed")) {
    if (!root["seed"].is_number_integer()) {
      throw ConfigError(origin + ": \"seed\" must be an integer");
    }
    cfg.seed = root["seed"].get<std::uint64_t>();
  } else if (fallback_seed) {
    cfg.seed = *fallback_seed;
  }

  validate_config(cfg);
  return cfg;
}

SimConfig load_config_file(const std::filesystem::path& path,
                           std::optional<std::uint64_t> seed_override,
                           std::optional<std::uint64_t> fallback_seed) {
  return parse_config_json(read_text_file(path), path.string(), seed_override,
                           fallback_seed);
}

std::string config_to_json(const SimConfig& cfg) {
  json root;
  root["n_students"] = cfg.n_students;
  root["n_schools"] = cfg.n_schools;
  json caps = json::array();
  for (int j = 0; j < cfg.n_schools; ++j) caps.push_back(cfg.capacity_of(j));
  root["capacities"] = std::move(caps);
  root["rounds"] = cfg.rounds;
  root["mechanism"] = to_string(cfg.mechanism);
  root["trust"] = cfg.trust;
  root["sigma"] = cfg.sigma;
  if (cfg.window) {
    root["window"] = *cfg.window;
  } else {
    root["window"] = nullptr;
  }
  root["support_gain"] = cfg.support_gain;
  root["support_cost"] = cfg.support_cost;
  root["w_theta"] = cfg.w_theta;
  root["w_q"] = cfg.w_q;
  root["outcome_noise"] = cfg.outcome_noise;
  root["group_a_share"] = cfg.group_a_share;
  root["low_bucket_share"] = cfg.low_bucket_share;
  if (!cfg.school_qualities.empty()) {
    root["school_qualities"] = cfg.school_qualities;
  }
  root["strategic_schools"] = cfg.strategic_schools;
  root["favorable_threshold"] = cfg.favorable_threshold;
  root["seed"] = cfg.seed;
  return root.dump(2) + "\n";
}

}  // namespace vas::sim
