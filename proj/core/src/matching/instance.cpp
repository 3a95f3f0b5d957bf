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

#include "vas/matching/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "internal/json_util.hpp"
#include "vas/common/fs.hpp"

namespace vas::matching {

using detail::json;

namespace {

bool is_permutation_of(const std::vector<std::string>& list,
                       const std::set<std::string>& universe) {
  if (list.size() != universe.size()) return false;
  std::set<std::string> seen(list.begin(), list.end());
  return seen == universe;
}

}  // namespace

void validate_instance(const MatchingInstance& inst) {
  const std::set<std::string> students(inst.students.begin(),
                                       inst.students.end());
  const std::set<std::string> schools(inst.schools.begin(), inst.schools.end());
  if (students.size() != inst.students.size()) {
    throw ConfigError("matching instance: duplicate student ids");
  }
  if (schools.size() != inst.schools.size()) {
    throw ConfigError("matching instance: duplicate school ids");
  }

  for (const auto& s : inst.students) {
    const auto it = inst.preferences.find(s);
    if (it == inst.preferences.end() || !is_permutation_of(it->second, schools)) {
      throw ConfigError("matching instance: preferences of student \"" + s +
                        "\" are not a permutation of the school set");
    }
  }
  long long total_capacity = 0;
  for (const auto& c : inst.schools) {
    const auto it = inst.priorities.find(c);
    if (it == inst.priorities.end() || !is_permutation_of(it->second, students)) {
      throw ConfigError("matching instance: priorities of school \"" + c +
                        "\" are not a permutation of the student set");
    }
    const auto cap = inst.capacities.find(c);
    if (cap == inst.capacities.end() || cap->second < 0) {
      throw ConfigError("matching instance: school \"" + c +
                        "\" needs a capacity >= 0");
    }
    total_capacity += cap->second;
  }
  if (inst.preferences.size() != inst.students.size()) {
    throw ConfigError("matching instance: preferences listed for unknown students");
  }
  if (inst.priorities.size() != inst.schools.size()) {
    throw ConfigError("matching instance: priorities listed for unknown schools");
  }
  if (inst.capacities.size() != inst.schools.size()) {
    throw ConfigError("matching instance: capacities listed for unknown schools");
  }
  if (total_capacity < static_cast<long long>(inst.students.size())) {
    throw ConfigError(
        "matching instance: total capacity is below the number of students");
  }
}

void validate_allocation(const MatchingInstance& inst, const Allocation& a) {
  std::map<std::string, int> load;
  for (const auto& s : inst.students) {
    const auto it = a.assignment.find(s);
    if (it == a.assignment.end()) {
      throw ConfigError("allocation: student \"" + s + "\" is unassigned");
    }
    if (inst.capacities.find(it->second) == inst.capacities.end()) {
      throw ConfigError("allocation: student \"" + s +
                        "\" assigned to unknown school \"" + it->second + "\"");
    }
    ++load[it->second];
  }
  if (a.assignment.size() != inst.students.size()) {
    throw ConfigError("allocation: assignment mentions unknown students");
  }
  for (const auto& [school, n] : load) {
    if (n > inst.capacities.at(school)) {
      throw ConfigError("allocation: school \"" + school +
                        "\" is over capacity");
    }
  }
}

MatchingInstance parse_instance_json(const std::string& text,
                                     const std::string& origin) {
  const json root = detail::parse_json(text, origin);
  detail::require_keys(
      root, {"students", "schools", "preferences", "priorities", "capacities"},
      origin);

  MatchingInstance inst;
  auto read_id_list = [&](const json& j, const std::string& ctx) {
    if (!j.is_array()) throw ConfigError(ctx + ": expected an array of ids");
    std::vector<std::string> out;
    for (const auto& item : j) {
      if (!item.is_string()) throw ConfigError(ctx + ": ids must be strings");
      out.push_back(item.get<std::string>());
    }
    return out;
  };

  inst.students = read_id_list(detail::require_field(root, "students", origin),
                               origin + ": students");
  inst.schools = read_id_list(detail::require_field(root, "schools", origin),
                              origin + ": schools");

  const json& prefs = detail::require_field(root, "preferences", origin);
  if (!prefs.is_object()) {
    throw ConfigError(origin + ": \"preferences\" must be an object");
  }
  for (const auto& item : prefs.items()) {
    inst.preferences[item.key()] =
        read_id_list(item.value(), origin + ": preferences of " + item.key());
  }

  const json& prio = detail::require_field(root, "priorities", origin);
  if (!prio.is_object()) {
    throw ConfigError(origin + ": \"priorities\" must be an object");
  }
  for (const auto& item : prio.items()) {
    inst.priorities[item.key()] =
        read_id_list(item.value(), origin + ": priorities of " + item.key());
  }

  const json& caps = detail::require_field(root, "capacities", origin);
  if (!caps.is_object()) {
    throw ConfigError(origin + ": \"capacities\" must be an object");
  }
  for (const auto& item : caps.items()) {
    if (!item.value().is_number_integer()) {
      throw ConfigError(origin + ": capacity of " + item.key() +
                        " must be an integer");
    }
    inst.capacities[item.key()] = item.value().get<int>();
  }

  validate_instance(inst);
  return inst;
}

MatchingInstance load_instance_file(const std::filesystem::path& path) {
  return parse_instance_json(read_text_file(path), path.string());
}

std::string instance_to_json(const MatchingInstance& inst) {
  json root;
  root["students"] = inst.students;
  root["schools"] = inst.schools;
  root["preferences"] = inst.preferences;
  root["priorities"] = inst.priorities;
  root["capacities"] = inst.capacities;
  return root.dump(2) + "\n";
}

std::string instance_hash(const MatchingInstance& inst) {
  // FNV-1a 64-bit over the canonical JSON rendering.
  const std::string canon = instance_to_json(inst);
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[h & 0xF];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

}  // namespace vas::matching
