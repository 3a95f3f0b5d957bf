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

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace vas::matching {

// A school-choice market: strict preferences on one side, strict priorities
// and capacities on the other. In the full-assignment regime total capacity
// covers every student, so no outside option is modeled.
struct MatchingInstance {
  std::vector<std::string> students;
  std::vector<std::string> schools;
  // student -> strict ranking over all schools
  std::map<std::string, std::vector<std::string>> preferences;
  // school -> strict ranking over all students
  std::map<std::string, std::vector<std::string>> priorities;
  std::map<std::string, int> capacities;
};

struct Allocation {
  std::map<std::string, std::string> assignment;  // student -> school
};

// Throws ConfigError unless: preference lists are permutations of the
// school set, priority lists are permutations of the student set,
// capacities are >= 0 and sum to at least the number of students.
void validate_instance(const MatchingInstance& inst);

// Throws ConfigError unless every student is assigned to a known school and
// no school exceeds its capacity.
void validate_allocation(const MatchingInstance& inst, const Allocation& a);

// JSON object with keys students, schools, preferences, priorities,
// capacities; unknown keys rejected.
MatchingInstance parse_instance_json(const std::string& text,
                                     const std::string& origin);
MatchingInstance load_instance_file(const std::filesystem::path& path);
std::string instance_to_json(const MatchingInstance& inst);

// FNV-1a over a canonical rendering; stable across runs, used to key
// enumeration output rows.
std::string instance_hash(const MatchingInstance& inst);

}  // namespace vas::matching
