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

#include "vas/matching/mechanisms.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vas/common/errors.hpp"

namespace vas::matching {

namespace {

// rank[school][student] -> position in the school's priority list.
std::map<std::string, std::map<std::string, int>> priority_ranks(
    const MatchingInstance& inst) {
  std::map<std::string, std::map<std::string, int>> ranks;
  for (const auto& [school, list] : inst.priorities) {
    auto& r = ranks[school];
    for (int i = 0; i < static_cast<int>(list.size()); ++i) r[list[i]] = i;
  }
  return ranks;
}

}  // namespace

Allocation deferred_acceptance(const MatchingInstance& inst) {
  validate_instance(inst);
  const auto rank = priority_ranks(inst);

  // Tentative holds per school, ordered worst-priority-last for cheap
  // eviction.
  std::map<std::string, std::vector<std::string>> holds;
  std::map<std::string, std::size_t> next_choice;
  std::vector<std::string> unmatched = inst.students;

  while (!unmatched.empty()) {
    // Batch: every unmatched student proposes to their next school.
    std::map<std::string, std::vector<std::string>> proposals;
    for (const auto& s : unmatched) {
      const auto& prefs = inst.preferences.at(s);
      const std::size_t i = next_choice[s]++;
      // Complete lists plus enough total capacity guarantee assignment
      // before any list runs out.
      proposals[prefs.at(i)].push_back(s);
    }
    unmatched.clear();

    for (auto& [school, applicants] : proposals) {
      auto& held = holds[school];
      held.insert(held.end(), applicants.begin(), applicants.end());
      const auto& r = rank.at(school);
      std::sort(held.begin(), held.end(),
                [&r](const std::string& a, const std::string& b) {
                  return r.at(a) < r.at(b);
                });
      const auto cap = static_cast<std::size_t>(inst.capacities.at(school));
      while (held.size() > cap) {
        unmatched.push_back(held.back());
        held.pop_back();
      }
    }
    std::sort(unmatched.begin(), unmatched.end());
  }

  Allocation a;
  for (const auto& [school, held] : holds) {
    for (const auto& s : held) a.assignment[s] = school;
  }
  return a;
}

Allocation boston(const MatchingInstance& inst) {
  validate_instance(inst);
  const auto rank = priority_ranks(inst);

  std::map<std::string, int> remaining = inst.capacities;
  Allocation a;

  for (std::size_t k = 0; k < inst.schools.size(); ++k) {
    std::map<std::string, std::vector<std::string>> applicants;
    for (const auto& s : inst.students) {
      if (a.assignment.count(s) > 0) continue;
      applicants[inst.preferences.at(s).at(k)].push_back(s);
    }
    for (auto& [school, group] : applicants) {
      int& room = remaining.at(school);
      if (room <= 0) continue;
      const auto& r = rank.at(school);
      std::sort(group.begin(), group.end(),
                [&r](const std::string& x, const std::string& y) {
                  return r.at(x) < r.at(y);
                });
      for (const auto& s : group) {
        if (room <= 0) break;
        a.assignment[s] = school;  // acceptances are final
        --room;
      }
    }
  }
  return a;
}

Allocation serial_dictatorship(const MatchingInstance& inst,
                               const std::vector<std::string>& order) {
  validate_instance(inst);
  {
    std::set<std::string> expect(inst.students.begin(), inst.students.end());
    std::set<std::string> got(order.begin(), order.end());
    if (order.size() != inst.students.size() || expect != got) {
      throw ConfigError(
          "serial_dictatorship: order is not a permutation of the students");
    }
  }

  std::map<std::string, int> remaining = inst.capacities;
  Allocation a;
  for (const auto& s : order) {
    for (const auto& school : inst.preferences.at(s)) {
      if (remaining.at(school) > 0) {
        a.assignment[s] = school;
        --remaining.at(school);
        break;
      }
    }
  }
  return a;
}

Allocation random_serial_dictatorship(const MatchingInstance& inst, Rng& rng) {
  std::vector<std::string> order = inst.students;
  rng.shuffle(order);
  return serial_dictatorship(inst, order);
}

}  // namespace vas::matching
