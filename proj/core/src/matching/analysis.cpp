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

#include "vas/matching/analysis.hpp"

#include <algorithm>
#include <map>

#include "vas/common/errors.hpp"

namespace vas::matching {

std::vector<std::pair<std::string, std::string>> find_blocking_pairs(
    const MatchingInstance& inst, const Allocation& a) {
  validate_instance(inst);
  validate_allocation(inst, a);

  std::map<std::string, int> load;
  for (const auto& [_, school] : a.assignment) ++load[school];

  // pref_rank[student][school], priority_rank[school][student]
  std::map<std::string, std::map<std::string, int>> pref_rank;
  for (const auto& [s, prefs] : inst.preferences) {
    for (int i = 0; i < static_cast<int>(prefs.size()); ++i) {
      pref_rank[s][prefs[i]] = i;
    }
  }
  std::map<std::string, std::map<std::string, int>> prio_rank;
  for (const auto& [c, prio] : inst.priorities) {
    for (int i = 0; i < static_cast<int>(prio.size()); ++i) {
      prio_rank[c][prio[i]] = i;
    }
  }

  std::vector<std::pair<std::string, std::string>> blocking;
  for (const auto& student : inst.students) {
    const std::string& assigned = a.assignment.at(student);
    const int own_rank = pref_rank.at(student).at(assigned);
    for (const auto& school : inst.schools) {
      if (pref_rank.at(student).at(school) >= own_rank) continue;
      if (load[school] < inst.capacities.at(school)) {
        blocking.emplace_back(student, school);
        continue;
      }
      // Full: blocks only if the school holds someone it ranks strictly
      // below this student.
      const int mine = prio_rank.at(school).at(student);
      for (const auto& [other, at] : a.assignment) {
        if (at == school && prio_rank.at(school).at(other) > mine) {
          blocking.emplace_back(student, school);
          break;
        }
      }
    }
  }
  std::sort(blocking.begin(), blocking.end());
  return blocking;
}

std::optional<Misreport> find_profitable_misreport(
    const Mechanism& mechanism, const MatchingInstance& inst,
    const std::string& student_id) {
  validate_instance(inst);
  if (inst.preferences.find(student_id) == inst.preferences.end()) {
    throw ConfigError("find_profitable_misreport: unknown student \"" +
                      student_id + "\"");
  }
  if (inst.schools.size() > 6) {
    throw ConfigError(
        "find_profitable_misreport: " + std::to_string(inst.schools.size()) +
        " schools exceed the exhaustive guard of 6; sample the report space "
        "instead of enumerating it");
  }

  const std::vector<std::string>& truth = inst.preferences.at(student_id);
  std::map<std::string, int> true_rank;
  for (int i = 0; i < static_cast<int>(truth.size()); ++i) {
    true_rank[truth[i]] = i;
  }
  const int truthful_rank =
      true_rank.at(mechanism(inst).assignment.at(student_id));

  std::vector<std::string> report = inst.schools;
  std::sort(report.begin(), report.end());
  MatchingInstance probe = inst;
  do {
    if (report == truth) continue;
    probe.preferences[student_id] = report;
    const std::string got = mechanism(probe).assignment.at(student_id);
    const int got_rank = true_rank.at(got);
    if (got_rank < truthful_rank) {
      return Misreport{report, got, truthful_rank - got_rank};
    }
  } while (std::next_permutation(report.begin(), report.end()));
  return std::nullopt;
}

MatchingInstance enumeration_instance(int n) {
  MatchingInstance inst;
  for (int i = 1; i <= n; ++i) inst.students.push_back("i" + std::to_string(i));
  for (int j = 1; j <= n; ++j) inst.schools.push_back("s" + std::to_string(j));
  for (int j = 0; j < n; ++j) {
    // School j's priorities rotate the student list by j, so schools do not
    // all agree on the best student.
    std::vector<std::string> prio;
    for (int i = 0; i < n; ++i) prio.push_back(inst.students[(i + j) % n]);
    inst.priorities[inst.schools[j]] = std::move(prio);
    inst.capacities[inst.schools[j]] = 1;
  }
  for (const auto& s : inst.students) inst.preferences[s] = inst.schools;
  return inst;
}

EnumerationReport enumerate_manipulability(const Mechanism& mechanism, int n) {
  if (n < 1 || n > 6) {
    throw ConfigError("enumerate_manipulability: size " + std::to_string(n) +
                      " is outside the exhaustive guard (1..6)");
  }
  MatchingInstance inst = enumeration_instance(n);

  // All strict rankings over the schools.
  std::vector<std::vector<std::string>> rankings;
  {
    std::vector<std::string> perm = inst.schools;
    std::sort(perm.begin(), perm.end());
    do {
      rankings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  EnumerationReport result;
  const long long total = [&] {
    long long t = 1;
    for (int i = 0; i < n; ++i) t *= static_cast<long long>(rankings.size());
    return t;
  }();

  std::vector<std::size_t> choice(static_cast<std::size_t>(n), 0);
  for (long long p = 0; p < total; ++p) {
    long long rest = p;
    for (int i = 0; i < n; ++i) {
      choice[i] = static_cast<std::size_t>(rest % rankings.size());
      rest /= static_cast<long long>(rankings.size());
      inst.preferences[inst.students[i]] = rankings[choice[i]];
    }
    ++result.profiles;

    const Allocation truthful = mechanism(inst);
    for (int i = 0; i < n; ++i) {
      const std::string& student = inst.students[i];
      const std::vector<std::string> truth = inst.preferences[student];
      std::map<std::string, int> true_rank;
      for (int r = 0; r < static_cast<int>(truth.size()); ++r) {
        true_rank[truth[r]] = r;
      }
      const int base_rank = true_rank.at(truthful.assignment.at(student));

      for (const auto& alt : rankings) {
        if (alt == truth) continue;
        ++result.reports_checked;
        inst.preferences[student] = alt;
        const std::string got = mechanism(inst).assignment.at(student);
        if (true_rank.at(got) < base_rank) {
          inst.preferences[student] = truth;  // hash the truthful instance
          result.cases.push_back(MisreportCase{instance_hash(inst), student,
                                               truth[base_rank], got});
          inst.preferences[student] = alt;
        }
      }
      inst.preferences[student] = truth;
    }
  }
  return result;
}

std::string misreport_cases_to_csv(const EnumerationReport& report) {
  std::string out = "instance_hash,student,truthful_school,misreport_school\n";
  for (const auto& c : report.cases) {
    out += c.instance_hash;
    out += ',';
    out += c.student;
    out += ',';
    out += c.truthful_school;
    out += ',';
    out += c.misreport_school;
    out += '\n';
  }
  return out;
}

}  // namespace vas::matching
