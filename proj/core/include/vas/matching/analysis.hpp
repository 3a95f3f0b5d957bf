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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vas/matching/mechanisms.hpp"

namespace vas::matching {

// Every (student, school) pair where the student strictly prefers the
// school to their assignment and the school either has spare capacity or
// holds a strictly lower-priority student. Sorted lexicographically; empty
// means stable. Throws ConfigError on an invalid allocation.
std::vector<std::pair<std::string, std::string>> find_blocking_pairs(
    const MatchingInstance& inst, const Allocation& a);

inline bool is_stable(const MatchingInstance& inst, const Allocation& a) {
  return find_blocking_pairs(inst, a).empty();
}

struct Misreport {
  std::vector<std::string> report;  // the alternative ranking submitted
  std::string achieved_school;      // outcome under the misreport
  int rank_improvement = 0;  // places gained under the TRUE preferences
};

// Brute-forces every alternative ranking for one student and returns the
// first (in lexicographic enumeration order) that yields a school the
// student truly prefers to their truthful outcome, or nullopt when truth
// is optimal. Guarded to |schools| <= 6: beyond that the factorial report
// space must be sampled instead, and the error says so.
std::optional<Misreport> find_profitable_misreport(
    const Mechanism& mechanism, const MatchingInstance& inst,
    const std::string& student_id);

// Exhaustive manipulability scan used by the verification harness: every
// truthful profile over n students and n schools (capacities 1, fixed
// rotated priorities), every student, every alternative report.
struct MisreportCase {
  std::string instance_hash;
  std::string student;
  std::string truthful_school;
  std::string misreport_school;
};

struct EnumerationReport {
  long long profiles = 0;         // truthful profiles examined
  long long reports_checked = 0;  // (profile, student, alternative) triples
  std::vector<MisreportCase> cases;  // one row per profitable misreport found
};

EnumerationReport enumerate_manipulability(const Mechanism& mechanism, int n);

// The instance layout used by enumerate_manipulability: students i1..in,
// schools s1..sn, unit capacities, school sj's priority list rotated by
// j-1. Exposed so tests can reproduce single cases.
MatchingInstance enumeration_instance(int n);

// CSV with header `instance_hash,student,truthful_school,misreport_school`.
std::string misreport_cases_to_csv(const EnumerationReport& report);

}  // namespace vas::matching
