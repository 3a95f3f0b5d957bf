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

#include <functional>

#include "vas/common/rng.hpp"
#include "vas/matching/instance.hpp"

namespace vas::matching {

// Student-proposing deferred acceptance (Gale-Shapley). Rounds are batched:
// every unmatched student proposes to their next school simultaneously and
// schools tentatively hold their top `capacity` proposers by priority.
// Returns the student-optimal stable allocation.
Allocation deferred_acceptance(const MatchingInstance& inst);

// Immediate-acceptance (Boston) mechanism. In round k, still-unassigned
// students apply to their k-th choice; schools permanently accept
// applicants in priority order up to remaining capacity.
Allocation boston(const MatchingInstance& inst);

// Students pick in `order` (a permutation of inst.students), each taking
// their most preferred school with remaining capacity.
Allocation serial_dictatorship(const MatchingInstance& inst,
                               const std::vector<std::string>& order);

// Serial dictatorship under a uniformly drawn order; deterministic per rng
// state.
Allocation random_serial_dictatorship(const MatchingInstance& inst, Rng& rng);

// Uniform callable shape shared by the verification harnesses.
using Mechanism = std::function<Allocation(const MatchingInstance&)>;

}  // namespace vas::matching
