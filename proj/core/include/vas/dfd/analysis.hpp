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

#include <set>
#include <string>
#include <vector>

#include "vas/dfd/diagram.hpp"

namespace vas::dfd {

// Every elementary cycle of the directed graph restricted to data-flow
// edges (participation edges carry no data and are ignored). Each cycle is
// an ordered node-id list rotated so its lexicographically smallest id
// leads; the list of cycles is sorted lexicographically. A self-loop is a
// one-node cycle. Throws ConfigError when d is invalid.
std::vector<std::vector<std::string>> detect_feedback_loops(const Diagram& d);

// Level-0 context diagram: collapses the given process nodes (plus every
// datastore inside the system) into a single "VAS" process and keeps all
// external entities and outside datastores. Paths through collapsed or
// dropped nodes become single edges; edges that never touch the system are
// flagged indirect. Participation edges are below this abstraction level
// and are dropped. Throws ConfigError when d is invalid, when vas_node_ids
// is empty or references unknown ids, or when it contains an external
// entity (entities are never inside the system).
Diagram derive_context_diagram(const Diagram& d,
                               const std::set<std::string>& vas_node_ids);

}  // namespace vas::dfd
