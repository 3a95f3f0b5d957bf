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
#include <span>
#include <string>
#include <vector>

#include "vas/dfd/diagram.hpp"

namespace vas::dfd {

// Chronological record of design changes to a deployed system. Only
// AddProcess/RetireProcess change the diagram's node set; SwapAlgorithm
// rewrites a node's label (the algorithm currently in use); Note entries
// document context without structural effect.
enum class ChangeAction { AddProcess, RetireProcess, SwapAlgorithm, Note };

const char* to_string(ChangeAction action);
std::optional<ChangeAction> change_action_from_string(std::string_view s);

struct ChangelogEntry {
  int year = 0;
  ChangeAction action = ChangeAction::Note;
  std::optional<std::string> process_id;  // required except for Note
  std::string description;
  std::string reference;  // free-text citation
};

// Replays all entries dated <= year onto base, ordered by (year, position
// in log). Added nodes are processes labeled with the entry description;
// retiring a node also removes its incident edges. Throws ConfigError when
// an entry adds an id that already exists or retires/relabels one that does
// not, naming the entry.
Diagram reconstruct_at(std::span<const ChangelogEntry> log, const Diagram& base,
                       int year);

}  // namespace vas::dfd
