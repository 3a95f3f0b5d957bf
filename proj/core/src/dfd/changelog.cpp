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

#include "vas/dfd/changelog.hpp"

#include <algorithm>

#include "vas/common/errors.hpp"

namespace vas::dfd {

const char* to_string(ChangeAction action) {
  switch (action) {
    case ChangeAction::AddProcess:
      return "AddProcess";
    case ChangeAction::RetireProcess:
      return "RetireProcess";
    case ChangeAction::SwapAlgorithm:
      return "SwapAlgorithm";
    case ChangeAction::Note:
      return "Note";
  }
  return "?";
}

std::optional<ChangeAction> change_action_from_string(std::string_view s) {
  if (s == "AddProcess") return ChangeAction::AddProcess;
  if (s == "RetireProcess") return ChangeAction::RetireProcess;
  if (s == "SwapAlgorithm") return ChangeAction::SwapAlgorithm;
  if (s == "Note") return ChangeAction::Note;
  return std::nullopt;
}

namespace {

std::string entry_name(const ChangelogEntry& e) {
  return std::to_string(e.year) + " \"" + e.description + "\"";
}

}  // namespace

Diagram reconstruct_at(std::span<const ChangelogEntry> log, const Diagram& base,
                       int year) {
  std::vector<const ChangelogEntry*> ordered;
  ordered.reserve(log.size());
  for (const auto& e : log) {
    if (e.year <= year) ordered.push_back(&e);
  }
  // Total order is (year, insertion order); stable sort keeps ties in log
  // order.
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const ChangelogEntry* a, const ChangelogEntry* b) {
                     return a->year < b->year;
                   });

  Diagram d = base;
  for (const ChangelogEntry* e : ordered) {
    switch (e->action) {
      case ChangeAction::Note:
        break;
      case ChangeAction::AddProcess: {
        if (!e->process_id) {
          throw ConfigError("changelog entry " + entry_name(*e) +
                            " adds a process but has no process_id");
        }
        if (d.has_node(*e->process_id)) {
          throw ConfigError("changelog entry " + entry_name(*e) +
                            " adds node \"" + *e->process_id +
                            "\" which already exists");
        }
        d.nodes.push_back(
            Node{*e->process_id, NodeKind::Process, e->description, false});
        break;
      }
      case ChangeAction::RetireProcess: {
        if (!e->process_id) {
          throw ConfigError("changelog entry " + entry_name(*e) +
                            " retires a process but has no process_id");
        }
        if (!d.has_node(*e->process_id)) {
          throw ConfigError("changelog entry " + entry_name(*e) +
                            " retires nonexistent node \"" + *e->process_id +
                            "\"");
        }
        const std::string& id = *e->process_id;
        std::erase_if(d.nodes, [&](const Node& n) { return n.id == id; });
        std::erase_if(d.edges,
                      [&](const Edge& ed) { return ed.src == id || ed.dst == id; });
        break;
      }
      case ChangeAction::SwapAlgorithm: {
        if (!e->process_id) {
          throw ConfigError("changelog entry " + entry_name(*e) +
                            " swaps an algorithm but has no process_id");
        }
        auto it = std::find_if(d.nodes.begin(), d.nodes.end(), [&](const Node& n) {
          return n.id == *e->process_id;
        });
        if (it == d.nodes.end()) {
          throw ConfigError("changelog entry " + entry_name(*e) +
                            " relabels nonexistent node \"" + *e->process_id +
                            "\"");
        }
        it->label = e->description;
        break;
      }
    }
  }
  return d;
}

}  // namespace vas::dfd
