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

#include "vas/dfd/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "vas/common/errors.hpp"

namespace vas::dfd {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Process:
      return "Process";
    case NodeKind::Datastore:
      return "Datastore";
    case NodeKind::ExternalEntity:
      return "ExternalEntity";
  }
  return "?";
}

const char* to_string(EdgeKind kind) {
  return kind == EdgeKind::DataFlow ? "DataFlow" : "Participation";
}

std::optional<NodeKind> node_kind_from_string(std::string_view s) {
  if (s == "Process") return NodeKind::Process;
  if (s == "Datastore") return NodeKind::Datastore;
  if (s == "ExternalEntity") return NodeKind::ExternalEntity;
  return std::nullopt;
}

std::optional<EdgeKind> edge_kind_from_string(std::string_view s) {
  if (s == "DataFlow") return EdgeKind::DataFlow;
  if (s == "Participation") return EdgeKind::Participation;
  return std::nullopt;
}

std::string ValidationReport::to_string() const {
  std::ostringstream out;
  for (const auto& v : violations) {
    out << "[" << v.rule << "] " << v.message << "\n";
  }
  return out.str();
}

const Node* Diagram::find_node(std::string_view id) const {
  for (const auto& n : nodes) {
    if (n.id == id) return &n;
  }
  return nullptr;
}

ValidationReport validate_diagram(const Diagram& d) {
  ValidationReport report;
  auto flag = [&report](std::string rule, std::string message) {
    report.violations.push_back({std::move(rule), std::move(message)});
  };

  std::map<std::string, const Node*> by_id;
  for (const auto& n : d.nodes) {
    auto [it, inserted] = by_id.emplace(n.id, &n);
    if (!inserted) {
      flag("duplicate-node-id", "node id \"" + n.id + "\" appears more than once");
    }
    if (n.kind == NodeKind::ExternalEntity && n.in_vas) {
      flag("entity-inside-vas",
           "external entity \"" + n.id + "\" is marked as part of the system");
    }
  }

  bool has_process = false;
  for (const auto& n : d.nodes) {
    if (n.kind == NodeKind::Process) has_process = true;
  }

  bool datastore_flow = false;
  for (const auto& e : d.edges) {
    const auto src_it = by_id.find(e.src);
    const auto dst_it = by_id.find(e.dst);
    const std::string name = "edge " + e.src + " -> " + e.dst;
    if (src_it == by_id.end()) {
      flag("dangling-edge", name + " references missing node id \"" + e.src + "\"");
    }
    if (dst_it == by_id.end()) {
      flag("dangling-edge", name + " references missing node id \"" + e.dst + "\"");
    }
    if (src_it == by_id.end() || dst_it == by_id.end()) continue;
    const Node& src = *src_it->second;
    const Node& dst = *dst_it->second;

    if (e.kind == EdgeKind::Participation) {
      // Dotted arrows mean "takes part in": they start at a stakeholder and
      // end at a process.
      if (src.kind != NodeKind::ExternalEntity || dst.kind != NodeKind::Process) {
        flag("participation-endpoints",
             "participation " + name +
                 " must run from an external entity to a process");
      }
    } else {
      if (src.kind == NodeKind::ExternalEntity &&
          dst.kind == NodeKind::ExternalEntity &&
          (src.in_vas || dst.in_vas)) {
        flag("entity-to-entity-flow",
             name + " connects two external entities not both outside the system");
      }
      if (src.kind == NodeKind::Datastore || dst.kind == NodeKind::Datastore) {
        datastore_flow = true;
      }
    }
  }

  if (datastore_flow && !has_process) {
    flag("datastore-needs-process",
         "diagram has datastore data flows but no process node");
  }

  return report;
}

void require_valid(const Diagram& d) {
  const ValidationReport report = validate_diagram(d);
  if (!report.valid()) {
    throw ConfigError("invalid diagram \"" + d.title + "\":\n" +
                      report.to_string());
  }
}

}  // namespace vas::dfd
