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
#include <string_view>
#include <vector>

namespace vas::dfd {

// Data-flow diagrams for sociotechnical systems: processes transform data,
// datastores hold it, external entities (stakeholders) exchange it with the
// system and can also take part in processes via participation edges.

enum class NodeKind { Process, Datastore, ExternalEntity };
enum class EdgeKind { DataFlow, Participation };

const char* to_string(NodeKind kind);
const char* to_string(EdgeKind kind);
std::optional<NodeKind> node_kind_from_string(std::string_view s);
std::optional<EdgeKind> edge_kind_from_string(std::string_view s);

struct Node {
  std::string id;
  NodeKind kind = NodeKind::Process;
  std::string label;
  // Dark component (part of the visibility allocation system) vs light
  // (external to it).
  bool in_vas = false;
};

struct Edge {
  std::string src;
  std::string dst;
  EdgeKind kind = EdgeKind::DataFlow;
  std::optional<std::string> annotation;  // the data being transferred
  // Set only on level-0 context diagrams: influence that reaches the target
  // without passing through the system.
  bool indirect = false;
};

struct Violation {
  std::string rule;     // short stable identifier, e.g. "dangling-edge"
  std::string message;  // names the offending node/edge ids
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
  std::string to_string() const;
};

struct Diagram {
  std::string title;
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  // Free-form note carried by fixture files (e.g. arrowhead ambiguity).
  std::optional<std::string> comment;

  const Node* find_node(std::string_view id) const;
  bool has_node(std::string_view id) const { return find_node(id) != nullptr; }
};

// Structural checks. Violations are data, not failures: a valid diagram
// yields an empty report. Checked rules:
//   duplicate-node-id       node ids unique within the diagram
//   dangling-edge           edge endpoints reference existing nodes
//   participation-endpoints participation edges run entity -> process
//   entity-to-entity-flow   data never flows directly between two entities
//                           unless both are outside the system
//   datastore-needs-process any datastore flow requires at least one process
//   entity-inside-vas       entities are never inside the system
ValidationReport validate_diagram(const Diagram& d);

// Throws ConfigError carrying the full report when d is invalid.
void require_valid(const Diagram& d);

}  // namespace vas::dfd
