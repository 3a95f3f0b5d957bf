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

#include "vas/dfd/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vas/common/errors.hpp"

namespace vas::dfd {

namespace {

// Sorted node ids and a dense index for them.
std::vector<std::string> sorted_ids(const Diagram& d) {
  std::vector<std::string> ids;
  ids.reserve(d.nodes.size());
  for (const auto& n : d.nodes) ids.push_back(n.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

}  // namespace

std::vector<std::vector<std::string>> detect_feedback_loops(const Diagram& d) {
  require_valid(d);

  const std::vector<std::string> ids = sorted_ids(d);
  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(ids.size()); ++i) index[ids[i]] = i;

  // Deduplicated adjacency over data-flow edges only; parallel edges do not
  // multiply cycles because a cycle is a node sequence.
  const int n = static_cast<int>(ids.size());
  std::vector<std::set<int>> adj(n);
  for (const auto& e : d.edges) {
    if (e.kind != EdgeKind::DataFlow) continue;
    adj[index[e.src]].insert(index[e.dst]);
  }

  // Enumerate elementary cycles by DFS from each start vertex s, visiting
  // only vertices > s on the path; every cycle is then found exactly once,
  // already rotated so its smallest id leads. Worst case is exponential,
  // which is immaterial at diagram scale (tens of nodes).
  std::vector<std::vector<std::string>> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(n, false);

  auto dfs = [&](auto&& self, int start, int v) -> void {
    path.push_back(v);
    on_path[v] = true;
    for (int w : adj[v]) {
      if (w == start) {
        std::vector<std::string> cycle;
        cycle.reserve(path.size());
        for (int u : path) cycle.push_back(ids[u]);
        cycles.push_back(std::move(cycle));
      } else if (w > start && !on_path[w]) {
        self(self, start, w);
      }
    }
    on_path[v] = false;
    path.pop_back();
  };

  for (int s = 0; s < n; ++s) dfs(dfs, s, s);

  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

Diagram derive_context_diagram(const Diagram& d,
                               const std::set<std::string>& vas_node_ids) {
  require_valid(d);
  if (vas_node_ids.empty()) {
    throw ConfigError("derive_context_diagram: vas_node_ids is empty");
  }
  for (const auto& id : vas_node_ids) {
    const Node* node = d.find_node(id);
    if (node == nullptr) {
      throw ConfigError("derive_context_diagram: unknown node id \"" + id + "\"");
    }
    if (node->kind == NodeKind::ExternalEntity) {
      throw ConfigError("derive_context_diagram: \"" + id +
                        "\" is an external entity; entities are never inside "
                        "the system");
    }
  }

  // Super-node mapping: system members (selected nodes plus in-system
  // datastores) collapse into "VAS"; entities and outside datastores are
  // retained; everything else (outside processes) is dropped, with paths
  // through it becoming edges.
  constexpr const char* kVasId = "VAS";
  enum class Role { Vas, Retained, Dropped };
  std::map<std::string, Role> role;
  for (const auto& n : d.nodes) {
    if (vas_node_ids.count(n.id) > 0 ||
        (n.kind == NodeKind::Datastore && n.in_vas)) {
      role[n.id] = Role::Vas;
    } else if (n.kind == NodeKind::ExternalEntity ||
               n.kind == NodeKind::Datastore) {
      role[n.id] = Role::Retained;
    } else {
      role[n.id] = Role::Dropped;
    }
  }

  auto super_of = [&](const std::string& id) -> std::string {
    return role.at(id) == Role::Vas ? kVasId : id;
  };

  Diagram out;
  out.title = d.title.empty() ? "context diagram" : d.title + " (level 0)";
  out.nodes.push_back(Node{kVasId, NodeKind::Process, "VAS", true});
  for (const auto& n : d.nodes) {
    if (role.at(n.id) == Role::Retained) {
      Node kept = n;
      kept.in_vas = false;
      out.nodes.push_back(std::move(kept));
    }
  }
  std::sort(out.nodes.begin(), out.nodes.end(),
            [](const Node& a, const Node& b) { return a.id < b.id; });

  // Data-flow adjacency on original nodes.
  std::map<std::string, std::vector<const Edge*>> adj;
  for (const auto& e : d.edges) {
    if (e.kind == EdgeKind::DataFlow) adj[e.src].push_back(&e);
  }

  // Direct annotations: original single edges between two retained
  // super-nodes keep their annotations; multi-hop paths contribute none.
  std::map<std::pair<std::string, std::string>, std::set<std::string>> notes;
  std::set<std::pair<std::string, std::string>> reachable;

  for (const auto& e : d.edges) {
    if (e.kind != EdgeKind::DataFlow) continue;
    const std::string a = super_of(e.src);
    const std::string b = super_of(e.dst);
    if (a == b) continue;
    if (role.at(e.src) != Role::Dropped && role.at(e.dst) != Role::Dropped) {
      reachable.insert({a, b});
      if (e.annotation && !e.annotation->empty()) {
        notes[{a, b}].insert(*e.annotation);
      }
    }
  }

  // Multi-hop reachability: walk from each source super-node through
  // collapsed interiors (dropped nodes and further members of the same
  // super-node); stop at the first node of another retained super-node.
  std::set<std::string> supers;
  for (const auto& n : out.nodes) supers.insert(n.id);
  for (const auto& a : supers) {
    std::set<std::string> visited;
    std::vector<std::string> frontier;
    for (const auto& n : d.nodes) {
      if (super_of(n.id) == a) {
        frontier.push_back(n.id);
        visited.insert(n.id);
      }
    }
    while (!frontier.empty()) {
      const std::string u = frontier.back();
      frontier.pop_back();
      const auto it = adj.find(u);
      if (it == adj.end()) continue;
      for (const Edge* e : it->second) {
        const std::string& v = e->dst;
        if (visited.count(v) > 0) continue;
        visited.insert(v);
        const std::string b = super_of(v);
        if (b != a && role.at(v) != Role::Dropped) {
          reachable.insert({a, b});  // stop here: reached another super-node
        } else {
          frontier.push_back(v);  // interior: keep walking
        }
      }
    }
  }

  for (const auto& ab : reachable) {
    Edge e;
    e.src = ab.first;
    e.dst = ab.second;
    e.kind = EdgeKind::DataFlow;
    e.indirect = (ab.first != kVasId && ab.second != kVasId);
    const auto it = notes.find(ab);
    if (it != notes.end()) {
      std::string joined;
      for (const auto& a : it->second) {
        if (!joined.empty()) joined += ", ";
        joined += a;
      }
      e.annotation = joined;
    }
    out.edges.push_back(std::move(e));
  }
  std::sort(out.edges.begin(), out.edges.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.src, x.dst) < std::tie(y.src, y.dst);
  });
  return out;
}

}  // namespace vas::dfd
