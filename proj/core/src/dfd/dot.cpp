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

#include "vas/dfd/dot.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace vas::dfd {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

const char* shape_for(NodeKind kind) {
  switch (kind) {
    case NodeKind::Process:
      return "circle";
    case NodeKind::Datastore:
      return "tab";  // open-ended rectangle stand-in
    case NodeKind::ExternalEntity:
      return "box";
  }
  return "box";
}

// Light (green) marks components external to the system, matching the
// diagram convention of dark system parts vs light surroundings.
constexpr const char* kOutsideColor = "forestgreen";

}  // namespace

std::string export_dot(const Diagram& d) {
  require_valid(d);

  std::vector<const Node*> nodes;
  nodes.reserve(d.nodes.size());
  for (const auto& n : d.nodes) nodes.push_back(&n);
  std::sort(nodes.begin(), nodes.end(),
            [](const Node* a, const Node* b) { return a->id < b->id; });

  std::vector<const Edge*> edges;
  edges.reserve(d.edges.size());
  for (const auto& e : d.edges) edges.push_back(&e);
  std::sort(edges.begin(), edges.end(), [](const Edge* a, const Edge* b) {
    const std::string an = a->annotation.value_or("");
    const std::string bn = b->annotation.value_or("");
    return std::tie(a->src, a->dst, a->kind, an, a->indirect) <
           std::tie(b->src, b->dst, b->kind, bn, b->indirect);
  });

  std::ostringstream out;
  out << "digraph " << quoted(d.title) << " {\n";
  out << "  rankdir=LR;\n";
  for (const Node* n : nodes) {
    out << "  " << quoted(n->id) << " [label=" << quoted(n->label)
        << " shape=" << shape_for(n->kind);
    if (!n->in_vas) {
      out << " color=" << quoted(kOutsideColor)
          << " fontcolor=" << quoted(kOutsideColor);
    }
    out << "];\n";
  }
  for (const Edge* e : edges) {
    out << "  " << quoted(e->src) << " -> " << quoted(e->dst);
    std::vector<std::string> attrs;
    if (e->annotation && !e->annotation->empty()) {
      attrs.push_back("label=" + quoted(*e->annotation));
    }
    if (e->kind == EdgeKind::Participation) {
      attrs.push_back("style=dashed");
    }
    if (e->indirect) {
      attrs.push_back("color=" + quoted(kOutsideColor));
    }
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        if (i > 0) out << ' ';
        out << attrs[i];
      }
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace vas::dfd
