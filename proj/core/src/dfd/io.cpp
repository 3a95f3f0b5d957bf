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

#include "vas/dfd/io.hpp"

#include <sstream>

#include "internal/json_util.hpp"
#include "vas/common/fs.hpp"

namespace vas::dfd {

using detail::json;

Diagram parse_diagram_json(const std::string& text, const std::string& origin) {
  const json root = detail::parse_json(text, origin);
  detail::require_keys(root, {"title", "nodes", "edges", "comment"}, origin);

  Diagram d;
  d.title = detail::require_string(root, "title", origin);
  if (root.contains("comment")) {
    if (!root["comment"].is_string()) {
      throw ConfigError(origin + ": key \"comment\" must be a string");
    }
    d.comment = root["comment"].get<std::string>();
  }

  const json& nodes = detail::require_field(root, "nodes", origin);
  if (!nodes.is_array()) {
    throw ConfigError(origin + ": key \"nodes\" must be an array");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string ctx = origin + ": nodes[" + std::to_string(i) + "]";
    const json& jn = nodes[i];
    detail::require_keys(jn, {"id", "kind", "label", "in_vas"}, ctx);
    Node n;
    n.id = detail::require_string(jn, "id", ctx);
    const std::string kind = detail::require_string(jn, "kind", ctx);
    const auto parsed = node_kind_from_string(kind);
    if (!parsed) {
      throw ConfigError(ctx + ": unknown node kind \"" + kind + "\"");
    }
    n.kind = *parsed;
    n.label = detail::require_string(jn, "label", ctx);
    n.in_vas = detail::require_bool(jn, "in_vas", ctx);
    d.nodes.push_back(std::move(n));
  }

  const json& edges = detail::require_field(root, "edges", origin);
  if (!edges.is_array()) {
    throw ConfigError(origin + ": key \"edges\" must be an array");
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string ctx = origin + ": edges[" + std::to_string(i) + "]";
    const json& je = edges[i];
    detail::require_keys(je, {"src", "dst", "kind", "annotation", "indirect"},
                         ctx);
    Edge e;
    e.src = detail::require_string(je, "src", ctx);
    e.dst = detail::require_string(je, "dst", ctx);
    const std::string kind = detail::require_string(je, "kind", ctx);
    const auto parsed = edge_kind_from_string(kind);
    if (!parsed) {
      throw ConfigError(ctx + ": unknown edge kind \"" + kind + "\"");
    }
    e.kind = *parsed;
    if (je.contains("annotation")) {
      if (!je["annotation"].is_string()) {
        throw ConfigError(ctx + ": key \"annotation\" must be a string");
      }
      e.annotation = je["annotation"].get<std::string>();
    }
    if (je.contains("indirect")) {
      if (!je["indirect"].is_boolean()) {
        throw ConfigError(ctx + ": key \"indirect\" must be a boolean");
      }
      e.indirect = je["indirect"].get<bool>();
    }
    d.edges.push_back(std::move(e));
  }
  return d;
}

Diagram load_diagram_file(const std::filesystem::path& path) {
  return parse_diagram_json(read_text_file(path), path.string());
}

std::string diagram_to_json(const Diagram& d) {
  json root;
  root["title"] = d.title;
  if (d.comment) root["comment"] = *d.comment;
  root["nodes"] = json::array();
  for (const auto& n : d.nodes) {
    json jn;
    jn["id"] = n.id;
    jn["kind"] = to_string(n.kind);
    jn["label"] = n.label;
    jn["in_vas"] = n.in_vas;
    root["nodes"].push_back(std::move(jn));
  }
  root["edges"] = json::array();
  for (const auto& e : d.edges) {
    json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["kind"] = to_string(e.kind);
    if (e.annotation) je["annotation"] = *e.annotation;
    if (e.indirect) je["indirect"] = true;
    root["edges"].push_back(std::move(je));
  }
  return root.dump(2) + "\n";
}

void save_diagram_file(const Diagram& d, const std::filesystem::path& path) {
  write_text_file(path, diagram_to_json(d));
}

std::vector<ChangelogEntry> parse_changelog_jsonl(const std::string& text,
                                                  const std::string& origin) {
  std::vector<ChangelogEntry> entries;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Tolerate blank lines between records.
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string ctx = origin + ":" + std::to_string(lineno);
    const json je = detail::parse_json(line, ctx);
    detail::require_keys(
        je, {"year", "action", "process_id", "description", "reference"}, ctx);
    ChangelogEntry e;
    e.year = static_cast<int>(detail::require_int(je, "year", ctx));
    const std::string action = detail::require_string(je, "action", ctx);
    const auto parsed = change_action_from_string(action);
    if (!parsed) {
      throw ConfigError(ctx + ": unknown action \"" + action + "\"");
    }
    e.action = *parsed;
    if (je.contains("process_id") && !je["process_id"].is_null()) {
      if (!je["process_id"].is_string()) {
        throw ConfigError(ctx + ": key \"process_id\" must be a string or null");
      }
      e.process_id = je["process_id"].get<std::string>();
    }
    if (e.action != ChangeAction::Note && !e.process_id) {
      throw ConfigError(ctx + ": action " + action + " requires a process_id");
    }
    e.description = detail::require_string(je, "description", ctx);
    e.reference = detail::require_string(je, "reference", ctx);
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<ChangelogEntry> load_changelog_file(
    const std::filesystem::path& path) {
  return parse_changelog_jsonl(read_text_file(path), path.string());
}

std::string changelog_to_jsonl(std::span<const ChangelogEntry> entries) {
  std::string out;
  for (const auto& e : entries) {
    json je;
    je["year"] = e.year;
    je["action"] = to_string(e.action);
    if (e.process_id) {
      je["process_id"] = *e.process_id;
    } else {
      je["process_id"] = nullptr;
    }
    je["description"] = e.description;
    je["reference"] = e.reference;
    out += je.dump();
    out += '\n';
  }
  return out;
}

}  // namespace vas::dfd
