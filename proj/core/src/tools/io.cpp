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

#include "vas/tools/io.hpp"

#include <set>

#include "internal/json_util.hpp"
#include "vas/common/fs.hpp"

namespace vas::tools {

using detail::json;

namespace {

Value value_from_json(const json& j, const std::string& ctx) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_array()) {
    std::vector<std::string> items;
    for (const auto& item : j) {
      if (!item.is_string()) {
        throw ConfigError(ctx + ": list attributes must contain only strings");
      }
      items.push_back(item.get<std::string>());
    }
    return items;
  }
  throw ConfigError(ctx +
                    ": attribute values must be number, string, boolean, or "
                    "string list");
}

Evaluator evaluator_from_json(const json& je, const std::string& ctx,
                              bool allow_severity) {
  if (allow_severity) {
    detail::require_keys(je, {"id", "attribute", "op", "value", "severity"},
                         ctx);
  } else {
    detail::require_keys(je, {"id", "attribute", "op", "value"}, ctx);
  }
  Evaluator e;
  e.id = detail::require_string(je, "id", ctx);
  e.attribute = detail::require_string(je, "attribute", ctx);
  if (e.attribute.empty()) {
    throw ConfigError(ctx + ": attribute name must be nonempty");
  }
  const std::string op = detail::require_string(je, "op", ctx);
  const auto cmp = comparator_from_string(op);
  if (!cmp) {
    throw ConfigError(ctx + ": unknown comparator \"" + op + "\"");
  }
  e.comparator = *cmp;
  e.constant = value_from_json(detail::require_field(je, "value", ctx), ctx);
  return e;
}

}  // namespace

std::vector<Alternative> parse_alternatives_json(const std::string& text,
                                                 const std::string& origin) {
  const json root = detail::parse_json(text, origin);
  if (!root.is_array()) {
    throw ConfigError(origin + ": expected a JSON array of alternatives");
  }
  std::vector<Alternative> alts;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string ctx = origin + "[" + std::to_string(i) + "]";
    const json& ja = root[i];
    detail::require_keys(ja, {"key", "attributes"}, ctx);
    Alternative alt;
    alt.key = detail::require_string(ja, "key", ctx);
    if (!seen.insert(alt.key).second) {
      throw ConfigError(ctx + ": duplicate key \"" + alt.key + "\"");
    }
    const json& attrs = detail::require_field(ja, "attributes", ctx);
    if (!attrs.is_object()) {
      throw ConfigError(ctx + ": \"attributes\" must be an object");
    }
    for (const auto& item : attrs.items()) {
      if (item.key().empty()) {
        throw ConfigError(ctx + ": attribute names must be nonempty");
      }
      alt.attributes[item.key()] = value_from_json(item.value(), ctx);
    }
    alts.push_back(std::move(alt));
  }
  return alts;
}

std::vector<Alternative> load_alternatives_file(
    const std::filesystem::path& path) {
  return parse_alternatives_json(read_text_file(path), path.string());
}

std::vector<Evaluator> parse_evaluators_json(const std::string& text,
                                             const std::string& origin) {
  const json root = detail::parse_json(text, origin);
  if (!root.is_array()) {
    throw ConfigError(origin + ": expected a JSON array of evaluators");
  }
  std::vector<Evaluator> evals;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string ctx = origin + "[" + std::to_string(i) + "]";
    evals.push_back(evaluator_from_json(root[i], ctx, /*allow_severity=*/false));
  }
  return evals;
}

std::vector<Evaluator> load_evaluators_file(const std::filesystem::path& path) {
  return parse_evaluators_json(read_text_file(path), path.string());
}

std::vector<Policy> parse_policies_json(const std::string& text,
                                        const std::string& origin) {
  const json root = detail::parse_json(text, origin);
  if (!root.is_array()) {
    throw ConfigError(origin + ": expected a JSON array of policies");
  }
  std::vector<Policy> policies;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string ctx = origin + "[" + std::to_string(i) + "]";
    const json& jp = root[i];
    Policy p;
    p.rule = evaluator_from_json(jp, ctx, /*allow_severity=*/true);
    const std::string sev = detail::require_string(jp, "severity", ctx);
    if (sev == "low") {
      p.severity = Severity::Low;
    } else if (sev == "high") {
      p.severity = Severity::High;
    } else {
      throw ConfigError(ctx + ": severity must be \"low\" or \"high\"");
    }
    policies.push_back(std::move(p));
  }
  return policies;
}

std::vector<Policy> load_policies_file(const std::filesystem::path& path) {
  return parse_policies_json(read_text_file(path), path.string());
}

}  // namespace vas::tools
