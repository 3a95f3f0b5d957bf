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

// Internal helpers shared by the JSON readers. Not installed.

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>

#include <json.hpp>

#include "vas/common/errors.hpp"

namespace vas::detail {

using json = nlohmann::json;

// Parses text, wrapping syntax errors as ParseError with `origin` ahead of
// nlohmann's "at line L, column C" description.
inline json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

// Strict schemas: every present key must be on the allow list.
inline void require_keys(const json& obj,
                         std::initializer_list<std::string_view> allowed,
                         const std::string& context) {
  if (!obj.is_object()) {
    throw ConfigError(context + ": expected a JSON object");
  }
  for (const auto& item : obj.items()) {
    bool known = false;
    for (std::string_view k : allowed) {
      if (item.key() == k) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError(context + ": unknown key \"" + item.key() + "\"");
    }
  }
}

inline const json& require_field(const json& obj, const char* key,
                                 const std::string& context) {
  const auto it = obj.find(key);
  if (it == obj.end()) {
    throw ConfigError(context + ": missing key \"" + std::string(key) + "\"");
  }
  return *it;
}

inline std::string require_string(const json& obj, const char* key,
                                  const std::string& context) {
  const json& v = require_field(obj, key, context);
  if (!v.is_string()) {
    throw ConfigError(context + ": key \"" + std::string(key) +
                      "\" must be a string");
  }
  return v.get<std::string>();
}

inline bool require_bool(const json& obj, const char* key,
                         const std::string& context) {
  const json& v = require_field(obj, key, context);
  if (!v.is_boolean()) {
    throw ConfigError(context + ": key \"" + std::string(key) +
                      "\" must be a boolean");
  }
  return v.get<bool>();
}

inline long long require_int(const json& obj, const char* key,
                             const std::string& context) {
  const json& v = require_field(obj, key, context);
  if (!v.is_number_integer()) {
    throw ConfigError(context + ": key \"" + std::string(key) +
                      "\" must be an integer");
  }
  return v.get<long long>();
}

}  // namespace vas::detail
