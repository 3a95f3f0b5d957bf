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

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace vas::tools {

// Attribute values an alternative can carry.
using Value = std::variant<double, std::string, bool, std::vector<std::string>>;

// The universal unit every tool transforms: an item, person, or option the
// system may make visible.
struct Alternative {
  std::string key;
  std::map<std::string, Value> attributes;

  const Value* attribute(const std::string& name) const {
    const auto it = attributes.find(name);
    return it == attributes.end() ? nullptr : &it->second;
  }
};

// Total order across the value space so sorting is defined even when an
// attribute mixes types: numbers < strings < booleans < string lists, each
// ordered naturally within its type.
bool value_less(const Value& a, const Value& b);

}  // namespace vas::tools
