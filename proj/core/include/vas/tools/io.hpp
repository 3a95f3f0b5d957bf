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

#include <filesystem>
#include <string>
#include <vector>

#include "vas/tools/ops.hpp"

namespace vas::tools {

// Alternatives: JSON array of {"key": ..., "attributes": {...}} where each
// attribute is a number, string, boolean, or array of strings. Evaluators:
// array of {"id", "attribute", "op", "value"} with op one of
// <, <=, =, >=, >, contains, in-set. Policies add "severity" (low|high).
// Unknown keys are rejected everywhere.
std::vector<Alternative> parse_alternatives_json(const std::string& text,
                                                 const std::string& origin);
std::vector<Alternative> load_alternatives_file(
    const std::filesystem::path& path);

std::vector<Evaluator> parse_evaluators_json(const std::string& text,
                                             const std::string& origin);
std::vector<Evaluator> load_evaluators_file(const std::filesystem::path& path);

std::vector<Policy> parse_policies_json(const std::string& text,
                                        const std::string& origin);
std::vector<Policy> load_policies_file(const std::filesystem::path& path);

}  // namespace vas::tools
