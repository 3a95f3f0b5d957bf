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
#include <span>
#include <string>
#include <vector>

#include "vas/dfd/changelog.hpp"
#include "vas/dfd/diagram.hpp"

namespace vas::dfd {

// Diagram files are UTF-8 JSON with top-level keys `title`, `nodes`,
// `edges` and an optional `comment`. Node objects carry `id`, `kind`,
// `label`, `in_vas`; edge objects `src`, `dst`, `kind`, optional
// `annotation` and optional `indirect`. Unknown keys are rejected.
// `origin` is used in error messages (typically the file path).
Diagram parse_diagram_json(const std::string& text, const std::string& origin);
Diagram load_diagram_file(const std::filesystem::path& path);
std::string diagram_to_json(const Diagram& d);
void save_diagram_file(const Diagram& d, const std::filesystem::path& path);

// Changelogs are JSON Lines: one entry per line with fields `year`,
// `action`, `process_id` (string or null), `description`, `reference`.
std::vector<ChangelogEntry> parse_changelog_jsonl(const std::string& text,
                                                  const std::string& origin);
std::vector<ChangelogEntry> load_changelog_file(
    const std::filesystem::path& path);
std::string changelog_to_jsonl(std::span<const ChangelogEntry> entries);

}  // namespace vas::dfd
