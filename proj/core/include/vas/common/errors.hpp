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

#include <stdexcept>
#include <string>

namespace vas {

// Bad field values, unknown keys, violated preconditions. The CLI maps
// these to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

// Malformed input text; the message carries origin plus line/column.
class ParseError : public ConfigError {
 public:
  explicit ParseError(const std::string& what_arg) : ConfigError(what_arg) {}
};

// Missing, unreadable, or unwritable paths. The CLI maps these to exit
// code 3.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what_arg)
      : std::runtime_error(what_arg) {}
};

}  // namespace vas
