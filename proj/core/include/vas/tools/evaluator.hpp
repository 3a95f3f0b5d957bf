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

#include "vas/tools/alternative.hpp"

namespace vas::tools {

enum class Comparator { Lt, Le, Eq, Ge, Gt, Contains, InSet };

const char* to_string(Comparator c);
std::optional<Comparator> comparator_from_string(std::string_view s);

// A binary predicate over one attribute. Total over any input: a missing
// attribute or a type mismatch evaluates to false, never to an error.
struct Evaluator {
  std::string id;
  std::string attribute;
  Comparator comparator = Comparator::Eq;
  Value constant;
};

// Semantics per comparator:
//   Lt/Le/Ge/Gt  numbers numerically, strings lexicographically
//   Eq           same type and equal value
//   Contains     string attribute: substring; list attribute: membership
//   InSet        constant is a string list; string attribute must be in it
bool evaluate(const Evaluator& e, const Alternative& alt);

}  // namespace vas::tools
