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

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "vas/tools/alternative.hpp"
#include "vas/tools/evaluator.hpp"

namespace vas::tools {

// ---------------------------------------------------------------------------
// Filter: the maximal subset matching all selected evaluators, input order
// preserved. An empty selection keeps everything.
// ---------------------------------------------------------------------------
std::vector<Alternative> filter(std::span<const Alternative> alts,
                                std::span<const Evaluator> selected);

// ---------------------------------------------------------------------------
// Sort
// ---------------------------------------------------------------------------
enum class SortDirection { Ascending, Descending };
enum class MissingPolicy { Last, Error };

struct KeyFunction {
  std::string attribute;
  SortDirection direction = SortDirection::Ascending;
  MissingPolicy missing = MissingPolicy::Last;
};

// Stable permutation of the input ordered by the key attribute. Equal keys
// keep input order. Under MissingPolicy::Last, alternatives without the
// attribute follow all keyed ones in input order; under Error the first
// such alternative raises ConfigError naming its key.
std::vector<Alternative> sort_by(std::span<const Alternative> alts,
                                 const KeyFunction& key);

// ---------------------------------------------------------------------------
// Search: retrieval (keep alternatives whose text shares at least one term
// with the query) composed with ranking (score then stable-sort).
// ---------------------------------------------------------------------------
struct Query {
  std::vector<std::string> terms;  // lowercase
  std::string target_attribute;
};

struct ScoredAlternative {
  Alternative alternative;
  double score = 0;
};

// Lowercases and splits on non-alphanumeric characters; no stemming.
std::vector<std::string> tokenize(std::string_view text);

// Pluggable scorer over a document's token list. The default counts the
// distinct query terms present, so scores are positive integers.
using Scorer =
    std::function<double(std::span<const std::string> tokens, const Query&)>;
double distinct_term_count(std::span<const std::string> tokens, const Query& q);

// Results sorted by score descending, ties in input order. Only retrieved
// alternatives (score > 0 under the default scorer) are returned. Throws
// ConfigError when q.terms is empty.
std::vector<ScoredAlternative> search(std::span<const Alternative> alts,
                                      const Query& q,
                                      const Scorer& scorer = distinct_term_count);

// ---------------------------------------------------------------------------
// Moderation
// ---------------------------------------------------------------------------
enum class Severity { Low, High };
enum class ModerationAction { Keep, Flag, Remove };

const char* to_string(ModerationAction a);

// A content policy: an evaluator whose match marks a violation, plus how
// severe a violation is.
struct Policy {
  Evaluator rule;
  Severity severity = Severity::Low;
};

struct ModerationDecision {
  std::string key;
  ModerationAction action = ModerationAction::Keep;
  std::vector<std::string> violated_policy_ids;  // in policy input order
};

// One decision per alternative: Remove when any violated policy is
// high-severity, Flag when only low-severity policies are violated, Keep
// otherwise.
std::vector<ModerationDecision> moderate(std::span<const Alternative> alts,
                                         std::span<const Policy> policies);

}  // namespace vas::tools
