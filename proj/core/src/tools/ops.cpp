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

#include "vas/tools/ops.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "vas/common/errors.hpp"

namespace vas::tools {

bool value_less(const Value& a, const Value& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  return std::visit(
      [&b](const auto& lhs) {
        using T = std::decay_t<decltype(lhs)>;
        return lhs < std::get<T>(b);
      },
      a);
}

const char* to_string(Comparator c) {
  switch (c) {
    case Comparator::Lt:
      return "<";
    case Comparator::Le:
      return "<=";
    case Comparator::Eq:
      return "=";
    case Comparator::Ge:
      return ">=";
    case Comparator::Gt:
      return ">";
    case Comparator::Contains:
      return "contains";
    case Comparator::InSet:
      return "in-set";
  }
  return "?";
}

std::optional<Comparator> comparator_from_string(std::string_view s) {
  if (s == "<") return Comparator::Lt;
  if (s == "<=") return Comparator::Le;
  if (s == "=") return Comparator::Eq;
  if (s == ">=") return Comparator::Ge;
  if (s == ">") return Comparator::Gt;
  if (s == "contains") return Comparator::Contains;
  if (s == "in-set") return Comparator::InSet;
  return std::nullopt;
}

namespace {

// Three-way ordering where comparable; nullopt for types that do not order
// against each other (predicate then evaluates to false).
std::optional<int> order_values(const Value& a, const Value& b) {
  if (std::holds_alternative<double>(a) && std::holds_alternative<double>(b)) {
    const double x = std::get<double>(a);
    const double y = std::get<double>(b);
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  if (std::holds_alternative<std::string>(a) &&
      std::holds_alternative<std::string>(b)) {
    return std::get<std::string>(a).compare(std::get<std::string>(b));
  }
  return std::nullopt;
}

bool values_equal(const Value& a, const Value& b) {
  return a.index() == b.index() && a == b;
}

}  // namespace

bool evaluate(const Evaluator& e, const Alternative& alt) {
  const Value* v = alt.attribute(e.attribute);
  if (v == nullptr) return false;  // total: missing attribute never matches

  switch (e.comparator) {
    case Comparator::Eq:
      return values_equal(*v, e.constant);
    case Comparator::Lt:
    case Comparator::Le:
    case Comparator::Ge:
    case Comparator::Gt: {
      const auto ord = order_values(*v, e.constant);
      if (!ord) return false;
      switch (e.comparator) {
        case Comparator::Lt:
          return *ord < 0;
        case Comparator::Le:
          return *ord <= 0;
        case Comparator::Ge:
          return *ord >= 0;
        default:
          return *ord > 0;
      }
    }
    case Comparator::Contains: {
      const auto* needle = std::get_if<std::string>(&e.constant);
      if (needle == nullptr) return false;
      if (const auto* text = std::get_if<std::string>(v)) {
        return text->find(*needle) != std::string::npos;
      }
      if (const auto* list = std::get_if<std::vector<std::string>>(v)) {
        return std::find(list->begin(), list->end(), *needle) != list->end();
      }
      return false;
    }
    case Comparator::InSet: {
      const auto* set = std::get_if<std::vector<std::string>>(&e.constant);
      const auto* s = std::get_if<std::string>(v);
      if (set == nullptr || s == nullptr) return false;
      return std::find(set->begin(), set->end(), *s) != set->end();
    }
  }
  return false;
}

std::vector<Alternative> filter(std::span<const Alternative> alts,
                                std::span<const Evaluator> selected) {
  std::vector<Alternative> out;
  for (const auto& alt : alts) {
    bool keep = true;
    for (const auto& e : selected) {
      if (!evaluate(e, alt)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(alt);
  }
  return out;
}

std::vector<Alternative> sort_by(std::span<const Alternative> alts,
                                 const KeyFunction& key) {
  std::vector<Alternative> keyed;
  std::vector<Alternative> missing;
  for (const auto& alt : alts) {
    if (alt.attribute(key.attribute) != nullptr) {
      keyed.push_back(alt);
    } else {
      if (key.missing == MissingPolicy::Error) {
        throw ConfigError("sort: alternative \"" + alt.key +
                          "\" has no attribute \"" + key.attribute + "\"");
      }
      missing.push_back(alt);
    }
  }

  const bool asc = key.direction == SortDirection::Ascending;
  std::stable_sort(keyed.begin(), keyed.end(),
                   [&](const Alternative& a, const Alternative& b) {
                     const Value& va = *a.attribute(key.attribute);
                     const Value& vb = *b.attribute(key.attribute);
                     return asc ? value_less(va, vb) : value_less(vb, va);
                   });

  keyed.insert(keyed.end(), missing.begin(), missing.end());
  return keyed;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      current += static_cast<char>(std::tolower(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

double distinct_term_count(std::span<const std::string> tokens, const Query& q) {
  const std::set<std::string> present(tokens.begin(), tokens.end());
  int count = 0;
  std::set<std::string> counted;
  for (const auto& term : q.terms) {
    if (present.count(term) > 0 && counted.insert(term).second) ++count;
  }
  return count;
}

std::vector<ScoredAlternative> search(std::span<const Alternative> alts,
                                      const Query& q, const Scorer& scorer) {
  if (q.terms.empty()) {
    throw ConfigError("search: query has no terms");
  }
  std::vector<ScoredAlternative> hits;
  for (const auto& alt : alts) {
    const Value* v = alt.attribute(q.target_attribute);
    const auto* text = v ? std::get_if<std::string>(v) : nullptr;
    if (text == nullptr) continue;
    const std::vector<std::string> tokens = tokenize(*text);
    const double score = scorer(tokens, q);
    if (score > 0) hits.push_back({alt, score});
  }
  std::stable_sort(hits.begin(), hits.end(),
                   [](const ScoredAlternative& a, const ScoredAlternative& b) {
                     return a.score > b.score;
                   });
  return hits;
}

const char* to_string(ModerationAction a) {
  switch (a) {
    case ModerationAction::Keep:
      return "Keep";
    case ModerationAction::Flag:
      return "Flag";
    case ModerationAction::Remove:
      return "Remove";
  }
  return "?";
}

std::vector<ModerationDecision> moderate(std::span<const Alternative> alts,
                                         std::span<const Policy> policies) {
  std::vector<ModerationDecision> decisions;
  decisions.reserve(alts.size());
  for (const auto& alt : alts) {
    ModerationDecision d;
    d.key = alt.key;
    bool high = false;
    for (const auto& p : policies) {
      if (evaluate(p.rule, alt)) {
        d.violated_policy_ids.push_back(p.rule.id);
        if (p.severity == Severity::High) high = true;
      }
    }
    d.action = d.violated_policy_ids.empty()
                   ? ModerationAction::Keep
                   : (high ? ModerationAction::Remove : ModerationAction::Flag);
    decisions.push_back(std::move(d));
  }
  return decisions;
}

}  // namespace vas::tools
