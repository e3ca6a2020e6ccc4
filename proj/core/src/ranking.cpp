// Copyright 2026 The entrench Authors
// SPDX-License-Identifier: Apache-2.0
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

#include "entrench/ranking.hpp"

#include <algorithm>

#include "entrench/error.hpp"
#include "entrench/logic.hpp"
#include "entrench/transmutation.hpp"

namespace entrench {

const char* to_string(Mode mode) {
  return mode == Mode::kStrict ? "strict" : "paper";
}

Mode parse_mode(std::string_view text) {
  if (text == "strict") return Mode::kStrict;
  if (text == "paper") return Mode::kPaper;
  throw ParseError("unknown mode '" + std::string(text) + "'", 0);
}

Rank EntrenchmentRanking::rank_of(const Formula& f) const {
  auto it = beliefs_.find(f.to_string());
  return it == beliefs_.end() ? Rank::zero() : it->second.rank;
}

bool EntrenchmentRanking::contains(const Formula& f) const {
  return beliefs_.contains(f.to_string());
}

bool EntrenchmentRanking::is_protected(const Formula& f) const {
  auto it = beliefs_.find(f.to_string());
  return it != beliefs_.end() && it->second.is_protected;
}

void EntrenchmentRanking::set(const Formula& f, Rank rank, bool is_protected) {
  if (rank.is_zero()) {
    beliefs_.erase(f.to_string());
    return;
  }
  beliefs_.insert_or_assign(f.to_string(), Belief{f, rank, is_protected});
}

void EntrenchmentRanking::erase(const Formula& f) { beliefs_.erase(f.to_string()); }

void EntrenchmentRanking::add_schema(const Schema& schema, Rank rank,
                                     bool is_protected, bool ground) {
  if (rank.is_zero()) return;
  for (auto& s : schemas_) {
    if (s.schema == schema) {
      s.rank = rank;
      s.is_protected = is_protected;
      return;
    }
  }
  schemas_.push_back({schema, rank, is_protected});
  if (!ground) return;
  std::set<std::string> known = constants_;
  for (const auto& [text, b] : beliefs_) {
    for (const auto& c : constants_of(b.formula)) known.insert(c);
  }
  known.erase(schema.variable);
  constants_.insert(known.begin(), known.end());
  if (known.empty()) return;
  for (const Formula& instance : ground_schema(schema, known)) {
    if (!contains(instance)) set(instance, rank, is_protected);
  }
}

void EntrenchmentRanking::mark_grounded(const std::set<std::string>& constants) {
  constants_.insert(constants.begin(), constants.end());
}

void EntrenchmentRanking::unmark_grounded(const std::set<std::string>& constants) {
  for (const auto& c : constants) constants_.erase(c);
}

std::vector<std::string> EntrenchmentRanking::ground_new_constants(
    const std::set<std::string>& extra) {
  if (schemas_.empty()) return {};
  std::set<std::string> fresh;
  for (const auto& [text, b] : beliefs_) {
    for (const auto& c : constants_of(b.formula)) {
      if (!constants_.contains(c)) fresh.insert(c);
    }
  }
  for (const auto& c : extra) {
    if (!constants_.contains(c)) fresh.insert(c);
  }
  if (fresh.empty()) return {};
  for (const RankedSchema& s : schemas_) {
    for (const Formula& instance : ground_schema(s.schema, fresh)) {
      if (!contains(instance)) set(instance, s.rank, s.is_protected);
    }
  }
  constants_.insert(fresh.begin(), fresh.end());
  return {fresh.begin(), fresh.end()};
}

std::vector<Formula> EntrenchmentRanking::explicit_beliefs() const {
  std::vector<Formula> out;
  out.reserve(beliefs_.size());
  for (const auto& [text, b] : beliefs_) out.push_back(b.formula);
  return out;
}

std::vector<Formula> EntrenchmentRanking::cut(Rank j) const {
  std::vector<Formula> out;
  for (const auto& [text, b] : beliefs_) {
    if (b.rank >= j) out.push_back(b.formula);
  }
  return out;
}

std::vector<Formula> EntrenchmentRanking::strict_cut(Rank j) const {
  std::vector<Formula> out;
  for (const auto& [text, b] : beliefs_) {
    if (b.rank > j) out.push_back(b.formula);
  }
  return out;
}

std::vector<Rank> EntrenchmentRanking::levels() const {
  std::vector<Rank> ranks;
  for (const auto& [text, b] : beliefs_) ranks.push_back(b.rank);
  std::sort(ranks.begin(), ranks.end(),
            [](Rank a, Rank b) { return a.value() > b.value(); });
  std::vector<Rank> out;
  for (Rank r : ranks) {
    if (out.empty() || !(out.back() == r)) out.push_back(r);
  }
  return out;
}

std::vector<Belief> EntrenchmentRanking::sorted() const {
  std::vector<Belief> out;
  for (const auto& [text, b] : beliefs_) out.push_back(b);
  std::stable_sort(out.begin(), out.end(), [](const Belief& a, const Belief& b) {
    return a.rank > b.rank;
  });
  return out;
}

bool operator==(const EntrenchmentRanking& a, const EntrenchmentRanking& b) {
  if (a.beliefs_.size() != b.beliefs_.size()) return false;
  for (auto ia = a.beliefs_.begin(), ib = b.beliefs_.begin(); ia != a.beliefs_.end();
       ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second.rank == ib->second.rank) ||
        ia->second.is_protected != ib->second.is_protected) {
      return false;
    }
  }
  if (a.schemas_.size() != b.schemas_.size()) return false;
  for (std::size_t i = 0; i < a.schemas_.size(); ++i) {
    const auto& x = a.schemas_[i];
    const auto& y = b.schemas_[i];
    if (!(x.schema == y.schema) || !(x.rank == y.rank) ||
        x.is_protected != y.is_protected) {
      return false;
    }
  }
  return a.constants_ == b.constants_;
}

// {{{ Validation

namespace {

std::vector<std::string> texts(const std::vector<Formula>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

}  // namespace

std::vector<Violation> validate(const EntrenchmentRanking& ranking, Mode mode) {
  std::vector<Violation> out;
  for (const Belief& b : ranking.sorted()) {
    const std::string text = b.formula.to_string();
    const bool tautology = is_tautology(b.formula);
    if (is_contradiction(b.formula)) {
      out.push_back({"PER2", Violation::Severity::kError,
                     "contradiction " + text + " has rank " + b.rank.to_string(),
                     {text}});
      continue;
    }
    // Tautologies are governed by PER3 alone; every set entails them.
    std::vector<Formula> above = ranking.strict_cut(b.rank);
    if (!tautology && entails(above, b.formula)) {
      out.push_back({"PER1", Violation::Severity::kError,
                     "more entrenched beliefs entail " + text,
                     texts(minimal_premises(above, b.formula))});
    }
    if (b.rank.is_top() && !tautology) {
      if (mode == Mode::kStrict) {
        out.push_back({"PER3", Violation::Severity::kError,
                       "non-tautology " + text + " has the maximal rank", {text}});
      } else if (!b.is_protected) {
        out.push_back({"PER3", Violation::Severity::kError,
                       "unprotected non-tautology " + text + " has the maximal rank",
                       {text}});
      }
    }
    if (tautology && !b.rank.is_top()) {
      out.push_back({"PER3", Violation::Severity::kError,
                     "tautology " + text + " ranked below the maximum", {text}});
    }
    if (b.is_protected && !b.rank.is_top()) {
      out.push_back({"PER3", Violation::Severity::kError,
                     "protected " + text + " ranked below the maximum", {text}});
    }
  }
  for (const RankedSchema& s : ranking.schemas()) {
    if (!s.rank.is_top()) continue;
    if (mode == Mode::kStrict || !s.is_protected) {
      out.push_back({"PER3", Violation::Severity::kError,
                     "schema " + s.schema.to_string() + " has the maximal rank",
                     {s.schema.to_string()}});
    }
  }
  if (!is_consistent(ranking.explicit_beliefs())) {
    out.push_back({"CONSISTENCY", Violation::Severity::kWarning,
                   "inconsistent exp(B), inconsistency degree " +
                       inconsistency_degree(ranking).to_string(),
                   {}});
  }
  return out;
}

bool has_errors(const std::vector<Violation>& violations) {
  return std::any_of(violations.begin(), violations.end(), [](const Violation& v) {
    return v.severity == Violation::Severity::kError;
  });
}

// }}}

}  // namespace entrench
