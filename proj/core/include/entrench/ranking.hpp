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

#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "entrench/formula.hpp"
#include "entrench/rank.hpp"

namespace entrench {

/// How strictly rank 1 is reserved. `kStrict`: rank 1 iff tautology.
/// `kPaper`: protected domain knowledge may also sit at rank 1.
enum class Mode { kStrict, kPaper };

const char* to_string(Mode mode);
Mode parse_mode(std::string_view text);

struct Belief {
  Formula formula;
  Rank rank;
  bool is_protected = false;
};

struct RankedSchema {
  Schema schema;
  Rank rank;
  bool is_protected = false;
};

/// Finite partial entrenchment ranking over ground formulas, plus the rule
/// schemas whose instances it holds.
///
/// Schemas are grounded eagerly: every constant that shows up in a ground
/// belief is instantiated once for every schema, at the schema's rank, and
/// then remembered in constants(). An instance that is later removed by a
/// contraction therefore stays removed.
///
/// Beliefs at rank 0 are never stored, so beliefs() is exp(B).
class EntrenchmentRanking {
 public:
  EntrenchmentRanking() = default;

  /// Keyed by canonical formula text.
  const std::map<std::string, Belief>& beliefs() const { return beliefs_; }
  const std::vector<RankedSchema>& schemas() const { return schemas_; }
  const std::set<std::string>& constants() const { return constants_; }

  bool empty() const { return beliefs_.empty() && schemas_.empty(); }
  std::size_t size() const { return beliefs_.size(); }

  /// 0 when `f` is not an explicit belief.
  Rank rank_of(const Formula& f) const;
  bool contains(const Formula& f) const;
  bool is_protected(const Formula& f) const;

  /// Sets the rank of `f`; rank 0 removes it. Does not ground schemas.
  void set(const Formula& f, Rank rank, bool is_protected = false);
  void erase(const Formula& f);

  /// Adds a schema and, unless `ground` is false, grounds it over the
  /// constants known so far.
  void add_schema(const Schema& schema, Rank rank, bool is_protected = false,
                  bool ground = true);

  /// Marks constants as already grounded without instantiating anything.
  void mark_grounded(const std::set<std::string>& constants);
  void unmark_grounded(const std::set<std::string>& constants);

  /// Instantiates every schema for constants of ground beliefs (plus
  /// `extra`) not yet grounded. Returns the newly grounded constants.
  std::vector<std::string> ground_new_constants(
      const std::set<std::string>& extra = {});

  /// exp(B) in canonical order.
  std::vector<Formula> explicit_beliefs() const;
  /// {b : B(b) >= j}.
  std::vector<Formula> cut(Rank j) const;
  /// {b : B(b) > j}.
  std::vector<Formula> strict_cut(Rank j) const;
  /// Distinct ranks present in exp(B), descending.
  std::vector<Rank> levels() const;
  /// Beliefs sorted by rank descending, then canonical text.
  std::vector<Belief> sorted() const;

  friend bool operator==(const EntrenchmentRanking& a,
                         const EntrenchmentRanking& b);

 private:
  std::map<std::string, Belief> beliefs_;
  std::vector<RankedSchema> schemas_;
  std::set<std::string> constants_;
};

struct Violation {
  enum class Severity { kError, kWarning };

  std::string condition;  // "PER1", "PER2", "PER3" or "CONSISTENCY"
  Severity severity = Severity::kError;
  std::string message;
  std::vector<std::string> witnesses;
};

/// Checks the ranking conditions under `mode`. An inconsistent exp(B) is
/// reported as a warning, never as an error. Never throws.
std::vector<Violation> validate(const EntrenchmentRanking& ranking, Mode mode);

bool has_errors(const std::vector<Violation>& violations);

}  // namespace entrench
