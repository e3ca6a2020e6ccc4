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

// Classical propositional reasoning: clause conversion by distribution (no
// auxiliary variables), a small DPLL solver, and entailment by refutation.
// Formula sets handled here are a few dozen formulas at most.

#pragma once

#include <map>
#include <span>
#include <vector>

#include "entrench/formula.hpp"

namespace entrench {

/// Literal encoding: +v / -v for variable v >= 1.
using Literal = int;
using Clause = std::vector<Literal>;

/// Conjunctive normal form of a formula set. Clauses are sorted, free of
/// complementary pairs, and unique.
class ClauseSet {
 public:
  ClauseSet() = default;

  /// Converts and adds `f` (or its negation when `positive` is false).
  void add(const Formula& f, bool positive = true);

  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  int variable_count() const { return static_cast<int>(atoms_.size()); }

  /// Sorts and removes duplicate clauses.
  void normalize();

 private:
  int variable(const Atom& a);
  std::vector<Clause> convert(const Formula& f, bool positive);

  std::map<Atom, int> index_;
  std::vector<Atom> atoms_;
  std::vector<Clause> clauses_;
};

/// DPLL with unit propagation. `model`, when given, receives one value per
/// variable (index 0 unused) on success.
/// On success `model`, when given, holds the value of atoms()[k] at k.
bool is_satisfiable(const ClauseSet& cnf, std::vector<bool>* model = nullptr);

bool is_consistent(std::span<const Formula> formulas);

/// premises |- goal, decided as unsatisfiability of premises + {!goal}.
bool entails(std::span<const Formula> premises, const Formula& goal);

bool is_tautology(const Formula& f);
bool is_contradiction(const Formula& f);
bool is_contingent(const Formula& f);
bool equivalent(const Formula& a, const Formula& b);

/// A subset-minimal subset of `premises` that still entails `goal`, found by
/// deletion in the given order. Empty when `goal` is a tautology; throws
/// PreconditionError when the premises do not entail the goal.
std::vector<Formula> minimal_premises(std::span<const Formula> premises,
                                      const Formula& goal);

}  // namespace entrench
