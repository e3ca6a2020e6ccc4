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

// Operations on finite partial entrenchment rankings: degree of acceptance,
// the maxi-adjustment transmutation and its contraction and expansion
// halves, inconsistency degree, the consistent cut, and the (C-R)
// contraction kept as a baseline.
//
// Every transmutation returns a fresh ranking together with a report that
// is an exact diff between input and output.

#pragma once

#include <string>
#include <vector>

#include "entrench/formula.hpp"
#include "entrench/ranking.hpp"

namespace entrench {

struct RankChange {
  std::string formula;
  Rank before;
  Rank after;
  bool is_protected = false;
};

struct AdjustmentReport {
  /// "maxi_adjust", "contract", "expand".
  std::string operation;
  std::string formula;
  Rank target;
  /// Only formulas whose rank changed; sorted by formula text.
  std::vector<RankChange> changes;
  std::vector<std::string> grounded_constants;
  /// Derivation notes: which level subsets were hit, which B+ branch fired.
  std::vector<std::string> notes;

  bool empty() const { return changes.empty() && grounded_constants.empty(); }
  std::vector<std::string> removed() const;
  std::vector<std::string> raised() const;
  std::vector<std::string> lowered() const;
};

struct Adjustment {
  EntrenchmentRanking ranking;
  AdjustmentReport report;
};

/// Largest j among the ranks of exp(B) and 1 such that {b : B(b) >= j}
/// entails `f`; 1 for tautologies, 0 when `f` is not in content(B).
Rank degree(const EntrenchmentRanking& ranking, const Formula& f);

/// B-(f, i). A no-op when i >= degree(B, f).
Adjustment contract(const EntrenchmentRanking& ranking, const Formula& f, Rank i);

/// B+(f, i).
Adjustment expand(const EntrenchmentRanking& ranking, const Formula& f, Rank i);

/// B*(f, i): B-(f, i) when i <= degree(B, f), else (B-(!f, 0))+(f, i).
/// Schemas are grounded for constants that the result introduces.
Adjustment maxi_adjust(const EntrenchmentRanking& ranking, const Formula& f, Rank i);

/// Largest rank j with {b in exp(B) : B(b) >= j} inconsistent; 0 when
/// exp(B) is consistent.
Rank inconsistency_degree(const EntrenchmentRanking& ranking);

/// {b in exp(B) : B(b) > inconsistency_degree(B)}, canonical order.
std::vector<Formula> consistent_cut(const EntrenchmentRanking& ranking);

/// The ranking restricted to the consistent cut.
EntrenchmentRanking consistent_cut_ranking(const EntrenchmentRanking& ranking);

/// (C-R) contraction: keeps only beliefs strictly more entrenched than
/// `f`. Tautologies leave the ranking unchanged.
EntrenchmentRanking cr_contract(const EntrenchmentRanking& ranking, const Formula& f);

/// Revision through (C-R) and the Levi identity: contract `!f`, then add
/// `f` at rank `i`.
EntrenchmentRanking cr_revise(const EntrenchmentRanking& ranking, const Formula& f,
                              Rank i);

/// Diff between two rankings (formulas and grounded constants).
AdjustmentReport diff(const EntrenchmentRanking& before,
                      const EntrenchmentRanking& after);

/// Replays a report on `before`. Throws PreconditionError when a change's
/// `before` rank does not match.
EntrenchmentRanking apply_report(const EntrenchmentRanking& before,
                                 const AdjustmentReport& report);

/// Inverse of apply_report.
EntrenchmentRanking revert_report(const EntrenchmentRanking& after,
                                  const AdjustmentReport& report);

}  // namespace entrench
