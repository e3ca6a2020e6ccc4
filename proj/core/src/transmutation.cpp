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

#include "entrench/transmutation.hpp"

#include <algorithm>
#include <cassert>
#include <iterator>
#include <optional>
#include <utility>

#include "entrench/error.hpp"
#include "entrench/logic.hpp"

namespace entrench {

namespace {

// Above this many removable beliefs on one level the minimum removal set is
// no longer searched exhaustively; a subset-minimal one is used instead.
constexpr std::size_t kExhaustiveLevelLimit = 16;
// Minimal subsets are only listed in report notes up to this level size.
constexpr std::size_t kNoteLevelLimit = 10;

void require_contingent(const Formula& f, const char* op) {
  if (is_tautology(f)) {
    throw PreconditionError(std::string(op) + ": " + f.to_string() +
                            " is a tautology");
  }
  if (is_contradiction(f)) {
    throw PreconditionError(std::string(op) + ": " + f.to_string() +
                            " is a contradiction");
  }
}

std::string join_texts(const std::vector<Formula>& fs) {
  std::string out = "{";
  for (std::size_t k = 0; k < fs.size(); ++k) {
    if (k) out += ", ";
    out += fs[k].to_string();
  }
  return out + "}";
}

std::vector<Formula> concat(const std::vector<Formula>& a,
                            const std::vector<Formula>& b) {
  std::vector<Formula> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Calls `visit(indices)` for every k-subset of [0, n) in lexicographic order
// until it returns true. Returns whether any call did.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit visit) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t j = 0; j < k; ++j) idx[j] = j;
  while (true) {
    if (visit(idx)) return true;
    std::size_t j = k;
    while (j > 0 && idx[j - 1] == n - k + j - 1) --j;
    if (j == 0) return false;
    ++idx[j - 1];
    for (std::size_t t = j; t < k; ++t) idx[t] = idx[t - 1] + 1;
  }
}

// Minimal subsets G of `level` with kept + G |- goal.
std::vector<std::vector<Formula>> minimal_entailing_subsets(
    const std::vector<Formula>& kept, const std::vector<Formula>& level,
    const Formula& goal) {
  std::vector<std::vector<std::size_t>> found;
  for (std::size_t k = 1; k <= level.size(); ++k) {
    for_each_combination(level.size(), k, [&](const std::vector<std::size_t>& idx) {
      for (const auto& m : found) {
        if (std::includes(idx.begin(), idx.end(), m.begin(), m.end())) return false;
      }
      std::vector<Formula> premises = kept;
      for (std::size_t j : idx) premises.push_back(level[j]);
      if (entails(premises, goal)) found.push_back(idx);
      return false;
    });
  }
  std::vector<std::vector<Formula>> out;
  for (const auto& idx : found) {
    std::vector<Formula> subset;
    for (std::size_t j : idx) subset.push_back(level[j]);
    out.push_back(std::move(subset));
  }
  return out;
}

// Smallest set H of `removable` such that kept + fixed + (removable - H)
// does not entail goal; ties go to the lexicographically first by position
// (removable is in canonical order).
std::optional<std::vector<std::size_t>> minimum_removal(
    const std::vector<Formula>& kept, const std::vector<Formula>& fixed,
    const std::vector<Formula>& removable, const Formula& goal) {
  auto survives_without = [&](const std::vector<std::size_t>& removed) {
    std::vector<Formula> premises = concat(kept, fixed);
    for (std::size_t j = 0, r = 0; j < removable.size(); ++j) {
      if (r < removed.size() && removed[r] == j) {
        ++r;
        continue;
      }
      premises.push_back(removable[j]);
    }
    return !entails(premises, goal);
  };

  if (survives_without({})) return std::vector<std::size_t>{};
  std::vector<std::size_t> all(removable.size());
  for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
  if (!survives_without(all)) return std::nullopt;

  if (removable.size() <= kExhaustiveLevelLimit) {
    std::vector<std::size_t> best;
    for (std::size_t k = 1; k <= removable.size(); ++k) {
      bool hit = for_each_combination(removable.size(), k,
                                      [&](const std::vector<std::size_t>& idx) {
                                        if (!survives_without(idx)) return false;
                                        best = idx;
                                        return true;
                                      });
      if (hit) return best;
    }
    return all;
  }
  // Large level: start from removing everything and put back what is safe.
  std::vector<std::size_t> removed = all;
  for (std::size_t j = 0; j < removable.size(); ++j) {
    std::vector<std::size_t> trial;
    for (std::size_t r : removed) {
      if (r != j) trial.push_back(r);
    }
    if (survives_without(trial)) removed = std::move(trial);
  }
  return removed;
}

struct LevelMember {
  Formula formula;
  bool is_protected;
};

// Groups exp(B) by rank level, descending; members in canonical order.
std::vector<std::pair<Rank, std::vector<LevelMember>>> group_levels(
    const EntrenchmentRanking& ranking) {
  std::vector<std::pair<Rank, std::vector<LevelMember>>> out;
  for (Rank level : ranking.levels()) out.push_back({level, {}});
  for (const auto& [text, b] : ranking.beliefs()) {
    for (auto& [level, members] : out) {
      if (b.rank == level) {
        members.push_back({b.formula, b.is_protected});
        break;
      }
    }
  }
  return out;
}

void merge_notes(AdjustmentReport& report, const AdjustmentReport& from) {
  report.notes.insert(report.notes.end(), from.notes.begin(), from.notes.end());
}

}  // namespace

std::vector<std::string> AdjustmentReport::removed() const {
  std::vector<std::string> out;
  for (const auto& c : changes) {
    if (c.after.is_zero()) out.push_back(c.formula);
  }
  return out;
}

std::vector<std::string> AdjustmentReport::raised() const {
  std::vector<std::string> out;
  for (const auto& c : changes) {
    if (c.after > c.before) out.push_back(c.formula);
  }
  return out;
}

std::vector<std::string> AdjustmentReport::lowered() const {
  std::vector<std::string> out;
  for (const auto& c : changes) {
    if (c.after < c.before && !c.after.is_zero()) out.push_back(c.formula);
  }
  return out;
}

Rank degree(const EntrenchmentRanking& ranking, const Formula& f) {
  if (is_tautology(f)) return Rank::top();
  if (!entails(ranking.explicit_beliefs(), f)) return Rank::zero();
  std::vector<Rank> candidates = ranking.levels();
  if (candidates.empty() || !candidates.front().is_top()) {
    candidates.insert(candidates.begin(), Rank::top());
  }
  for (Rank j : candidates) {
    if (entails(ranking.cut(j), f)) return j;
  }
  return Rank::zero();
}

Adjustment contract(const EntrenchmentRanking& ranking, const Formula& f, Rank i) {
  require_contingent(f, "contract");
  if (ranking.is_protected(f) && !i.is_top()) {
    throw ProtectedConflict("cannot contract protected " + f.to_string());
  }
  AdjustmentReport report;
  report.operation = "contract";
  report.formula = f.to_string();
  report.target = i;

  const Rank jm = degree(ranking, f);
  if (i >= jm) {
    report.notes.push_back("degree " + jm.to_string() + " <= " + i.to_string() +
                           ": unchanged");
    return {ranking, std::move(report)};
  }

  EntrenchmentRanking result = ranking;
  std::vector<Formula> kept = ranking.strict_cut(jm);
  const std::vector<Formula> goal_only{f};
  std::vector<Formula> forced;

  for (auto& [level, members] : group_levels(ranking)) {
    if (level > jm || level <= i) continue;

    std::vector<Formula> lowered;
    std::vector<Formula> fixed;
    std::vector<Formula> removable;
    for (const LevelMember& m : members) {
      if (entails(goal_only, m.formula)) {
        if (m.is_protected) {
          throw ProtectedConflict("contracting " + f.to_string() +
                                  " would lower protected " + m.formula.to_string());
        }
        lowered.push_back(m.formula);
      } else if (m.is_protected) {
        fixed.push_back(m.formula);
      } else {
        removable.push_back(m.formula);
      }
    }

    std::vector<Formula> rest = concat(fixed, removable);
    auto removal = minimum_removal(kept, fixed, removable, f);
    if (!removal) {
      throw ProtectedConflict("contracting " + f.to_string() +
                              " is blocked by protected beliefs at rank " +
                              level.to_string());
    }
    if (!removal->empty() && rest.size() <= kNoteLevelLimit) {
      std::string note = "level " + level.to_string() + ": minimal subsets";
      for (const auto& g : minimal_entailing_subsets(kept, rest, f)) {
        note += " " + join_texts(g);
      }
      report.notes.push_back(note);
    }
    std::vector<Formula> hit;
    for (std::size_t j : *removal) hit.push_back(removable[j]);
    if (!lowered.empty() || !hit.empty()) {
      report.notes.push_back("level " + level.to_string() + ": to " + i.to_string() +
                             " entailed-by-goal " + join_texts(lowered) +
                             " hitting-set " + join_texts(hit));
    }

    for (const Formula& b : lowered) result.set(b, i, false);
    for (const Formula& b : hit) result.set(b, i, false);
    for (std::size_t j = 0, r = 0; j < removable.size(); ++j) {
      if (r < removal->size() && (*removal)[r] == j) {
        ++r;
        continue;
      }
      kept.push_back(removable[j]);
    }
    kept.insert(kept.end(), fixed.begin(), fixed.end());
    forced.insert(forced.end(), lowered.begin(), lowered.end());
    forced.insert(forced.end(), hit.begin(), hit.end());
  }

  // A belief forced to i may still follow from beliefs kept above i. It
  // takes its degree instead; cut contents, and so every degree, are unchanged.
  if (!i.is_zero()) {
    for (const Formula& b : forced) {
      const Rank d = degree(result, b);
      if (d > i) {
        result.set(b, d, false);
        report.notes.push_back(b.to_string() + ": still derivable, kept at degree " +
                               d.to_string());
      }
    }
  }

  assert(!entails(result.strict_cut(i), f));
  AdjustmentReport out = diff(ranking, result);
  out.operation = report.operation;
  out.formula = report.formula;
  out.target = i;
  out.notes = std::move(report.notes);
  return {std::move(result), std::move(out)};
}

Adjustment expand(const EntrenchmentRanking& ranking, const Formula& f, Rank i) {
  require_contingent(f, "expand");
  if (i.is_top() && !ranking.is_protected(f)) {
    throw PreconditionError("expand: rank 1 is reserved for protected beliefs");
  }
  EntrenchmentRanking result = ranking;
  std::vector<std::string> notes;

  for (const auto& [text, b] : ranking.beliefs()) {
    if (b.rank > i) continue;
    if (b.formula == f || equivalent(f, b.formula)) {
      result.set(b.formula, i, b.is_protected);
      continue;
    }
    const Rank d = degree(ranking, Formula::implication(f, b.formula));
    if (i < d) {
      result.set(b.formula, i, b.is_protected);
      notes.push_back(text + ": " + b.rank.to_string() + " <= " + i.to_string() +
                      " < degree(" + f.to_string() + " -> " + text +
                      ") = " + d.to_string());
    } else {
      result.set(b.formula, d, b.is_protected);
      if (!(d == b.rank)) {
        notes.push_back(text + ": set to degree(" + f.to_string() + " -> " + text +
                        ") = " + d.to_string());
      }
    }
  }
  if (!ranking.contains(f)) result.set(f, i, false);

  AdjustmentReport report = diff(ranking, result);
  report.operation = "expand";
  report.formula = f.to_string();
  report.target = i;
  report.notes = std::move(notes);
  return {std::move(result), std::move(report)};
}

Adjustment maxi_adjust(const EntrenchmentRanking& ranking, const Formula& f, Rank i) {
  require_contingent(f, "maxi_adjust");
  if (i.is_top() && !ranking.is_protected(f)) {
    throw PreconditionError("maxi_adjust: rank 1 is reserved for protected beliefs");
  }
  if (ranking.is_protected(f) && !i.is_top()) {
    throw ProtectedConflict("cannot lower protected " + f.to_string());
  }

  AdjustmentReport notes;
  EntrenchmentRanking result;
  const Rank jm = degree(ranking, f);
  if (i <= jm) {
    Adjustment a = contract(ranking, f, i);
    merge_notes(notes, a.report);
    result = std::move(a.ranking);
  } else {
    Adjustment removed = contract(ranking, negate(f), Rank::zero());
    merge_notes(notes, removed.report);
    Adjustment added = expand(removed.ranking, f, i);
    merge_notes(notes, added.report);
    result = std::move(added.ranking);
  }
  for (const auto& c : result.ground_new_constants()) {
    notes.notes.push_back("grounded schemas for " + c);
  }

  AdjustmentReport report = diff(ranking, result);
  report.operation = "maxi_adjust";
  report.formula = f.to_string();
  report.target = i;
  report.notes = std::move(notes.notes);
  return {std::move(result), std::move(report)};
}

Rank inconsistency_degree(const EntrenchmentRanking& ranking) {
  if (is_consistent(ranking.explicit_beliefs())) return Rank::zero();
  for (Rank j : ranking.levels()) {
    if (!is_consistent(ranking.cut(j))) return j;
  }
  return Rank::zero();
}

std::vector<Formula> consistent_cut(const EntrenchmentRanking& ranking) {
  return ranking.strict_cut(inconsistency_degree(ranking));
}

EntrenchmentRanking consistent_cut_ranking(const EntrenchmentRanking& ranking) {
  const Rank incons = inconsistency_degree(ranking);
  EntrenchmentRanking out = ranking;
  for (const auto& [text, b] : ranking.beliefs()) {
    if (b.rank <= incons) out.erase(b.formula);
  }
  return out;
}

EntrenchmentRanking cr_contract(const EntrenchmentRanking& ranking, const Formula& f) {
  if (is_tautology(f)) return ranking;
  require_contingent(f, "cr_contract");
  const Rank d = degree(ranking, f);
  EntrenchmentRanking out = ranking;
  for (const auto& [text, b] : ranking.beliefs()) {
    if (b.rank <= d) out.erase(b.formula);
  }
  return out;
}

EntrenchmentRanking cr_revise(const EntrenchmentRanking& ranking, const Formula& f,
                              Rank i) {
  require_contingent(f, "cr_revise");
  EntrenchmentRanking out = cr_contract(ranking, negate(f));
  out.set(f, i, false);
  out.ground_new_constants();
  return out;
}

AdjustmentReport diff(const EntrenchmentRanking& before,
                      const EntrenchmentRanking& after) {
  AdjustmentReport report;
  const auto& a = before.beliefs();
  const auto& b = after.beliefs();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      report.changes.push_back({ia->first, ia->second.rank, Rank::zero(),
                                ia->second.is_protected});
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      report.changes.push_back({ib->first, Rank::zero(), ib->second.rank,
                                ib->second.is_protected});
      ++ib;
    } else {
      if (!(ia->second.rank == ib->second.rank) ||
          ia->second.is_protected != ib->second.is_protected) {
        report.changes.push_back({ia->first, ia->second.rank, ib->second.rank,
                                  ib->second.is_protected});
      }
      ++ia;
      ++ib;
    }
  }
  std::set_difference(after.constants().begin(), after.constants().end(),
                      before.constants().begin(), before.constants().end(),
                      std::back_inserter(report.grounded_constants));
  return report;
}

EntrenchmentRanking apply_report(const EntrenchmentRanking& before,
                                 const AdjustmentReport& report) {
  EntrenchmentRanking out = before;
  for (const RankChange& c : report.changes) {
    Formula f = parse_formula(c.formula);
    if (!(before.rank_of(f) == c.before)) {
      throw PreconditionError("report does not apply: " + c.formula + " has rank " +
                              before.rank_of(f).to_string() + ", expected " +
                              c.before.to_string());
    }
    out.set(f, c.after, c.is_protected);
  }
  out.mark_grounded({report.grounded_constants.begin(),
                     report.grounded_constants.end()});
  return out;
}

EntrenchmentRanking revert_report(const EntrenchmentRanking& after,
                                  const AdjustmentReport& report) {
  EntrenchmentRanking out = after;
  for (const RankChange& c : report.changes) {
    Formula f = parse_formula(c.formula);
    if (!(after.rank_of(f) == c.after)) {
      throw PreconditionError("report does not revert: " + c.formula + " has rank " +
                              after.rank_of(f).to_string() + ", expected " +
                              c.after.to_string());
    }
    out.set(f, c.before, c.is_protected);
  }
  out.unmark_grounded({report.grounded_constants.begin(),
                       report.grounded_constants.end()});
  return out;
}

}  // namespace entrench
