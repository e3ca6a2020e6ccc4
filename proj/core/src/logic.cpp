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

#include "entrench/logic.hpp"

#include <algorithm>
#include <cstdlib>

#include "entrench/error.hpp"

namespace entrench {

namespace {

// Returns false when the clause holds a complementary pair.
bool tidy(Clause& c) {
  std::sort(c.begin(), c.end(), [](int a, int b) {
    int aa = std::abs(a), bb = std::abs(b);
    return aa != bb ? aa < bb : a < b;
  });
  c.erase(std::unique(c.begin(), c.end()), c.end());
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] == -c[i - 1]) return false;
  }
  return true;
}

std::vector<Clause> join(std::vector<Clause> a, const std::vector<Clause>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Clauses of (A | B) from clauses of A and of B.
std::vector<Clause> product(const std::vector<Clause>& a,
                            const std::vector<Clause>& b) {
  std::vector<Clause> out;
  out.reserve(a.size() * b.size());
  for (const Clause& x : a) {
    for (const Clause& y : b) {
      Clause c = x;
      c.insert(c.end(), y.begin(), y.end());
      if (tidy(c)) out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

int ClauseSet::variable(const Atom& a) {
  auto [it, inserted] = index_.try_emplace(a, static_cast<int>(atoms_.size()) + 1);
  if (inserted) atoms_.push_back(a);
  return it->second;
}

std::vector<Clause> ClauseSet::convert(const Formula& f, bool positive) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::kAtom: {
      int v = variable(f.as_atom());
      return {Clause{positive ? v : -v}};
    }
    case K::kNot:
      return convert(f.lhs(), !positive);
    case K::kAnd:
      if (positive) return join(convert(f.lhs(), true), convert(f.rhs(), true));
      return product(convert(f.lhs(), false), convert(f.rhs(), false));
    case K::kOr:
      if (positive) return product(convert(f.lhs(), true), convert(f.rhs(), true));
      return join(convert(f.lhs(), false), convert(f.rhs(), false));
    case K::kImplies:
      if (positive) return product(convert(f.lhs(), false), convert(f.rhs(), true));
      return join(convert(f.lhs(), true), convert(f.rhs(), false));
    case K::kIff: {
      auto lp = convert(f.lhs(), true);
      auto ln = convert(f.lhs(), false);
      auto rp = convert(f.rhs(), true);
      auto rn = convert(f.rhs(), false);
      if (positive) return join(product(ln, rp), product(lp, rn));
      return join(product(lp, rp), product(ln, rn));
    }
  }
  return {};
}

void ClauseSet::add(const Formula& f, bool positive) {
  for (Clause& c : convert(f, positive)) clauses_.push_back(std::move(c));
}

void ClauseSet::normalize() {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
}

namespace {

// Values: 0 unassigned, 1 true, -1 false.
class Dpll {
 public:
  Dpll(const std::vector<Clause>& clauses, int vars)
      : clauses_(clauses), value_(static_cast<std::size_t>(vars) + 1, 0) {}

  bool solve() {
    std::vector<int> start = value_;
    return search(start);
  }
  const std::vector<int>& values() const { return value_; }

 private:
  static int eval(const std::vector<int>& v, Literal l) {
    int x = v[static_cast<std::size_t>(std::abs(l))];
    return l > 0 ? x : -x;
  }

  // Unit propagation to fixpoint; false on conflict.
  bool propagate(std::vector<int>& v) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : clauses_) {
        int open = 0;
        Literal last = 0;
        bool sat = false;
        for (Literal l : c) {
          int x = eval(v, l);
          if (x > 0) {
            sat = true;
            break;
          }
          if (x == 0) {
            ++open;
            last = l;
          }
        }
        if (sat) continue;
        if (open == 0) return false;
        if (open == 1) {
          v[static_cast<std::size_t>(std::abs(last))] = last > 0 ? 1 : -1;
          changed = true;
        }
      }
    }
    return true;
  }

  bool search(std::vector<int>& v) {
    if (!propagate(v)) return false;
    // Branch on the first open literal of the shortest unsatisfied clause.
    Literal pick = 0;
    std::size_t best = SIZE_MAX;
    for (const Clause& c : clauses_) {
      bool sat = false;
      std::size_t open = 0;
      Literal first = 0;
      for (Literal l : c) {
        int x = eval(v, l);
        if (x > 0) {
          sat = true;
          break;
        }
        if (x == 0 && open++ == 0) first = l;
      }
      if (!sat && open < best) {
        best = open;
        pick = first;
      }
    }
    if (pick == 0) {
      value_ = v;
      return true;
    }
    for (int phase : {1, -1}) {
      std::vector<int> trial = v;
      trial[static_cast<std::size_t>(std::abs(pick))] = pick > 0 ? phase : -phase;
      if (search(trial)) return true;
    }
    return false;
  }

  const std::vector<Clause>& clauses_;
  std::vector<int> value_;
};

}  // namespace

bool is_satisfiable(const ClauseSet& cnf, std::vector<bool>* model) {
  for (const Clause& c : cnf.clauses()) {
    if (c.empty()) return false;
  }
  Dpll solver(cnf.clauses(), cnf.variable_count());
  if (!solver.solve()) return false;
  if (model != nullptr) {
    const auto& v = solver.values();
    model->assign(cnf.atoms().size(), false);
    for (std::size_t i = 1; i < v.size() && i <= model->size(); ++i) {
      (*model)[i - 1] = v[i] > 0;
    }
  }
  return true;
}

bool is_consistent(std::span<const Formula> formulas) {
  ClauseSet cnf;
  for (const Formula& f : formulas) cnf.add(f);
  return is_satisfiable(cnf);
}

bool entails(std::span<const Formula> premises, const Formula& goal) {
  ClauseSet cnf;
  for (const Formula& f : premises) cnf.add(f);
  cnf.add(goal, false);
  return !is_satisfiable(cnf);
}

bool is_tautology(const Formula& f) { return entails({}, f); }

bool is_contradiction(const Formula& f) {
  return !is_consistent(std::span<const Formula>(&f, 1));
}

bool is_contingent(const Formula& f) {
  return !is_tautology(f) && !is_contradiction(f);
}

bool equivalent(const Formula& a, const Formula& b) {
  return is_tautology(Formula::biconditional(a, b));
}

std::vector<Formula> minimal_premises(std::span<const Formula> premises,
                                      const Formula& goal) {
  std::vector<Formula> kept(premises.begin(), premises.end());
  if (!entails(kept, goal)) {
    throw PreconditionError("premises do not entail " + goal.to_string());
  }
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Formula> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (entails(trial, goal)) {
      kept = std::move(trial);
    } else {
      ++i;
    }
  }
  return kept;
}

}  // namespace entrench
