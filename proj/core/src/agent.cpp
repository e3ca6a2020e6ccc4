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

#include "entrench/agent.hpp"

#include <algorithm>
#include <cmath>

#include "entrench/error.hpp"
#include "entrench/logic.hpp"

namespace entrench {

namespace {

// A belief whose induced rank differs from the held one by less than this
// is left alone.
constexpr double kRankStep = 0.001;
// Induced ranks are kept strictly below the maximal rank.
constexpr double kMaxInducedRank = 0.999;

struct PendingChange {
  Formula formula;
  Rank rank;   // target rank; 0 for contractions
  Rank prior;  // rank held before this judgment
};

bool differs(Rank a, Rank b) {
  return std::fabs(a.value() - b.value()) >= kRankStep - Rank::kTolerance;
}

bool same_reports(const std::vector<AdjustmentReport>& a,
                  const std::vector<AdjustmentReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& x = a[i];
    const auto& y = b[i];
    if (x.operation != y.operation || x.formula != y.formula ||
        !(x.target == y.target) || x.grounded_constants != y.grounded_constants ||
        x.notes != y.notes || x.changes.size() != y.changes.size()) {
      return false;
    }
    for (std::size_t j = 0; j < x.changes.size(); ++j) {
      const auto& c = x.changes[j];
      const auto& d = y.changes[j];
      if (c.formula != d.formula || !(c.before == d.before) ||
          !(c.after == d.after) || c.is_protected != d.is_protected) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool AgentProfile::operator==(const AgentProfile& other) const {
  return mode == other.mode && config.epsilon == other.config.epsilon &&
         config.lambda == other.config.lambda && config.p_rel == other.config.p_rel &&
         stats == other.stats && genesis == other.genesis && ranking == other.ranking &&
         same_reports(history, other.history);
}

Document make_document(std::string id, const std::vector<std::string>& keywords,
                       std::optional<Judgment> label) {
  Document doc{std::move(id), {}, label};
  for (const auto& k : keywords) doc.keywords.insert(canonical_keyword(k));
  if (doc.keywords.empty()) {
    throw PreconditionError("document '" + doc.id + "' has no keywords");
  }
  return doc;
}

AgentProfile make_profile(EntrenchmentRanking domain, ClassifierConfig config,
                          Mode mode) {
  config.check();
  domain.ground_new_constants();
  auto violations = validate(domain, mode);
  if (has_errors(violations)) {
    for (const auto& v : violations) {
      if (v.severity == Violation::Severity::kError) {
        throw PreconditionError("domain knowledge violates " + v.condition + ": " +
                                v.message);
      }
    }
  }
  AgentProfile p;
  p.mode = mode;
  p.config = config;
  p.genesis = domain;
  p.ranking = std::move(domain);
  return p;
}

LearnResult learn(const AgentProfile& profile, const Document& doc, Judgment judgment) {
  if (doc.keywords.empty()) {
    throw PreconditionError("document '" + doc.id + "' has no keywords");
  }
  LearnResult out{profile, {}};
  AgentProfile& next = out.profile;
  next.stats = update_stats(profile.stats, doc.keywords,
                            judgment == Judgment::kRelevant);

  std::vector<PendingChange> revisions;
  std::vector<PendingChange> contractions;
  for (const std::string& k : doc.keywords) {
    const Formula positive = keyword_atom(k);
    const Formula negative = Formula::negation(positive);
    const Rank held_pos = profile.ranking.rank_of(positive);
    const Rank held_neg = profile.ranking.rank_of(negative);

    const double pre = preference(next.stats, k, profile.config);
    auto induced = induce_belief(k, pre, profile.config);
    if (!induced) {
      if (!held_pos.is_zero()) contractions.push_back({positive, Rank::zero(), held_pos});
      if (!held_neg.is_zero()) contractions.push_back({negative, Rank::zero(), held_neg});
      continue;
    }
    const Rank target = Rank::quantized(std::min(induced->rank.value(), kMaxInducedRank));
    const bool is_positive = induced->formula == positive;
    const Rank held = is_positive ? held_pos : held_neg;
    const Rank opposite = is_positive ? held_neg : held_pos;
    if (differs(held, target) || !opposite.is_zero()) {
      revisions.push_back({induced->formula, target, held});
    }
  }

  std::sort(revisions.begin(), revisions.end(),
            [](const PendingChange& a, const PendingChange& b) {
              if (!(a.rank == b.rank)) return a.rank > b.rank;
              return a.formula.to_string() < b.formula.to_string();
            });
  std::sort(contractions.begin(), contractions.end(),
            [](const PendingChange& a, const PendingChange& b) {
              if (!(a.prior == b.prior)) return a.prior < b.prior;
              return a.formula.to_string() < b.formula.to_string();
            });

  const std::string origin = "document " + doc.id + " judged " +
                             (judgment == Judgment::kRelevant ? "relevant"
                                                              : "non-relevant");
  auto apply = [&](const PendingChange& change) {
    Adjustment a = maxi_adjust(next.ranking, change.formula, change.rank);
    a.report.notes.insert(a.report.notes.begin(), origin);
    next.ranking = std::move(a.ranking);
    next.history.push_back(a.report);
    out.reports.push_back(std::move(a.report));
  };
  for (const auto& r : revisions) apply(r);
  for (const auto& c : contractions) apply(c);
  return out;
}

LearnResult replay(const AgentProfile& profile, std::span<const Document> corpus) {
  LearnResult out{profile, {}};
  for (const Document& doc : corpus) {
    if (!doc.label) continue;
    LearnResult step = learn(out.profile, doc, *doc.label);
    out.profile = std::move(step.profile);
    out.reports.insert(out.reports.end(), step.reports.begin(), step.reports.end());
  }
  return out;
}

Formula document_formula(const Document& doc) {
  if (doc.keywords.empty()) {
    throw PreconditionError("document '" + doc.id + "' has no keywords");
  }
  std::vector<Formula> atoms;
  for (const auto& k : doc.keywords) atoms.push_back(keyword_atom(k));
  return conjoin(atoms);
}

namespace {

EntrenchmentRanking grounded_for(const AgentProfile& profile, const Formula& query) {
  EntrenchmentRanking r = profile.ranking;
  r.ground_new_constants(constants_of(query));
  return r;
}

Verdict verdict_from_cut(const EntrenchmentRanking& cut_ranking, const Formula& query) {
  Verdict v;
  const std::vector<Formula> cut = cut_ranking.explicit_beliefs();
  v.relevant = entails(cut, query);
  if (v.relevant) {
    v.degree = degree(cut_ranking, query);
    v.premises = minimal_premises(cut, query);
  }
  return v;
}

}  // namespace

Verdict filter(const AgentProfile& profile, const Formula& query) {
  return verdict_from_cut(consistent_cut_ranking(grounded_for(profile, query)), query);
}

Verdict filter(const AgentProfile& profile, const Document& doc) {
  return filter(profile, document_formula(doc));
}

Explanation explain(const AgentProfile& profile, const Formula& query) {
  const EntrenchmentRanking r = grounded_for(profile, query);
  const EntrenchmentRanking cut = consistent_cut_ranking(r);
  Explanation e;
  e.query = query.to_string();
  e.verdict = verdict_from_cut(cut, query);
  e.inconsistency = inconsistency_degree(r);
  e.cut = cut.explicit_beliefs();
  return e;
}

Explanation explain(const AgentProfile& profile, const Document& doc) {
  return explain(profile, document_formula(doc));
}

EntrenchmentRanking replay_history(const AgentProfile& profile) {
  EntrenchmentRanking r = profile.genesis;
  for (const auto& report : profile.history) r = apply_report(r, report);
  return r;
}

}  // namespace entrench
