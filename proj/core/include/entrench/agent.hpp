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

// The adaptive filtering agent. Relevance judgments update keyword
// statistics; keywords whose induced belief moved are fed through
// maxi-adjustment; documents are matched by entailment from the consistent
// cut of the current ranking.

#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "entrench/classifier.hpp"
#include "entrench/ranking.hpp"
#include "entrench/transmutation.hpp"

namespace entrench {

enum class Judgment { kRelevant, kNonRelevant };

struct Document {
  std::string id;
  /// Canonical keywords (see canonical_keyword).
  std::set<std::string> keywords;
  /// Set for judged corpus records.
  std::optional<Judgment> label;
};

/// Canonicalises keywords; throws PreconditionError when none remain.
Document make_document(std::string id, const std::vector<std::string>& keywords,
                       std::optional<Judgment> label = std::nullopt);

struct AgentProfile {
  Mode mode = Mode::kPaper;
  ClassifierConfig config;
  KeywordStats stats;
  /// Ranking the history starts from (the domain knowledge).
  EntrenchmentRanking genesis;
  EntrenchmentRanking ranking;
  /// Append-only; folding it over `genesis` yields `ranking`.
  std::vector<AdjustmentReport> history;

  bool operator==(const AgentProfile& other) const;
};

/// A fresh profile over the given domain knowledge. Throws PreconditionError
/// when the domain ranking does not validate under `mode`.
AgentProfile make_profile(EntrenchmentRanking domain, ClassifierConfig config = {},
                          Mode mode = Mode::kPaper);

struct LearnResult {
  AgentProfile profile;
  std::vector<AdjustmentReport> reports;
};

/// One relevance judgment. Revisions run first, most entrenched first;
/// contractions follow, least entrenched first. Ties break on formula text.
LearnResult learn(const AgentProfile& profile, const Document& doc, Judgment judgment);

/// Learns every labelled document of `corpus` in order; unlabelled ones are
/// skipped.
LearnResult replay(const AgentProfile& profile, std::span<const Document> corpus);

struct Verdict {
  bool relevant = false;
  /// Degree of the query under the consistent cut (0 when not relevant).
  Rank degree;
  /// Minimal subset of the cut used to derive the query.
  std::vector<Formula> premises;
};

struct Explanation {
  std::string query;
  Verdict verdict;
  Rank inconsistency;
  std::vector<Formula> cut;
};

/// Conjunction of pkw(k) over the document's keywords.
Formula document_formula(const Document& doc);

Verdict filter(const AgentProfile& profile, const Document& doc);
Verdict filter(const AgentProfile& profile, const Formula& query);

Explanation explain(const AgentProfile& profile, const Document& doc);
Explanation explain(const AgentProfile& profile, const Formula& query);

/// Folds `profile.history` over `profile.genesis`.
EntrenchmentRanking replay_history(const AgentProfile& profile);

}  // namespace entrench
