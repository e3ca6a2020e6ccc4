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

// Keyword classifier: relevance-feedback counts -> keyword preference ->
// entrenchment-ranked pkw beliefs.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "entrench/formula.hpp"
#include "entrench/rank.hpp"

namespace entrench {

struct ClassifierConfig {
  /// Amplitude; keeps |pre(k)| below 1.
  double epsilon = 0.9;
  /// Neutrality threshold on |pre(k)|.
  double lambda = 0.5;
  /// Prior probability that a presented document is judged relevant.
  double p_rel = 0.5;

  /// Throws PreconditionError unless every constant is in (0, 1).
  void check() const;
};

struct KeywordCounts {
  std::uint64_t relevant = 0;
  std::uint64_t non_relevant = 0;

  std::uint64_t total() const { return relevant + non_relevant; }
  bool operator==(const KeywordCounts&) const = default;
};

struct KeywordStats {
  std::map<std::string, KeywordCounts> keywords;
  std::uint64_t relevant_documents = 0;
  std::uint64_t non_relevant_documents = 0;

  std::uint64_t judged() const { return relevant_documents + non_relevant_documents; }
  /// Zero counts for unseen keywords.
  KeywordCounts counts(std::string_view keyword) const;
  bool operator==(const KeywordStats&) const = default;
};

/// Trimmed, lowercased keyword. Throws ParseError when empty.
std::string canonical_keyword(std::string_view keyword);

/// Counts one judgment of a document with the given keywords. Duplicate
/// keywords count once. Throws PreconditionError on an empty keyword set.
KeywordStats update_stats(KeywordStats stats, const std::set<std::string>& keywords,
                          bool relevant);

/// Rarity parameter int(log10(N) + 1).
int rarity(std::uint64_t judged);

/// Keyword preference in (-1, 1). Throws PreconditionError when the keyword
/// was never judged.
double preference(const KeywordStats& stats, std::string_view keyword,
                  const ClassifierConfig& config);

enum class Polarity { kNeutral, kPositive, kNegative };

Polarity classify(double pre, const ClassifierConfig& config);

struct InducedBelief {
  Formula formula;
  Rank rank;
};

/// pkw(k) or !pkw(k) at rank |pre|; nullopt for neutral keywords.
std::optional<InducedBelief> induce_belief(std::string_view keyword, double pre,
                                           const ClassifierConfig& config);

/// The atom pkw(k).
Formula keyword_atom(std::string_view keyword);

}  // namespace entrench
