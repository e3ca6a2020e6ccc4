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

#include "entrench/classifier.hpp"

#include <cctype>
#include <cmath>

#include "entrench/error.hpp"

namespace entrench {

void ClassifierConfig::check() const {
  auto open_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (!open_unit(epsilon)) throw PreconditionError("epsilon must lie in (0, 1)");
  if (!open_unit(lambda)) throw PreconditionError("lambda must lie in (0, 1)");
  if (!open_unit(p_rel)) throw PreconditionError("p_rel must lie in (0, 1)");
}

KeywordCounts KeywordStats::counts(std::string_view keyword) const {
  auto it = keywords.find(std::string(keyword));
  return it == keywords.end() ? KeywordCounts{} : it->second;
}

std::string canonical_keyword(std::string_view keyword) {
  std::size_t b = 0;
  std::size_t e = keyword.size();
  while (b < e && std::isspace(static_cast<unsigned char>(keyword[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(keyword[e - 1]))) --e;
  if (b == e) throw ParseError("empty keyword", 0);
  std::string out = to_lower_ascii(keyword.substr(b, e - b));
  if (out.front() == '#' || out.front() == '@') {
    throw ParseError("keyword '" + out + "' starts with a reserved character", 0);
  }
  if (out.find_first_of("\t\n\r,") != std::string::npos) {
    throw ParseError("keyword '" + out + "' contains a separator character", 0);
  }
  return out;
}

KeywordStats update_stats(KeywordStats stats, const std::set<std::string>& keywords,
                          bool relevant) {
  if (keywords.empty()) throw PreconditionError("document has no keywords");
  std::set<std::string> distinct;
  for (const auto& k : keywords) distinct.insert(canonical_keyword(k));
  for (const auto& k : distinct) {
    KeywordCounts& c = stats.keywords[k];
    if (relevant) {
      ++c.relevant;
    } else {
      ++c.non_relevant;
    }
  }
  if (relevant) {
    ++stats.relevant_documents;
  } else {
    ++stats.non_relevant_documents;
  }
  return stats;
}

int rarity(std::uint64_t judged) {
  if (judged == 0) throw PreconditionError("no judged documents");
  return static_cast<int>(std::log10(static_cast<double>(judged)) + 1.0);
}

double preference(const KeywordStats& stats, std::string_view keyword,
                  const ClassifierConfig& config) {
  const KeywordCounts c = stats.counts(canonical_keyword(keyword));
  if (c.total() == 0) {
    throw PreconditionError("keyword '" + std::string(keyword) + "' was never judged");
  }
  const double xi = rarity(stats.judged());
  const double df = static_cast<double>(c.total());
  const double p = static_cast<double>(c.relevant) / df;
  const double q = 1.0 - p;
  const double tendency = p * std::tanh(p / config.p_rel) -
                          q * std::tanh(q / (1.0 - config.p_rel));
  return config.epsilon * std::tanh(df / xi) * tendency;
}

Polarity classify(double pre, const ClassifierConfig& config) {
  if (std::fabs(pre) < config.lambda) return Polarity::kNeutral;
  return pre > 0 ? Polarity::kPositive : Polarity::kNegative;
}

Formula keyword_atom(std::string_view keyword) {
  return Formula::atom("pkw", canonical_keyword(keyword));
}

std::optional<InducedBelief> induce_belief(std::string_view keyword, double pre,
                                           const ClassifierConfig& config) {
  switch (classify(pre, config)) {
    case Polarity::kNeutral:
      return std::nullopt;
    case Polarity::kPositive:
      return InducedBelief{keyword_atom(keyword), Rank(std::fabs(pre))};
    case Polarity::kNegative:
      return InducedBelief{Formula::negation(keyword_atom(keyword)), Rank(std::fabs(pre))};
  }
  return std::nullopt;
}

}  // namespace entrench
