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

#include "entrench_tools/json_codec.hpp"

#include <set>

namespace entrench::tools {

namespace {

Json texts(const std::vector<Formula>& formulas) {
  Json out = Json::array();
  for (const auto& f : formulas) out.push_back(f.to_string());
  return out;
}

}  // namespace

Json to_json(const AdjustmentReport& report) {
  Json changes = Json::array();
  for (const RankChange& c : report.changes) {
    changes.push_back({{"formula", c.formula},
                       {"before", c.before.to_string()},
                       {"after", c.after.to_string()},
                       {"protected", c.is_protected}});
  }
  return {{"operation", report.operation},
          {"formula", report.formula},
          {"target", report.target.to_string()},
          {"changes", changes},
          {"removed", report.removed()},
          {"raised", report.raised()},
          {"lowered", report.lowered()},
          {"grounded_constants", report.grounded_constants},
          {"notes", report.notes}};
}

Json to_json(const Verdict& verdict) {
  return {{"relevant", verdict.relevant},
          {"degree", verdict.degree.to_string()},
          {"premises", texts(verdict.premises)}};
}

Json to_json(const Explanation& e) {
  return {{"query", e.query},
          {"verdict", to_json(e.verdict)},
          {"incons", e.inconsistency.to_string()},
          {"cut", texts(e.cut)}};
}

Json to_json(const Violation& v) {
  return {{"condition", v.condition},
          {"severity", v.severity == Violation::Severity::kError ? "error" : "warning"},
          {"message", v.message},
          {"witnesses", v.witnesses}};
}

Json beliefs_json(const EntrenchmentRanking& ranking) {
  std::set<std::string> cut;
  for (const auto& f : consistent_cut(ranking)) cut.insert(f.to_string());
  Json beliefs = Json::array();
  for (const Belief& b : ranking.sorted()) {
    const std::string text = b.formula.to_string();
    beliefs.push_back({{"formula", text},
                       {"rank", b.rank.to_string()},
                       {"protected", b.is_protected},
                       {"in_cut", cut.count(text) > 0}});
  }
  Json schemas = Json::array();
  for (const RankedSchema& s : ranking.schemas()) {
    schemas.push_back({{"schema", s.schema.to_string()},
                       {"rank", s.rank.to_string()},
                       {"protected", s.is_protected}});
  }
  return {{"beliefs", beliefs},
          {"schemas", schemas},
          {"constants", ranking.constants()},
          {"incons", inconsistency_degree(ranking).to_string()},
          {"cut_size", cut.size()}};
}

}  // namespace entrench::tools
