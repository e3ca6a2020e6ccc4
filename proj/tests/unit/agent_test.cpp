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

#include <filesystem>
#include <map>

#include "doctest.h"
#include "entrench/agent.hpp"
#include "entrench/error.hpp"
#include "entrench/io.hpp"
#include "entrench/logic.hpp"

using namespace entrench;

namespace {

const std::filesystem::path kData = ENTRENCH_TEST_DATA;

Formula f(std::string_view text) { return parse_formula(text); }

std::vector<Document> corpus(const char* name) { return read_corpus(read_file(kData / name)); }

AgentProfile domain_profile() {
  return make_profile(read_belief_base(read_file(kData / "domain.tsv")));
}

std::map<std::string, std::string> table(const EntrenchmentRanking& r) {
  std::map<std::string, std::string> out;
  for (const auto& [text, b] : r.beliefs()) out[text] = b.rank.to_string();
  return out;
}

const std::map<std::string, std::string> kDomainRows = {
    {"pkw(business) <-> pkw(commerce)", "1.000"},
    {"pkw(sculpture) -> pkw(art)", "1.000"},
};

std::map<std::string, std::string> domain_plus(
    std::initializer_list<std::pair<const std::string, std::string>> rows) {
  auto out = kDomainRows;
  out.insert(rows);
  return out;
}

Document probe(const char* id) {
  for (const Document& d : corpus("probe.tsv")) {
    if (d.id == id) return d;
  }
  FAIL("missing probe " << id);
  return {};
}

// Profiles after each golden stage.
struct Stages {
  AgentProfile t1, t2, t3;
};

const Stages& stages() {
  static const Stages s = [] {
    Stages out;
    out.t1 = replay(domain_profile(), corpus("t1.tsv")).profile;
    out.t2 = replay(out.t1, corpus("t2.tsv")).profile;
    out.t3 = replay(out.t2, corpus("t3.tsv")).profile;
    return out;
  }();
  return s;
}

}  // namespace

TEST_SUITE("golden corpora") {
  TEST_CASE("stage 1: business liked, art and sculpture disliked") {
    CHECK(table(stages().t1.ranking) == domain_plus({{"pkw(business)", "0.856"},
                                                     {"!pkw(sculpture)", "0.856"},
                                                     {"!pkw(art)", "0.856"}}));
    CHECK(stages().t1.stats.judged() == 17);
  }

  TEST_CASE("stage 2: sculpture turns positive") {
    CHECK(table(stages().t2.ranking) ==
          domain_plus({{"pkw(business)", "0.856"}, {"pkw(sculpture)", "0.785"}}));
  }

  TEST_CASE("stage 3: both keywords neutralised") {
    CHECK(table(stages().t3.ranking) == kDomainRows);
    CHECK(stages().t3.stats.judged() == 66);
  }

  TEST_CASE("verdicts on the probes") {
    const auto verdicts = [](const AgentProfile& p) {
      std::string out;
      for (const char* id : {"phi", "varphi", "psi"}) out += filter(p, probe(id)).relevant ? 'T' : 'F';
      return out;
    };
    CHECK(verdicts(stages().t1) == "FFT");
    CHECK(verdicts(stages().t2) == "TTT");
    CHECK(verdicts(stages().t3) == "FFF");
    CHECK(filter(stages().t2, probe("phi")).degree == Rank(0.785));
    CHECK(filter(stages().t1, probe("psi")).degree == Rank(0.856));
  }

  TEST_CASE("the final document contracts the weaker keyword first") {
    auto docs = corpus("t3.tsv");
    const Document last = docs.back();
    docs.pop_back();
    const AgentProfile before = replay(stages().t2, docs).profile;
    const LearnResult r = learn(before, last, Judgment::kNonRelevant);
    REQUIRE(r.reports.size() == 2);
    CHECK(r.reports[0].formula == "pkw(sculpture)");
    CHECK(r.reports[1].formula == "pkw(business)");
    CHECK(r.reports[0].target.is_zero());
  }

  TEST_CASE("history folds onto the genesis ranking") {
    for (const AgentProfile* p : {&stages().t1, &stages().t2, &stages().t3}) {
      CHECK(replay_history(*p) == p->ranking);
      CHECK(p->genesis == domain_profile().ranking);
    }
  }

  TEST_CASE("replay equals learning one document at a time") {
    AgentProfile p = domain_profile();
    for (const Document& d : corpus("t1.tsv")) p = learn(p, d, *d.label).profile;
    CHECK(p == stages().t1);
  }
}

TEST_SUITE("explain") {
  TEST_CASE("synonym query uses the rule and the stored keyword") {
    const Explanation e = explain(stages().t1, probe("psi"));
    CHECK(e.verdict.relevant);
    CHECK(e.verdict.premises ==
          std::vector<Formula>{f("pkw(business)"), f("pkw(business) <-> pkw(commerce)")});
    CHECK(e.inconsistency.is_zero());
    CHECK(e.cut.size() == 5);
  }

  TEST_CASE("penguin base") {
    EntrenchmentRanking r;
    r.add_schema(parse_schema("forall x. penguin(x) -> bird(x)"), Rank(0.9));
    r.add_schema(parse_schema("forall x. penguin(x) -> !fly(x)"), Rank(0.7));
    r.add_schema(parse_schema("forall x. bird(x) -> fly(x)"), Rank(0.4));
    AgentProfile p = make_profile(r);
    p.ranking = maxi_adjust(r, f("penguin(tweety)"), Rank(0.8)).ranking;
    const Explanation e = explain(p, f("!fly(tweety)"));
    CHECK(e.verdict.relevant);
    CHECK(e.verdict.degree == Rank(0.7));
    CHECK(e.inconsistency == Rank(0.4));
    CHECK(e.verdict.premises ==
          std::vector<Formula>{f("penguin(tweety)"), f("penguin(tweety) -> !fly(tweety)")});
    CHECK_FALSE(explain(p, f("fly(tweety)")).verdict.relevant);
  }

  TEST_CASE("queries on new constants leave the profile untouched") {
    EntrenchmentRanking r;
    r.add_schema(parse_schema("forall x. penguin(x) -> bird(x)"), Rank(0.9));
    r.set(f("penguin(opus)"), Rank(0.8));
    r.ground_new_constants();
    const AgentProfile p = make_profile(r);
    const AgentProfile copy = p;
    CHECK_FALSE(filter(p, f("bird(pingu)")).relevant);
    CHECK(filter(p, f("bird(opus)")).relevant);
    CHECK(p == copy);
  }
}

TEST_SUITE("learning") {
  TEST_CASE("a balanced keyword is contracted") {
    AgentProfile p = make_profile(EntrenchmentRanking{});
    p = learn(p, make_document("a", {"x"}), Judgment::kRelevant).profile;
    CHECK(p.ranking.contains(f("pkw(x)")));
    const LearnResult r = learn(p, make_document("b", {"x"}), Judgment::kNonRelevant);
    CHECK_FALSE(r.profile.ranking.contains(f("pkw(x)")));
    REQUIRE(r.reports.size() == 1);
    CHECK(r.reports[0].removed() == std::vector<std::string>{"pkw(x)"});
  }

  TEST_CASE("neutral keywords with nothing held produce no report") {
    AgentProfile p = make_profile(EntrenchmentRanking{});
    p = learn(p, make_document("a", {"x", "y"}), Judgment::kRelevant).profile;
    p = learn(p, make_document("b", {"x"}), Judgment::kNonRelevant).profile;
    const LearnResult r = learn(p, make_document("c", {"x"}), Judgment::kRelevant);
    CHECK(r.profile.stats.counts("x") == KeywordCounts{2, 1});
    for (const auto& report : r.reports) CHECK(report.formula != "pkw(x)");
  }

  TEST_CASE("each report notes the judgment") {
    const LearnResult r = learn(domain_profile(), make_document("d", {"art"}), Judgment::kRelevant);
    REQUIRE_FALSE(r.reports.empty());
    bool noted = false;
    for (const auto& n : r.reports[0].notes) noted = noted || n == "document d judged relevant";
    CHECK(noted);
  }

  TEST_CASE("empty documents are rejected") {
    CHECK_THROWS_AS(learn(domain_profile(), make_document("e", {}), Judgment::kRelevant),
                    PreconditionError);
    CHECK_THROWS_AS(document_formula(make_document("e", {})), PreconditionError);
  }

  TEST_CASE("empty profile filters nothing") {
    const AgentProfile p = make_profile(EntrenchmentRanking{});
    const Verdict v = filter(p, make_document("q", {"art"}));
    CHECK_FALSE(v.relevant);
    CHECK(v.degree.is_zero());
    CHECK(v.premises.empty());
  }

  TEST_CASE("document formula is the conjunction of keyword atoms") {
    const Formula q = document_formula(make_document("q", {"Art", "business"}));
    CHECK(equivalent(q, f("pkw(art) & pkw(business)")));
  }
}
