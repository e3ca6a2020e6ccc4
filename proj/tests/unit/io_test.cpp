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
#include <random>
#include <string>

#include "doctest.h"
#include "entrench/error.hpp"
#include "entrench/io.hpp"
#include "oracle.hpp"

using namespace entrench;

namespace {

const std::filesystem::path kData = ENTRENCH_TEST_DATA;

Formula f(std::string_view text) { return parse_formula(text); }

std::string line_error(auto&& fn) {
  try {
    fn();
  } catch (const ParseError& e) {
    return e.what();
  }
  return "no error";
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("entrench_io_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_SUITE("belief base") {
  TEST_CASE("bare lines are protected rank-1 domain rules") {
    const auto r = read_belief_base(read_file(kData / "domain.tsv"));
    CHECK(r.size() == 2);
    CHECK(r.is_protected(f("pkw(sculpture) -> pkw(art)")));
    CHECK(r.rank_of(f("pkw(business) <-> pkw(commerce)")).is_top());
  }

  TEST_CASE("ranked records, flags and comments") {
    const auto r = read_belief_base(
        "# comment\n\n0.856\t-\tpkw(business)\n1.000\tP\tpkw(a) -> pkw(b)\r\n0.000\t-\tq(a)\n");
    CHECK(r.rank_of(f("pkw(business)")) == Rank(0.856));
    CHECK_FALSE(r.is_protected(f("pkw(business)")));
    CHECK(r.is_protected(f("pkw(a) -> pkw(b)")));
    CHECK_FALSE(r.contains(f("q(a)")));
  }

  TEST_CASE("schemas ground over constants without a constants line") {
    const auto r = read_belief_base(
        "0.900\t-\tforall x. penguin(x) -> bird(x)\n0.800\t-\tpenguin(tweety)\n");
    CHECK(r.rank_of(f("penguin(tweety) -> bird(tweety)")) == Rank(0.9));
    CHECK(r.constants() == std::set<std::string>{"tweety"});
  }

  TEST_CASE("a constants line suppresses regrounding") {
    const auto r = read_belief_base(
        "0.900\t-\tforall x. penguin(x) -> bird(x)\n0.800\t-\tpenguin(tweety)\n@constants\ttweety\n");
    CHECK_FALSE(r.contains(f("penguin(tweety) -> bird(tweety)")));
  }

  TEST_CASE("canonical round trip") {
    EntrenchmentRanking r;
    r.add_schema(parse_schema("forall x. bird(x) -> fly(x)"), Rank(0.4));
    r.set(f("bird(tweety)"), Rank(0.6));
    r.set(f("a(b) <-> c(d)"), Rank::top(), true);
    r.ground_new_constants();
    const std::string text = write_belief_base(r);
    const auto back = read_belief_base(text);
    CHECK(back == r);
    CHECK(write_belief_base(back) == text);
  }

  TEST_CASE("property: random bases round trip") {
    oracle::FormulaGenerator gen(101, 6);
    for (int n = 0; n < 300; ++n) {
      EntrenchmentRanking r;
      for (int k = 0; k < 6; ++k) {
        r.set(gen.formula(3), Rank::quantized(gen.uniform(1, 999) / 1000.0));
      }
      const std::string text = write_belief_base(r);
      REQUIRE(read_belief_base(text) == r);
      REQUIRE(write_belief_base(read_belief_base(text)) == text);
    }
  }

  TEST_CASE("errors carry the line number") {
    CHECK(line_error([] { read_belief_base("p(a)\n0.5\tP\n"); }).starts_with("line 2:"));
    CHECK(line_error([] { read_belief_base("\n\n2.0\t-\tp(a)\n"); }).starts_with("line 3:"));
    CHECK(line_error([] { read_belief_base("0.5\tX\tp(a)\n"); }).starts_with("line 1:"));
    CHECK(line_error([] { read_belief_base("p(a) &\n"); }).starts_with("line 1:"));
  }
}

TEST_SUITE("corpus") {
  TEST_CASE("labels and keywords") {
    const auto docs = read_corpus("a\tR\tBusiness, art\nb\tN\tart\nc\t?\tx\n");
    REQUIRE(docs.size() == 3);
    CHECK(docs[0].keywords == std::set<std::string>{"art", "business"});
    CHECK(docs[0].label == Judgment::kRelevant);
    CHECK(docs[1].label == Judgment::kNonRelevant);
    CHECK_FALSE(docs[2].label.has_value());
    CHECK(write_corpus(docs) == "a\tR\tart,business\nb\tN\tart\nc\t?\tx\n");
  }

  TEST_CASE("golden corpora round trip") {
    for (const char* name : {"t1.tsv", "t2.tsv", "t3.tsv", "probe.tsv"}) {
      const auto docs = read_corpus(read_file(kData / name));
      CHECK(read_corpus(write_corpus(docs)).size() == docs.size());
      CHECK(write_corpus(read_corpus(write_corpus(docs))) == write_corpus(docs));
    }
  }

  TEST_CASE("malformed records") {
    CHECK(line_error([] { read_corpus("a\tR\n"); }).starts_with("line 1:"));
    CHECK(line_error([] { read_corpus("a\tX\tk\n"); }).starts_with("line 1:"));
    CHECK(line_error([] { read_corpus("a\tR\tk\na\tN\tk\n"); }).starts_with("line 2:"));
    CHECK(line_error([] { read_corpus("\tR\tk\n"); }).starts_with("line 1:"));
    CHECK(line_error([] { read_corpus("a\tR\t#k\n"); }).starts_with("line 1:"));
  }
}

TEST_SUITE("profile") {
  TEST_CASE("golden profile round trips byte for byte") {
    AgentProfile p = make_profile(read_belief_base(read_file(kData / "domain.tsv")),
                                  ClassifierConfig{0.8, 0.45, 0.4});
    p = replay(p, read_corpus(read_file(kData / "t1.tsv"))).profile;
    p = replay(p, read_corpus(read_file(kData / "t3.tsv"))).profile;
    const std::string text = write_profile(p);
    const AgentProfile back = read_profile(text);
    CHECK(back == p);
    CHECK(write_profile(back) == text);
    CHECK(back.config.lambda == 0.45);
    CHECK(back.mode == Mode::kPaper);
    CHECK(replay_history(back) == back.ranking);
  }

  TEST_CASE("strict mode is recorded") {
    AgentProfile p = make_profile(EntrenchmentRanking{}, {}, Mode::kStrict);
    CHECK(read_profile(write_profile(p)).mode == Mode::kStrict);
  }

  TEST_CASE("report records") {
    EntrenchmentRanking r;
    r.set(f("p(a)"), Rank(0.5));
    const auto adj = maxi_adjust(r, f("!p(a)"), Rank(0.6));
    const std::string text = write_report(adj.report);
    CHECK(text.starts_with("@report\tmaxi_adjust\t0.600\t!p(a)\n"));
    CHECK(text.find("~\t0.500\t0.000\t-\tp(a)\n") != std::string::npos);
  }

  TEST_CASE("malformed profiles") {
    CHECK(line_error([] { read_profile("mode\tstrict\n"); }).starts_with("line 1:"));
    CHECK(line_error([] { read_profile("[config]\nmode\tloose\n"); }).starts_with("line 2:"));
    CHECK(line_error([] { read_profile("[nope]\n"); }).starts_with("line 1:"));
    CHECK(line_error([] { read_profile("[config]\nepsilon\tx\n"); }).starts_with("line 2:"));
    CHECK(line_error([] { read_profile("[stats]\n@documents\t1\n"); }).starts_with("line 2:"));
  }
}

TEST_SUITE("files") {
  TEST_CASE("write then read") {
    TempDir dir;
    const auto path = dir.path / "x.tsv";
    write_file(path, "one\n");
    write_file(path, "two\n");
    CHECK(read_file(path) == "two\n");
    int entries = 0;
    for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir.path)) ++entries;
    CHECK(entries == 1);
  }

  TEST_CASE("missing paths") {
    TempDir dir;
    CHECK_THROWS_AS(read_file(dir.path / "absent"), IoError);
    write_file(dir.path / "file", "x");
    CHECK_THROWS_AS(write_file(dir.path / "file" / "below.tsv", "x"), IoError);
    write_file(dir.path / "made" / "below.tsv", "x");
    CHECK(read_file(dir.path / "made" / "below.tsv") == "x");
  }
}
