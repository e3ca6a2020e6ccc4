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
#include <future>
#include <random>
#include <thread>

#include "doctest.h"
#include "entrench/error.hpp"
#include "entrench/io.hpp"
#include "entrench_tools/api.hpp"
#include "httplib.h"

using namespace entrench;
using namespace entrench::tools;

namespace {

const std::filesystem::path kData = ENTRENCH_TEST_DATA;
constexpr const char* kToken = "s3cret";

std::vector<Document> corpus(const char* name) { return read_corpus(read_file(kData / name)); }

// Temporary store holding profile "alice" (domain only) and "bob" (after t1).
struct Fixture {
  std::filesystem::path root;
  ProfileStore store;
  Api api;

  Fixture()
      : root(std::filesystem::temp_directory_path() /
             ("entrench_svc_" + std::to_string(std::random_device{}()))),
        store(root),
        api(store, kToken) {
    const AgentProfile domain = make_profile(read_belief_base(read_file(kData / "domain.tsv")));
    store.save("alice", domain);
    store.save("bob", replay(domain, corpus("t1.tsv")).profile);
  }
  ~Fixture() { std::filesystem::remove_all(root); }

  ApiResponse call(const std::string& method, const std::string& path,
                   const std::string& body = "", std::map<std::string, std::string> query = {}) {
    return api.handle({method, path, std::move(query), std::string("Bearer ") + kToken, body});
  }
};

std::map<std::string, std::string> ranks(const Json& beliefs) {
  std::map<std::string, std::string> out;
  for (const auto& b : beliefs["beliefs"]) out[b["formula"]] = b["rank"];
  return out;
}

std::string feedback_body(const Document& d) {
  return Json{{"doc_id", d.id},
              {"keywords", d.keywords},
              {"judgment", *d.label == Judgment::kRelevant ? "relevant" : "non-relevant"}}
      .dump();
}

}  // namespace

TEST_CASE("an empty token is refused") {
  ProfileStore store(std::filesystem::temp_directory_path());
  CHECK_THROWS_AS(Api(store, ""), PreconditionError);
}

TEST_CASE("authorization") {
  Fixture fx;
  CHECK(fx.api.handle({"GET", "/config", {}, "", ""}).status == 401);
  const auto bad = fx.api.handle({"GET", "/config", {}, "Bearer nope", ""});
  CHECK(bad.status == 401);
  CHECK(bad.body["error"]["status"] == 401);
  CHECK(fx.call("GET", "/config").status == 200);
}

TEST_CASE("config and profile listing") {
  Fixture fx;
  const auto config = fx.call("GET", "/config");
  CHECK(config.body["defaults"]["lambda"] == 0.5);
  CHECK(config.body["defaults"]["mode"] == "paper");
  CHECK(fx.call("GET", "/profiles").body["profiles"] == Json{"alice", "bob"});
}

TEST_CASE("unknown routes and profiles") {
  Fixture fx;
  CHECK(fx.call("GET", "/nowhere").status == 404);
  CHECK(fx.call("GET", "/profiles/carol/beliefs").status == 404);
  CHECK(fx.call("GET", "/profiles/..%2f/beliefs").status == 404);
  CHECK(fx.call("DELETE", "/profiles/alice/beliefs").status == 404);
  CHECK(fx.call("GET", "/profiles/alice/feedback").status == 404);
}

TEST_CASE("beliefs") {
  Fixture fx;
  const auto r = fx.call("GET", "/profiles/bob/beliefs");
  REQUIRE(r.status == 200);
  CHECK(ranks(r.body) == std::map<std::string, std::string>{
                             {"pkw(business) <-> pkw(commerce)", "1.000"},
                             {"pkw(sculpture) -> pkw(art)", "1.000"},
                             {"pkw(business)", "0.856"},
                             {"!pkw(sculpture)", "0.856"},
                             {"!pkw(art)", "0.856"}});
  CHECK(r.body["incons"] == "0.000");
  CHECK(r.body["cut_size"] == 5);
  CHECK(r.body["history_length"].get<std::size_t>() > 0);
}

TEST_CASE("filter") {
  Fixture fx;
  const auto psi = fx.call("POST", "/profiles/bob/filter", R"({"keywords":["business","commerce"]})");
  REQUIRE(psi.status == 200);
  CHECK(psi.body["relevant"] == true);
  CHECK(psi.body["degree"] == "0.856");
  CHECK(psi.body["premises"].size() == 2);
  const auto phi = fx.call("POST", "/profiles/bob/filter", R"js({"formula":"pkw(business) & pkw(art)"})js");
  CHECK(phi.body["relevant"] == false);
  CHECK(fx.call("POST", "/profiles/bob/filter", "{").status == 400);
  CHECK(fx.call("POST", "/profiles/bob/filter", R"({"keywords":[]})").status == 400);
  CHECK(fx.call("POST", "/profiles/bob/filter", R"js({"formula":"p(a) &"})js").status == 400);
  CHECK(fx.call("POST", "/profiles/bob/filter", R"({"formula":3})").status == 400);
}

TEST_CASE("feedback validation") {
  Fixture fx;
  const auto post = [&](const char* body) { return fx.call("POST", "/profiles/alice/feedback", body).status; };
  CHECK(post(R"({"keywords":["art"],"judgment":"relevant"})") == 400);
  CHECK(post(R"({"doc_id":"x","keywords":["art"],"judgment":"maybe"})") == 400);
  CHECK(post(R"({"doc_id":"x","keywords":["art"]})") == 400);
  CHECK(post(R"({"doc_id":"x","keywords":[1],"judgment":"relevant"})") == 400);
  CHECK(post(R"({"doc_id":"x","keywords":["#a"],"judgment":"relevant"})") == 400);
  CHECK(fx.call("GET", "/profiles/alice/history").body["history_length"] == 0);
}

TEST_CASE("feedback replays the second stage through the API") {
  Fixture fx;
  std::size_t history = fx.call("GET", "/profiles/bob/history").body["history_length"];
  for (const Document& d : corpus("t2.tsv")) {
    const auto r = fx.call("POST", "/profiles/bob/feedback", feedback_body(d));
    REQUIRE(r.status == 200);
    history += r.body["reports"].size();
    REQUIRE(r.body["history_length"] == history);
  }
  CHECK(ranks(fx.call("GET", "/profiles/bob/beliefs").body) ==
        std::map<std::string, std::string>{{"pkw(business) <-> pkw(commerce)", "1.000"},
                                           {"pkw(sculpture) -> pkw(art)", "1.000"},
                                           {"pkw(business)", "0.856"},
                                           {"pkw(sculpture)", "0.785"}});
  const AgentProfile stored = fx.store.load("bob");
  CHECK(replay_history(stored) == stored.ranking);
}

TEST_CASE("sculpture turning positive drops both negations") {
  Fixture fx;
  // Relevant sculpture documents until the keyword turns positive.
  Json last;
  for (int n = 0; n < 60; ++n) {
    const Document d = make_document("s" + std::to_string(n), {"sculpture"}, Judgment::kRelevant);
    const auto r = fx.call("POST", "/profiles/bob/feedback", feedback_body(d));
    REQUIRE(r.status == 200);
    for (const auto& report : r.body["reports"]) {
      if (report["formula"] == "pkw(sculpture)") last = report;
    }
    if (!last.is_null()) break;
  }
  REQUIRE_FALSE(last.is_null());
  CHECK(last["operation"] == "maxi_adjust");
  CHECK(Rank::parse(last["target"].get<std::string>()) >= Rank(0.5));
  const auto held = ranks(fx.call("GET", "/profiles/bob/beliefs").body);
  CHECK(held.count("pkw(sculpture)") == 1);
  CHECK(held.count("!pkw(sculpture)") == 0);
  CHECK(held.count("!pkw(art)") == 0);
  CHECK(held.at("pkw(business)") == "0.856");
}

TEST_CASE("queue and history paging") {
  Fixture fx;
  fx.store.save_queue("alice", corpus("probe.tsv"));
  const auto q = fx.call("GET", "/profiles/alice/queue", "", {{"limit", "2"}});
  CHECK(q.body["pending"] == 3);
  CHECK(q.body["documents"].size() == 2);
  CHECK(fx.call("GET", "/profiles/alice/queue", "", {{"limit", "-1"}}).status == 400);
  const Json body = {{"doc_id", "phi"}, {"keywords", {"business", "art"}}, {"judgment", "relevant"}};
  REQUIRE(fx.call("POST", "/profiles/alice/feedback", body.dump()).status == 200);
  CHECK(fx.call("GET", "/profiles/alice/queue").body["pending"] == 2);
  const auto all = fx.call("GET", "/profiles/alice/history");
  const std::size_t n = all.body["history_length"];
  REQUIRE(n > 0);
  CHECK(fx.call("GET", "/profiles/alice/history", "", {{"since", std::to_string(n - 1)}})
            .body["reports"].size() == 1);
  CHECK(fx.call("GET", "/profiles/alice/history", "", {{"since", "x"}}).status == 400);
}

TEST_CASE("a second writer gets 409 and changes nothing") {
  Fixture fx;
  const std::string before = read_file(fx.root / "alice" / "profile.tsv");
  std::promise<void> held;
  std::promise<void> release;
  std::thread writer([&] {
    auto lock = fx.store.try_lock("alice");
    held.set_value();
    release.get_future().wait();
  });
  held.get_future().wait();
  const Json body = {{"doc_id", "x"}, {"keywords", {"art"}}, {"judgment", "relevant"}};
  const auto r = fx.call("POST", "/profiles/alice/feedback", body.dump());
  release.set_value();
  writer.join();
  CHECK(r.status == 409);
  CHECK(read_file(fx.root / "alice" / "profile.tsv") == before);
  CHECK(fx.call("GET", "/profiles/alice/beliefs").status == 200);
  CHECK(fx.call("POST", "/profiles/alice/feedback", body.dump()).status == 200);
}

TEST_CASE("corrupt profiles are reported, not served") {
  Fixture fx;
  write_file(fx.root / "alice" / "profile.tsv", "[config]\nmode\tloose\n");
  const auto r = fx.call("GET", "/profiles/alice/beliefs");
  CHECK(r.status >= 400);
  CHECK(r.body["error"]["message"].get<std::string>().find("line 2") != std::string::npos);
}

TEST_CASE("HTTP round trip") {
  Fixture fx;
  HttpServer server(fx.api);
  const int port = server.bind("127.0.0.1", 0);
  std::thread runner([&] { server.run(); });
  httplib::Client client("127.0.0.1", port);
  const httplib::Headers auth = {{"Authorization", std::string("Bearer ") + kToken}};

  auto get = client.Get("/profiles/bob/beliefs", auth);
  REQUIRE(get);
  CHECK(get->status == 200);
  CHECK(Json::parse(get->body)["cut_size"] == 5);

  auto post = client.Post("/profiles/bob/filter", auth, R"({"keywords":["commerce"]})",
                          "application/json");
  REQUIRE(post);
  CHECK(Json::parse(post->body)["relevant"] == true);

  auto denied = client.Get("/profiles");
  REQUIRE(denied);
  CHECK(denied->status == 401);

  auto paged = client.Get("/profiles/bob/history?since=1", auth);
  REQUIRE(paged);
  CHECK(Json::parse(paged->body)["since"] == 1);

  server.stop();
  runner.join();
}
