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

#include "entrench_tools/api.hpp"

#include <algorithm>
#include <charconv>

#include "entrench/error.hpp"
#include "entrench/io.hpp"

namespace entrench::tools {

namespace {

constexpr std::size_t kDefaultQueueLimit = 10;

// Raised inside handlers; becomes an error response.
struct HttpError {
  int status;
  std::string message;
};

ApiResponse error_response(int status, const std::string& message) {
  return {status, {{"error", {{"status", status}, {"message", message}}}}};
}

std::vector<std::string> segments(std::string_view path) {
  std::vector<std::string> out;
  while (!path.empty()) {
    if (path.front() == '/') {
      path.remove_prefix(1);
      continue;
    }
    const std::size_t k = path.find('/');
    out.emplace_back(path.substr(0, k));
    if (k == std::string_view::npos) break;
    path.remove_prefix(k);
  }
  return out;
}

Json parse_body(const std::string& body) {
  Json j = Json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw HttpError{400, "body must be a JSON object"};
  return j;
}

std::vector<std::string> keyword_list(const Json& body) {
  auto it = body.find("keywords");
  if (it == body.end() || !it->is_array() || it->empty()) {
    throw HttpError{400, "'keywords' must be a non-empty array of strings"};
  }
  std::vector<std::string> out;
  for (const auto& k : *it) {
    if (!k.is_string()) throw HttpError{400, "'keywords' must hold strings"};
    out.push_back(k.get<std::string>());
  }
  return out;
}

std::size_t count_param(const ApiRequest& request, const std::string& name,
                        std::size_t fallback) {
  auto it = request.query.find(name);
  if (it == request.query.end()) return fallback;
  std::size_t v = 0;
  const std::string& s = it->second;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw HttpError{400, "'" + name + "' must be a non-negative integer"};
  }
  return v;
}

Judgment parse_judgment(const Json& body) {
  auto it = body.find("judgment");
  if (it == body.end() || !it->is_string()) throw HttpError{400, "'judgment' is required"};
  const std::string s = it->get<std::string>();
  if (s == "relevant") return Judgment::kRelevant;
  if (s == "non-relevant" || s == "nonrelevant") return Judgment::kNonRelevant;
  throw HttpError{400, "'judgment' must be 'relevant' or 'non-relevant'"};
}

}  // namespace

Api::Api(ProfileStore& store, std::string token) : store_(store), token_(std::move(token)) {
  if (token_.empty()) throw PreconditionError("the API needs a non-empty token");
}

ApiResponse Api::handle(const ApiRequest& request) {
  try {
    if (request.authorization != "Bearer " + token_) {
      throw HttpError{401, "missing or invalid bearer token"};
    }
    const std::vector<std::string> parts = segments(request.path);
    const bool get = request.method == "GET";
    const bool post = request.method == "POST";

    if (parts.size() == 1 && parts[0] == "config" && get) return config();
    if (parts.size() == 1 && parts[0] == "profiles" && get) {
      return {200, {{"profiles", store_.list()}}};
    }
    if (parts.size() == 3 && parts[0] == "profiles") {
      const std::string& id = parts[1];
      const std::string& leaf = parts[2];
      const bool known_route = (get && (leaf == "beliefs" || leaf == "queue" ||
                                        leaf == "history")) ||
                               (post && (leaf == "feedback" || leaf == "filter"));
      if (known_route) {
        if (!store_.exists(id)) throw HttpError{404, "unknown profile '" + id + "'"};
        if (leaf == "beliefs") return beliefs(id);
        if (leaf == "queue") return queue(id, request);
        if (leaf == "history") return history(id, request);
        const Json body = parse_body(request.body);
        if (leaf == "feedback") return feedback(id, body);
        return filter(id, body);
      }
    }
    throw HttpError{404, "no route for " + request.method + " " + request.path};
  } catch (const HttpError& e) {
    return error_response(e.status, e.message);
  } catch (const ParseError& e) {
    return error_response(400, e.what());
  } catch (const ProtectedConflict& e) {
    return error_response(409, e.what());
  } catch (const PreconditionError& e) {
    return error_response(400, e.what());
  } catch (const std::exception& e) {
    return error_response(500, e.what());
  }
}

ApiResponse Api::config() {
  const ClassifierConfig defaults;
  return {200,
          {{"service", "entrench"},
           {"rank_decimals", 3},
           {"judgments", {"relevant", "non-relevant"}},
           {"defaults",
            {{"mode", to_string(Mode::kPaper)},
             {"epsilon", defaults.epsilon},
             {"lambda", defaults.lambda},
             {"prel", defaults.p_rel}}},
           {"profiles", store_.list()}}};
}

ApiResponse Api::beliefs(const std::string& id) {
  const AgentProfile p = store_.load(id);
  Json body = beliefs_json(p.ranking);
  body["profile"] = id;
  body["mode"] = to_string(p.mode);
  body["history_length"] = p.history.size();
  return {200, body};
}

ApiResponse Api::feedback(const std::string& id, const Json& body) {
  auto doc_id = body.find("doc_id");
  if (doc_id == body.end() || !doc_id->is_string() || doc_id->get<std::string>().empty()) {
    throw HttpError{400, "'doc_id' must be a non-empty string"};
  }
  const Judgment judgment = parse_judgment(body);
  const Document doc = make_document(doc_id->get<std::string>(), keyword_list(body));

  auto lock = store_.try_lock(id);
  if (!lock.owns_lock()) throw HttpError{409, "another judgment for '" + id + "' is in flight"};

  const AgentProfile before = store_.load(id);
  const LearnResult result = learn(before, doc, judgment);

  // The reports must replay the prior snapshot onto the new one.
  EntrenchmentRanking replayed = before.ranking;
  for (const auto& r : result.reports) replayed = apply_report(replayed, r);
  if (!(replayed == result.profile.ranking)) {
    throw HttpError{500, "adjustment reports do not reproduce the new ranking"};
  }
  store_.save(id, result.profile);

  std::vector<Document> pending = store_.queue(id);
  const auto judged = std::remove_if(pending.begin(), pending.end(),
                                     [&](const Document& d) { return d.id == doc.id; });
  if (judged != pending.end()) {
    pending.erase(judged, pending.end());
    store_.save_queue(id, pending);
  }

  Json reports = Json::array();
  for (const auto& r : result.reports) reports.push_back(to_json(r));
  return {200,
          {{"profile", id},
           {"doc_id", doc.id},
           {"judgment", judgment == Judgment::kRelevant ? "relevant" : "non-relevant"},
           {"reports", reports},
           {"history_length", result.profile.history.size()}}};
}

ApiResponse Api::filter(const std::string& id, const Json& body) {
  const AgentProfile p = store_.load(id);
  Formula query = [&] {
    auto f = body.find("formula");
    if (f != body.end()) {
      if (!f->is_string()) throw HttpError{400, "'formula' must be a string"};
      return parse_formula(f->get<std::string>());
    }
    return document_formula(make_document("query", keyword_list(body)));
  }();
  const Explanation e = explain(p, query);
  Json out = to_json(e.verdict);
  out["query"] = e.query;
  out["incons"] = e.inconsistency.to_string();
  out["cut_size"] = e.cut.size();
  return {200, out};
}

ApiResponse Api::queue(const std::string& id, const ApiRequest& request) {
  const std::size_t limit = count_param(request, "limit", kDefaultQueueLimit);
  const std::vector<Document> pending = store_.queue(id);
  Json docs = Json::array();
  for (std::size_t k = 0; k < pending.size() && k < limit; ++k) {
    docs.push_back({{"id", pending[k].id}, {"keywords", pending[k].keywords}});
  }
  return {200, {{"profile", id}, {"documents", docs}, {"pending", pending.size()}}};
}

ApiResponse Api::history(const std::string& id, const ApiRequest& request) {
  const AgentProfile p = store_.load(id);
  const std::size_t since = count_param(request, "since", 0);
  Json reports = Json::array();
  for (std::size_t k = since; k < p.history.size(); ++k) {
    reports.push_back(to_json(p.history[k]));
  }
  return {200, {{"profile", id}, {"since", since}, {"reports", reports},
                {"history_length", p.history.size()}}};
}

}  // namespace entrench::tools
