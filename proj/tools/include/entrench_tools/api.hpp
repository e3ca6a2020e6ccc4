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

// HTTP API as a pure request -> response function over a ProfileStore.
//
//   GET  /config
//   GET  /profiles
//   GET  /profiles/{id}/beliefs
//   POST /profiles/{id}/feedback   {"doc_id", "keywords": [...], "judgment"}
//   POST /profiles/{id}/filter     {"keywords": [...]} or {"formula": "..."}
//   GET  /profiles/{id}/queue      ?limit=N
//   GET  /profiles/{id}/history    ?since=N
//
// Every request needs "Authorization: Bearer <token>". Errors are
// {"error": {"status", "message"}} with 400, 401, 404 or 409.
// Feedback takes the profile's writer lock without waiting; a held lock
// yields 409. Reads see the last saved snapshot and never wait.

#pragma once

#include <map>
#include <memory>
#include <string>

#include "entrench_tools/json_codec.hpp"
#include "entrench_tools/store.hpp"

namespace entrench::tools {

struct ApiRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string authorization;
  std::string body;
};

struct ApiResponse {
  int status = 200;
  Json body;
};

class Api {
 public:
  /// Throws PreconditionError on an empty token.
  Api(ProfileStore& store, std::string token);

  ApiResponse handle(const ApiRequest& request);

  ProfileStore& store() { return store_; }

 private:
  ApiResponse beliefs(const std::string& id);
  ApiResponse feedback(const std::string& id, const Json& body);
  ApiResponse filter(const std::string& id, const Json& body);
  ApiResponse queue(const std::string& id, const ApiRequest& request);
  ApiResponse history(const std::string& id, const ApiRequest& request);
  ApiResponse config();

  ProfileStore& store_;
  std::string token_;
};

/// HTTP front end for an Api; every GET and POST path is forwarded.
class HttpServer {
 public:
  explicit HttpServer(Api& api);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Port 0 picks a free port. Returns the bound port; throws IoError.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void run();
  /// Safe from any thread.
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Serves `api` until the process is stopped. Throws IoError when the
/// address cannot be bound.
void serve(Api& api, const std::string& host, int port);

}  // namespace entrench::tools
