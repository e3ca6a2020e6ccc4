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

#include "httplib.h"

#include "entrench/error.hpp"
#include "entrench_tools/api.hpp"

namespace entrench::tools {

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(Api& api) : impl_(std::make_unique<Impl>()) {
  auto forward = [&api](const httplib::Request& req, httplib::Response& res) {
    ApiRequest r;
    r.method = req.method;
    r.path = req.path;
    for (const auto& [k, v] : req.params) r.query[k] = v;
    r.authorization = req.get_header_value("Authorization");
    r.body = req.body;
    const ApiResponse out = api.handle(r);
    res.status = out.status;
    res.set_content(out.body.dump(), "application/json");
  };
  impl_->server.Get(R"(/.*)", forward);
  impl_->server.Post(R"(/.*)", forward);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                              : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw IoError("cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void HttpServer::run() {
  if (!impl_->server.listen_after_bind()) throw IoError("HTTP server stopped abnormally");
}

void HttpServer::stop() { impl_->server.stop(); }

void serve(Api& api, const std::string& host, int port) {
  HttpServer server(api);
  server.bind(host, port);
  server.run();
}

}  // namespace entrench::tools
