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

// File-backed profile storage: <root>/<id>/profile.tsv plus an optional
// <root>/<id>/queue.tsv of documents awaiting judgment.

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "entrench/agent.hpp"

namespace entrench::tools {

/// Profile ids are [A-Za-z0-9_-]{1,64}.
bool valid_profile_id(std::string_view id);

class ProfileStore {
 public:
  explicit ProfileStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path directory(const std::string& id) const;

  bool exists(const std::string& id) const;
  std::vector<std::string> list() const;

  /// Throws IoError when absent or unreadable, ParseError when corrupt.
  AgentProfile load(const std::string& id) const;
  /// Atomic replace.
  void save(const std::string& id, const AgentProfile& profile) const;

  /// Documents awaiting judgment; empty when there is no queue file.
  std::vector<Document> queue(const std::string& id) const;
  void save_queue(const std::string& id, const std::vector<Document>& docs) const;

  /// Writer lock for one profile. try_lock fails while another writer holds it.
  std::unique_lock<std::mutex> try_lock(const std::string& id);

 private:
  std::filesystem::path root_;
  std::mutex registry_mutex_;
  std::map<std::string, std::unique_ptr<std::mutex>> locks_;
};

}  // namespace entrench::tools
