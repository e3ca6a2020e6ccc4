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

#include "entrench_tools/store.hpp"

#include <algorithm>

#include "entrench/error.hpp"
#include "entrench/io.hpp"

namespace entrench::tools {

namespace {

constexpr const char* kProfileFile = "profile.tsv";
constexpr const char* kQueueFile = "queue.tsv";
constexpr std::size_t kMaxIdLength = 64;

}  // namespace

bool valid_profile_id(std::string_view id) {
  if (id.empty() || id.size() > kMaxIdLength) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == '-';
  });
}

ProfileStore::ProfileStore(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path ProfileStore::directory(const std::string& id) const {
  if (!valid_profile_id(id)) throw PreconditionError("invalid profile id '" + id + "'");
  return root_ / id;
}

bool ProfileStore::exists(const std::string& id) const {
  if (!valid_profile_id(id)) return false;
  std::error_code ec;
  return std::filesystem::is_regular_file(directory(id) / kProfileFile, ec);
}

std::vector<std::string> ProfileStore::list() const {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(root_, ec)) {
    const std::string id = entry.path().filename().string();
    if (exists(id)) out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

AgentProfile ProfileStore::load(const std::string& id) const {
  return read_profile(read_file(directory(id) / kProfileFile));
}

void ProfileStore::save(const std::string& id, const AgentProfile& profile) const {
  write_file(directory(id) / kProfileFile, write_profile(profile));
}

std::vector<Document> ProfileStore::queue(const std::string& id) const {
  const auto path = directory(id) / kQueueFile;
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return {};
  return read_corpus(read_file(path));
}

void ProfileStore::save_queue(const std::string& id, const std::vector<Document>& docs) const {
  write_file(directory(id) / kQueueFile, write_corpus(docs));
}

std::unique_lock<std::mutex> ProfileStore::try_lock(const std::string& id) {
  std::mutex* m = nullptr;
  {
    std::lock_guard<std::mutex> guard(registry_mutex_);
    auto& slot = locks_[id];
    if (!slot) slot = std::make_unique<std::mutex>();
    m = slot.get();
  }
  return std::unique_lock<std::mutex>(*m, std::try_to_lock);
}

}  // namespace entrench::tools
