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

// Text formats. All are line oriented, tab separated, with `#` comments.
//
// Belief base:
//   rank TAB flags TAB formula       flags: "P" protected, "-" otherwise
//   @constants TAB a,b,...           constants whose schema instances exist
// Schemas use `forall x. body` as formula text. Ranks have three decimals.
// A bare formula line (no tabs) is domain knowledge: protected, rank 1.
//
// Corpus:
//   id TAB label TAB keyword,keyword,...      label: R, N or ?
//
// Profile: [config], [stats], [genesis], [beliefs] and [history] sections.
//
// Writers emit canonical text; reading canonical text and writing it again
// reproduces it byte for byte.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "entrench/agent.hpp"
#include "entrench/ranking.hpp"

namespace entrench {

EntrenchmentRanking read_belief_base(std::string_view text);
std::string write_belief_base(const EntrenchmentRanking& ranking);

std::vector<Document> read_corpus(std::string_view text);
std::string write_corpus(std::span<const Document> corpus);

AgentProfile read_profile(std::string_view text);
std::string write_profile(const AgentProfile& profile);

/// One history record, as stored in the [history] section.
std::string write_report(const AdjustmentReport& report);

/// Whole-file helpers; throw IoError.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace entrench
