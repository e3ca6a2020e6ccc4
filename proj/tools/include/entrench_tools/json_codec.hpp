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

// JSON views shared by the HTTP API and `--json` CLI output. Formulas are
// canonical grammar strings; ranks are three-decimal strings.

#pragma once

#include "json.hpp"

#include "entrench/agent.hpp"
#include "entrench/ranking.hpp"
#include "entrench/transmutation.hpp"

namespace entrench::tools {

using Json = nlohmann::json;

Json to_json(const AdjustmentReport& report);
Json to_json(const Verdict& verdict);
Json to_json(const Explanation& explanation);
Json to_json(const Violation& violation);

/// Snapshot with ranks, protected flags, cut membership and Incons.
Json beliefs_json(const EntrenchmentRanking& ranking);

}  // namespace entrench::tools
