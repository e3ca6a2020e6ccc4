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

#include "entrench/rank.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "entrench/error.hpp"

namespace entrench {

Rank::Rank(double value) : value_(value) {
  if (!(value >= -kTolerance && value <= 1.0 + kTolerance)) {
    throw PreconditionError("rank " + std::to_string(value) + " outside [0, 1]");
  }
  if (value_ <= 0.0) value_ = 0.0;
  if (value_ > 1.0) value_ = 1.0;
}

Rank Rank::parse(std::string_view text) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ParseError("invalid rank '" + std::string(text) + "'", 0);
  }
  if (!(v >= 0.0 && v <= 1.0)) {
    throw ParseError("rank '" + std::string(text) + "' outside [0, 1]", 0);
  }
  return Rank(v);
}

Rank Rank::quantized(double value) {
  return Rank(std::round(value * 1000.0) / 1000.0);
}

std::string Rank::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.3f", value_);
  return buf;
}

}  // namespace entrench
