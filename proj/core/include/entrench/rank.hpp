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

#pragma once

#include <string>
#include <string_view>

namespace entrench {

/// Entrenchment rank in [0, 1]; 1 is the maximal ordinal. Comparisons use an
/// absolute tolerance of 1e-9.
class Rank {
 public:
  static constexpr double kTolerance = 1e-9;

  constexpr Rank() = default;
  /// Throws PreconditionError outside [0, 1].
  explicit Rank(double value);

  static constexpr Rank zero() { return Rank(Exact{0.0}); }
  static constexpr Rank top() { return Rank(Exact{1.0}); }

  /// Parses a decimal such as "0.856".
  static Rank parse(std::string_view text);

  /// Nearest multiple of 0.001.
  static Rank quantized(double value);

  double value() const { return value_; }
  bool is_zero() const { return value_ <= kTolerance; }
  bool is_top() const { return value_ >= 1.0 - kTolerance; }

  /// Three decimals, e.g. "0.856", as in the persisted formats.
  std::string to_string() const;

  friend bool operator==(Rank a, Rank b) {
    return a.value_ - b.value_ <= kTolerance && b.value_ - a.value_ <= kTolerance;
  }
  friend bool operator<(Rank a, Rank b) { return a.value_ < b.value_ - kTolerance; }
  friend bool operator>(Rank a, Rank b) { return b < a; }
  friend bool operator<=(Rank a, Rank b) { return !(b < a); }
  friend bool operator>=(Rank a, Rank b) { return !(a < b); }

 private:
  struct Exact {
    double v;
  };
  constexpr explicit Rank(Exact e) : value_(e.v) {}

  double value_ = 0.0;
};

}  // namespace entrench
