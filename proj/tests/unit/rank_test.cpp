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

#include "doctest.h"
#include "entrench/error.hpp"
#include "entrench/rank.hpp"

using entrench::PreconditionError;
using entrench::Rank;

TEST_CASE("bounds") {
  CHECK_THROWS_AS(Rank(-0.1), PreconditionError);
  CHECK_THROWS_AS(Rank(1.1), PreconditionError);
  CHECK(Rank(0.0).is_zero());
  CHECK(Rank(1.0).is_top());
  CHECK(Rank::top() == Rank(1.0));
}

TEST_CASE("comparisons use an absolute tolerance") {
  CHECK(Rank(0.5) == Rank(0.5 + 1e-10));
  CHECK_FALSE(Rank(0.5) < Rank(0.5 + 1e-10));
  CHECK(Rank(0.5) < Rank(0.5 + 1e-6));
  CHECK(Rank(0.7) > Rank(0.4));
  CHECK(Rank(0.4) <= Rank(0.4));
}

TEST_CASE("three-decimal text") {
  CHECK(Rank(0.856).to_string() == "0.856");
  CHECK(Rank(1.0).to_string() == "1.000");
  CHECK(Rank(0.0).to_string() == "0.000");
  CHECK(Rank(1e-12).to_string() == "0.000");
  CHECK(Rank::parse("0.785") == Rank(0.785));
  CHECK(Rank::parse("1").is_top());
  CHECK_THROWS(Rank::parse("abc"));
  CHECK_THROWS(Rank::parse("0.5x"));
  CHECK_THROWS(Rank::parse("2"));
}

TEST_CASE("quantization") {
  CHECK(Rank::quantized(0.78461).to_string() == "0.785");
  CHECK(Rank::quantized(0.8364).value() == doctest::Approx(0.836).epsilon(1e-12));
  CHECK(Rank::quantized(0.0004).is_zero());
}
