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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entrench {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula, belief-base, corpus or profile text.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  /// Error in line-oriented text; position() is the 1-based line number.
  static ParseError at_line(const std::string& message, std::size_t line) {
    return ParseError(Line{}, "line " + std::to_string(line) + ": " + message, line);
  }

  std::size_t position() const { return position_; }

 private:
  struct Line {};
  ParseError(Line, const std::string& what, std::size_t line)
      : Error(what), position_(line) {}

  std::size_t position_;
};

/// An operation was called outside its precondition (e.g. contracting a
/// tautology, or a rank outside [0, 1]).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A change would have to lower protected domain knowledge.
class ProtectedConflict : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace entrench
