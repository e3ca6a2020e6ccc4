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

// Propositional formulas over ground atoms `pred(arg)`, single-variable rule
// schemas, and the concrete text grammar shared by files and the HTTP API.
//
// Grammar (lowest to highest precedence):
//
//   statement := "forall" VAR "." formula | formula
//   formula   := impl ("<->" impl)*
//   impl      := disj ("->" impl)?          right-associative
//   disj      := conj ("|" conj)*
//   conj      := unary ("&" unary)*
//   unary     := "!" unary | "(" formula ")" | atom
//   atom      := IDENT "(" (IDENT | STRING) ")"
//
// Identifiers and arguments are case-insensitive and stored lowercased.
// Arguments that are not plain [a-z0-9_]+ words must be double-quoted.

#pragma once

#include <compare>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace entrench {

struct Atom {
  std::string predicate;
  std::string argument;

  auto operator<=>(const Atom&) const = default;
  bool operator==(const Atom&) const = default;
};

/// Builds an atom, lowercasing both parts. Throws ParseError when either
/// part is empty.
Atom make_atom(std::string_view predicate, std::string_view argument);

/// Immutable propositional formula. Copies share structure.
class Formula {
 public:
  enum class Kind { kAtom, kNot, kAnd, kOr, kImplies, kIff };

  static Formula atom(Atom a);
  static Formula atom(std::string_view predicate, std::string_view argument);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);

  Kind kind() const;
  /// Only valid for kAtom.
  const Atom& as_atom() const;
  /// Operand of kNot, or left side of a binary connective.
  const Formula& lhs() const;
  const Formula& rhs() const;

  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_binary() const;

  /// Canonical text; parse_formula(f.to_string()) == f.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Orders formulas by canonical text. Used wherever ties must break
/// deterministically.
struct CanonicalLess {
  bool operator()(const Formula& a, const Formula& b) const {
    return a.to_string() < b.to_string();
  }
};

/// Negation that strips a leading `!` instead of stacking a second one.
Formula negate(const Formula& f);

/// Left-nested conjunction of a non-empty list.
Formula conjoin(std::span<const Formula> parts);

std::set<Atom> atoms_of(const Formula& f);
/// Arguments of every atom in `f`.
std::set<std::string> constants_of(const Formula& f);

Formula parse_formula(std::string_view text);

/// `forall x. body` with exactly one variable.
struct Schema {
  std::string variable;
  Formula body;

  std::string to_string() const;
  bool operator==(const Schema& other) const {
    return variable == other.variable && body == other.body;
  }
};

Schema parse_schema(std::string_view text);

/// Either a ground formula or a schema, whichever the text holds.
using Statement = std::variant<Formula, Schema>;
Statement parse_statement(std::string_view text);

/// Replaces every atom argument equal to `variable` by `constant`.
Formula substitute(const Formula& f, std::string_view variable,
                   std::string_view constant);

/// One instance per constant, in constant order. Throws PreconditionError on
/// an empty constant set.
std::vector<Formula> ground_schema(const Schema& schema,
                                   const std::set<std::string>& constants);

/// Lowercase ASCII copy; shared by keyword and atom canonicalisation.
std::string to_lower_ascii(std::string_view text);

/// Canonical rendering of an atom argument (quoted when needed).
std::string render_argument(std::string_view argument);

}  // namespace entrench
