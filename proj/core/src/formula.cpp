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

#include "entrench/formula.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <utility>

#include "entrench/error.hpp"

namespace entrench {

namespace {

int precedence(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kIff: return 1;
    case Formula::Kind::kImplies: return 2;
    case Formula::Kind::kOr: return 3;
    case Formula::Kind::kAnd: return 4;
    case Formula::Kind::kNot: return 5;
    case Formula::Kind::kAtom: return 6;
  }
  return 0;
}

const char* connective(Formula::Kind kind) {
  switch (kind) {
    case Formula::Kind::kIff: return " <-> ";
    case Formula::Kind::kImplies: return " -> ";
    case Formula::Kind::kOr: return " | ";
    case Formula::Kind::kAnd: return " & ";
    default: return "";
  }
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_plain_word(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return is_word_char(c) && !std::isupper(static_cast<unsigned char>(c));
  });
}

}  // namespace

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string render_argument(std::string_view argument) {
  if (is_plain_word(argument)) return std::string(argument);
  std::string out = "\"";
  for (char c : argument) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

Atom make_atom(std::string_view predicate, std::string_view argument) {
  if (predicate.empty()) throw ParseError("empty predicate", 0);
  if (argument.empty()) throw ParseError("empty atom argument", 0);
  return Atom{to_lower_ascii(predicate), to_lower_ascii(argument)};
}

struct Formula::Node {
  Kind kind;
  Atom atom;
  std::vector<Formula> children;
  std::string text;
};

namespace {

bool needs_parens(Formula::Kind parent, Formula::Kind child, bool right_side) {
  int p = precedence(parent);
  int c = precedence(child);
  if (c != p) return c < p;
  // Same connective on both levels: -> associates right, the rest left.
  if (parent == Formula::Kind::kImplies) return !right_side;
  return right_side;
}

}  // namespace

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(Atom a) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kAtom;
  node->text = a.predicate + "(" + render_argument(a.argument) + ")";
  node->atom = std::move(a);
  return Formula(std::move(node));
}

Formula Formula::atom(std::string_view predicate, std::string_view argument) {
  return atom(make_atom(predicate, argument));
}

Formula Formula::negation(Formula operand) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kNot;
  bool wrap = precedence(operand.kind()) < precedence(Kind::kNot);
  node->text = wrap ? "!(" + operand.to_string() + ")" : "!" + operand.to_string();
  node->children.push_back(std::move(operand));
  return Formula(std::move(node));
}

namespace {

template <typename Make>
Formula binary(Formula::Kind kind, const Formula& lhs, const Formula& rhs,
               Make make) {
  std::string text;
  if (needs_parens(kind, lhs.kind(), false)) {
    text = "(" + lhs.to_string() + ")";
  } else {
    text = lhs.to_string();
  }
  text += connective(kind);
  if (needs_parens(kind, rhs.kind(), true)) {
    text += "(" + rhs.to_string() + ")";
  } else {
    text += rhs.to_string();
  }
  return make(std::move(text));
}

}  // namespace

#define ENTRENCH_BINARY_FACTORY(name, kind_value)                        \
  Formula Formula::name(Formula lhs, Formula rhs) {                      \
    return binary(kind_value, lhs, rhs, [&](std::string text) {          \
      auto node = std::make_shared<Node>();                              \
      node->kind = kind_value;                                           \
      node->children = {lhs, rhs};                                       \
      node->text = std::move(text);                                      \
      return Formula(std::move(node));                                   \
    });                                                                  \
  }

ENTRENCH_BINARY_FACTORY(conjunction, Kind::kAnd)
ENTRENCH_BINARY_FACTORY(disjunction, Kind::kOr)
ENTRENCH_BINARY_FACTORY(implication, Kind::kImplies)
ENTRENCH_BINARY_FACTORY(biconditional, Kind::kIff)

#undef ENTRENCH_BINARY_FACTORY

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::as_atom() const {
  assert(node_->kind == Kind::kAtom);
  return node_->atom;
}

const Formula& Formula::lhs() const {
  assert(!node_->children.empty());
  return node_->children.front();
}

const Formula& Formula::rhs() const {
  assert(node_->children.size() == 2);
  return node_->children.back();
}

bool Formula::is_binary() const {
  Kind k = kind();
  return k != Kind::kAtom && k != Kind::kNot;
}

std::string Formula::to_string() const { return node_->text; }

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}

Formula negate(const Formula& f) {
  if (f.kind() == Formula::Kind::kNot) return f.lhs();
  return Formula::negation(f);
}

Formula conjoin(std::span<const Formula> parts) {
  if (parts.empty()) throw PreconditionError("cannot conjoin an empty list");
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    acc = Formula::conjunction(acc, parts[i]);
  }
  return acc;
}

namespace {

void collect_atoms(const Formula& f, std::set<Atom>& out) {
  if (f.is_atom()) {
    out.insert(f.as_atom());
    return;
  }
  collect_atoms(f.lhs(), out);
  if (f.is_binary()) collect_atoms(f.rhs(), out);
}

Formula rebuild(Formula::Kind kind, Formula lhs, Formula rhs) {
  switch (kind) {
    case Formula::Kind::kAnd: return Formula::conjunction(std::move(lhs), std::move(rhs));
    case Formula::Kind::kOr: return Formula::disjunction(std::move(lhs), std::move(rhs));
    case Formula::Kind::kImplies: return Formula::implication(std::move(lhs), std::move(rhs));
    case Formula::Kind::kIff: return Formula::biconditional(std::move(lhs), std::move(rhs));
    default: break;
  }
  assert(false);
  return lhs;
}

}  // namespace

std::set<Atom> atoms_of(const Formula& f) {
  std::set<Atom> out;
  collect_atoms(f, out);
  return out;
}

std::set<std::string> constants_of(const Formula& f) {
  std::set<std::string> out;
  for (const Atom& a : atoms_of(f)) out.insert(a.argument);
  return out;
}

Formula substitute(const Formula& f, std::string_view variable,
                   std::string_view constant) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      const Atom& a = f.as_atom();
      if (a.argument == variable) return Formula::atom(a.predicate, constant);
      return f;
    }
    case Formula::Kind::kNot:
      return Formula::negation(substitute(f.lhs(), variable, constant));
    default:
      return rebuild(f.kind(), substitute(f.lhs(), variable, constant),
                     substitute(f.rhs(), variable, constant));
  }
}

std::string Schema::to_string() const {
  return "forall " + variable + ". " + body.to_string();
}

std::vector<Formula> ground_schema(const Schema& schema,
                                   const std::set<std::string>& constants) {
  if (constants.empty()) {
    throw PreconditionError("cannot ground " + schema.to_string() +
                            " over an empty constant set");
  }
  std::vector<Formula> out;
  out.reserve(constants.size());
  for (const std::string& c : constants) {
    out.push_back(substitute(schema.body, schema.variable, c));
  }
  return out;
}

// {{{ Parser

namespace {

enum class Tok { kIdent, kString, kLParen, kRParen, kNot, kAnd, kOr, kImplies,
                 kIff, kDot, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (i_ >= src_.size()) {
        out.push_back({Tok::kEnd, "", i_});
        return out;
      }
      std::size_t start = i_;
      char c = src_[i_];
      if (is_word_char(c)) {
        while (i_ < src_.size() && is_word_char(src_[i_])) ++i_;
        out.push_back({Tok::kIdent, std::string(src_.substr(start, i_ - start)), start});
      } else if (c == '"') {
        out.push_back({Tok::kString, quoted(), start});
      } else if (c == '(') {
        ++i_;
        out.push_back({Tok::kLParen, "(", start});
      } else if (c == ')') {
        ++i_;
        out.push_back({Tok::kRParen, ")", start});
      } else if (c == '!') {
        ++i_;
        out.push_back({Tok::kNot, "!", start});
      } else if (c == '&') {
        ++i_;
        out.push_back({Tok::kAnd, "&", start});
      } else if (c == '|') {
        ++i_;
        out.push_back({Tok::kOr, "|", start});
      } else if (c == '.') {
        ++i_;
        out.push_back({Tok::kDot, ".", start});
      } else if (src_.substr(i_, 2) == "->") {
        i_ += 2;
        out.push_back({Tok::kImplies, "->", start});
      } else if (src_.substr(i_, 3) == "<->") {
        i_ += 3;
        out.push_back({Tok::kIff, "<->", start});
      } else if (c == '<' || c == '-' || c == '=' || c == '~' || c == '^' ||
                 c == '>' || c == '+' || c == '*' || c == '/') {
        std::size_t end = i_;
        while (end < src_.size() && std::string_view("<->=~^+*/").find(src_[end]) !=
                                        std::string_view::npos) {
          ++end;
        }
        throw ParseError("unknown connective '" +
                             std::string(src_.substr(start, end - start)) + "'",
                         start);
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
    }
  }

 private:
  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }

  std::string quoted() {
    std::size_t start = i_;
    ++i_;
    std::string out;
    while (i_ < src_.size() && src_[i_] != '"') {
      if (src_[i_] == '\\') {
        ++i_;
        if (i_ >= src_.size()) break;
      }
      out += src_[i_++];
    }
    if (i_ >= src_.size()) throw ParseError("unterminated string", start);
    ++i_;
    return out;
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Statement statement() {
    if (peek().kind == Tok::kIdent && to_lower_ascii(peek().text) == "forall" &&
        toks_[k_ + 1].kind == Tok::kIdent) {
      ++k_;
      Token var = next();
      expect(Tok::kDot, "'.' after quantified variable");
      Formula body = iff();
      finish();
      std::string variable = to_lower_ascii(var.text);
      if (!constants_of(body).contains(variable)) {
        throw ParseError("schema body does not mention variable '" + variable + "'",
                         var.pos);
      }
      return Schema{variable, body};
    }
    Formula f = iff();
    finish();
    return f;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  Token next() { return toks_[k_++]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what, peek().pos);
    }
    ++k_;
  }

  void finish() {
    if (peek().kind != Tok::kEnd) {
      throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    }
  }

  Formula iff() {
    Formula lhs = implication();
    while (peek().kind == Tok::kIff) {
      ++k_;
      lhs = Formula::biconditional(lhs, implication());
    }
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::kImplies) {
      ++k_;
      return Formula::implication(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::kOr) {
      ++k_;
      lhs = Formula::disjunction(lhs, conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (peek().kind == Tok::kAnd) {
      ++k_;
      lhs = Formula::conjunction(lhs, unary());
    }
    return lhs;
  }

  Formula unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNot:
        ++k_;
        return Formula::negation(unary());
      case Tok::kLParen: {
        ++k_;
        Formula inner = iff();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kIdent:
        return atom();
      case Tok::kEnd:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  Formula atom() {
    Token pred = next();
    if (to_lower_ascii(pred.text) == "forall") {
      throw ParseError("quantifier only allowed at the start of a schema", pred.pos);
    }
    if (std::isdigit(static_cast<unsigned char>(pred.text.front()))) {
      throw ParseError("predicate must start with a letter", pred.pos);
    }
    expect(Tok::kLParen, "'(' after predicate");
    Token arg = next();
    if (arg.kind != Tok::kIdent && arg.kind != Tok::kString) {
      throw ParseError("expected atom argument", arg.pos);
    }
    if (arg.text.empty()) throw ParseError("empty atom argument", arg.pos);
    expect(Tok::kRParen, "')' after atom argument");
    return Formula::atom(pred.text, arg.text);
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

}  // namespace

Statement parse_statement(std::string_view text) {
  return Parser(Lexer(text).run()).statement();
}

Formula parse_formula(std::string_view text) {
  Statement s = parse_statement(text);
  if (auto* f = std::get_if<Formula>(&s)) return *f;
  throw ParseError("expected a ground formula, got a schema", 0);
}

Schema parse_schema(std::string_view text) {
  Statement s = parse_statement(text);
  if (auto* schema = std::get_if<Schema>(&s)) return *schema;
  throw ParseError("expected 'forall <var>. <formula>'", 0);
}

// }}}

}  // namespace entrench
