// Copyright 2026 The qa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QA_SYNTAX_PARSER_HPP
#define QA_SYNTAX_PARSER_HPP

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "qa/error.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/signature.hpp"

namespace qa {

// Grammar (loosest first):
//   formula := iff
//   iff     := imp ("<->" imp)*              left-assoc
//   imp     := or ("->" imp)?                right-assoc
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "forall" IDENT "." unary | "exists" IDENT "." unary | atom
//   atom    := "true" | "false" | "(" formula ")" | term "=" term | IDENT [ "(" term ("," term)* ")" ]
//   term    := IDENT [ "(" term ("," term)* ")" ]
//
// An identifier that is not declared in the signature and carries no arguments is a variable.
class FormulaParser {
 public:
  FormulaParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) { advance(); }

  Formula parse() {
    Formula f = parse_iff();
    if (tok_.kind != Tok::kEnd) fail("unexpected '" + tok_.text + "' after formula");
    return f;
  }

  Term parse_single_term() {
    Term t = parse_term();
    if (tok_.kind != Tok::kEnd) fail("unexpected '" + tok_.text + "' after term");
    return t;
  }

 private:
  enum class Tok { kEnd, kIdent, kLParen, kRParen, kComma, kDot, kNot, kAnd, kOr, kImp, kIff, kEq };

  struct Token {
    Tok kind = Tok::kEnd;
    std::string text;
    std::size_t offset = 0;
  };

  [[noreturn]] void fail_at(std::size_t offset, const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(tok_.offset, msg); }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_ = Token{Tok::kEnd, "", pos_};
    if (pos_ >= text_.size()) {
      tok_.text = "end of input";
      return;
    }
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      tok_.kind = k;
      tok_.text = std::string(1, c);
      ++pos_;
    };
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_')) {
        ++end;
      }
      while (end < text_.size() && text_[end] == '\'') ++end;
      tok_.kind = Tok::kIdent;
      tok_.text = std::string(text_.substr(pos_, end - pos_));
      pos_ = end;
      return;
    }
    switch (c) {
      case '(':
        return single(Tok::kLParen);
      case ')':
        return single(Tok::kRParen);
      case ',':
        return single(Tok::kComma);
      case '.':
        return single(Tok::kDot);
      case '~':
        return single(Tok::kNot);
      case '&':
        return single(Tok::kAnd);
      case '|':
        return single(Tok::kOr);
      case '=':
        return single(Tok::kEq);
      case '-':
        if (text_.substr(pos_, 2) == "->") {
          tok_.kind = Tok::kImp;
          tok_.text = "->";
          pos_ += 2;
          return;
        }
        break;
      case '<':
        if (text_.substr(pos_, 3) == "<->") {
          tok_.kind = Tok::kIff;
          tok_.text = "<->";
          pos_ += 3;
          return;
        }
        break;
      default:
        break;
    }
    fail_at(pos_, std::string("unexpected character '") + c + "'");
  }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) fail(std::string("expected ") + what + ", found '" + tok_.text + "'");
    advance();
  }

  Formula parse_iff() {
    Formula f = parse_imp();
    while (tok_.kind == Tok::kIff) {
      advance();
      f = Formula::iff(f, parse_imp());
    }
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (tok_.kind == Tok::kImp) {
      advance();
      return Formula::imp(f, parse_imp());
    }
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (tok_.kind == Tok::kOr) {
      advance();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (tok_.kind == Tok::kAnd) {
      advance();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  std::string parse_binder() {
    if (tok_.kind != Tok::kIdent) fail("expected a variable name, found '" + tok_.text + "'");
    const std::string name = tok_.text;
    check_variable_name(name);
    if (sig_.has_symbol(name)) fail("cannot bind declared symbol '" + name + "'");
    advance();
    expect(Tok::kDot, "'.'");
    return name;
  }

  Formula parse_unary() {
    if (tok_.kind == Tok::kNot) {
      advance();
      return Formula::neg(parse_unary());
    }
    if (tok_.kind == Tok::kIdent && (tok_.text == "forall" || tok_.text == "exists")) {
      const bool universal = tok_.text == "forall";
      advance();
      std::string var = parse_binder();
      Formula body = parse_unary();
      return universal ? Formula::forall(var, body) : Formula::exists(var, body);
    }
    return parse_atom();
  }

  Formula parse_atom() {
    if (tok_.kind == Tok::kLParen) {
      advance();
      Formula f = parse_iff();
      expect(Tok::kRParen, "')'");
      return f;
    }
    if (tok_.kind != Tok::kIdent) fail("expected a formula, found '" + tok_.text + "'");
    if (tok_.text == "true") {
      advance();
      return Formula::top();
    }
    if (tok_.text == "false") {
      advance();
      return Formula::bottom();
    }
    if (auto arity = sig_.predicate_arity(tok_.text)) {
      const std::size_t at = tok_.offset;
      const std::string name = tok_.text;
      advance();
      std::vector<Term> args = parse_args_opt();
      if (static_cast<int>(args.size()) != *arity) {
        fail_at(at, "predicate '" + name + "' expects " + std::to_string(*arity) + " argument(s), got " +
                        std::to_string(args.size()));
      }
      return Formula::pred(name, std::move(args));
    }
    const std::size_t at = tok_.offset;
    Term lhs = parse_term();
    if (tok_.kind != Tok::kEq) {
      fail_at(at, "'" + to_string(lhs) + "' is a term, not a formula (missing '=' or undeclared predicate)");
    }
    advance();
    Term rhs = parse_term();
    return Formula::eq(std::move(lhs), std::move(rhs));
  }

  std::vector<Term> parse_args_opt() {
    std::vector<Term> args;
    if (tok_.kind != Tok::kLParen) return args;
    advance();
    args.push_back(parse_term());
    while (tok_.kind == Tok::kComma) {
      advance();
      args.push_back(parse_term());
    }
    expect(Tok::kRParen, "')' or ','");
    return args;
  }

  void check_variable_name(const std::string& name) const {
    if (is_keyword(name)) fail("keyword '" + name + "' cannot be used as a name");
    if (is_primed_name(name)) fail("undeclared primed name '" + name + "'");
    if (is_reserved_name(name)) fail("name '" + name + "' uses the reserved '__' prefix");
  }

  Term parse_term() {
    if (tok_.kind != Tok::kIdent) fail("expected a term, found '" + tok_.text + "'");
    const std::size_t at = tok_.offset;
    const std::string name = tok_.text;
    if (sig_.has_predicate(name)) fail("predicate '" + name + "' used as a term");
    advance();
    std::vector<Term> args = parse_args_opt();
    if (auto info = sig_.function(name)) {
      if (static_cast<int>(args.size()) != info->arity) {
        fail_at(at, "function '" + name + "' expects " + std::to_string(info->arity) + " argument(s), got " +
                        std::to_string(args.size()));
      }
      return Term::app(name, std::move(args));
    }
    if (!args.empty()) fail_at(at, "undeclared function symbol '" + name + "'");
    if (is_keyword(name) || is_primed_name(name) || is_reserved_name(name)) {
      fail_at(at, "'" + name + "' cannot be used as a variable");
    }
    return Term::var(name);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
  Token tok_;
};

inline Formula parse_formula(std::string_view text, const Signature& sig) { return FormulaParser(text, sig).parse(); }

inline Term parse_term(std::string_view text, const Signature& sig) {
  return FormulaParser(text, sig).parse_single_term();
}

}  // namespace qa

#endif  // QA_SYNTAX_PARSER_HPP
