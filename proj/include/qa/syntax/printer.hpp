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

#ifndef QA_SYNTAX_PRINTER_HPP
#define QA_SYNTAX_PRINTER_HPP

#include <ostream>
#include <string>

#include "qa/syntax/formula.hpp"

namespace qa {

namespace detail {

// Binding strength, loosest first. Mirrors the grammar levels iff < imp < or < and < unary.
inline int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::kIff:
      return 1;
    case FormulaKind::kImp:
      return 2;
    case FormulaKind::kOr:
      return 3;
    case FormulaKind::kAnd:
      return 4;
    case FormulaKind::kNot:
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return 5;
    default:
      return 6;
  }
}

inline void print_formula(const Formula& f, int min_level, std::string& out) {
  const int level = precedence(f.kind());
  const bool parens = level < min_level;
  if (parens) out += '(';
  switch (f.kind()) {
    case FormulaKind::kTrue:
      out += "true";
      break;
    case FormulaKind::kFalse:
      out += "false";
      break;
    case FormulaKind::kPred:
      out += f.symbol();
      if (!f.terms().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
          if (i > 0) out += ',';
          out += to_string(f.terms()[i]);
        }
        out += ')';
      }
      break;
    case FormulaKind::kEq:
      out += to_string(f.lhs_term()) + " = " + to_string(f.rhs_term());
      break;
    case FormulaKind::kNot:
      out += '~';
      // ~x = c parses fine, but ~(x = c) reads better.
      print_formula(f.body(), f.body().is(FormulaKind::kEq) ? 7 : 5, out);
      break;
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      out += f.is(FormulaKind::kForall) ? "forall " : "exists ";
      out += f.var() + ". ";
      print_formula(f.body(), 5, out);
      break;
    case FormulaKind::kAnd:
      print_formula(f.left(), 4, out);
      out += " & ";
      print_formula(f.right(), 5, out);
      break;
    case FormulaKind::kOr:
      print_formula(f.left(), 3, out);
      out += " | ";
      print_formula(f.right(), 4, out);
      break;
    case FormulaKind::kImp:
      print_formula(f.left(), 3, out);
      out += " -> ";
      print_formula(f.right(), 2, out);
      break;
    case FormulaKind::kIff:
      print_formula(f.left(), 1, out);
      out += " <-> ";
      print_formula(f.right(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace detail

/// ASCII rendering in the input grammar, with the minimal parentheses the parser needs.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print_formula(f, 0, out);
  return out;
}

inline std::string to_string(const Question& q) { return "?" + to_string(q.body); }

inline std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << to_string(t); }

}  // namespace qa

#endif  // QA_SYNTAX_PRINTER_HPP
