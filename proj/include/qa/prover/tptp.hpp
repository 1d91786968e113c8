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

// TPTP FOF export. Binary connectives are always parenthesized, variables get
// a "V" prefix and functors outside [a-z][A-Za-z0-9_]* are single-quoted.

#ifndef QA_PROVER_TPTP_HPP
#define QA_PROVER_TPTP_HPP

#include <cctype>
#include <string>

#include "qa/prover/prove.hpp"
#include "qa/syntax/formula.hpp"

namespace qa {

inline std::string tptp_functor(const std::string& name) {
  bool plain = !name.empty() && name[0] >= 'a' && name[0] <= 'z';
  for (char ch : name) plain = plain && (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_');
  if (plain) return name;
  std::string out = "'";
  for (char ch : name) {
    if (ch == '\'' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "'";
}

inline std::string to_tptp(const Term& t) {
  if (t.is_var()) return "V" + t.name();
  std::string out = tptp_functor(t.name());
  if (t.args().empty()) return out;
  out += "(";
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ",";
    out += to_tptp(t.args()[i]);
  }
  return out + ")";
}

inline std::string to_tptp(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
      return "$true";
    case FormulaKind::kFalse:
      return "$false";
    case FormulaKind::kPred: {
      std::string out = tptp_functor(f.symbol());
      if (f.terms().empty()) return out;
      out += "(";
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) out += ",";
        out += to_tptp(f.terms()[i]);
      }
      return out + ")";
    }
    case FormulaKind::kEq:
      return "(" + to_tptp(f.lhs_term()) + " = " + to_tptp(f.rhs_term()) + ")";
    case FormulaKind::kNot:
      return "~ " + to_tptp(f.body());
    case FormulaKind::kAnd:
      return "(" + to_tptp(f.left()) + " & " + to_tptp(f.right()) + ")";
    case FormulaKind::kOr:
      return "(" + to_tptp(f.left()) + " | " + to_tptp(f.right()) + ")";
    case FormulaKind::kImp:
      return "(" + to_tptp(f.left()) + " => " + to_tptp(f.right()) + ")";
    case FormulaKind::kIff:
      return "(" + to_tptp(f.left()) + " <=> " + to_tptp(f.right()) + ")";
    case FormulaKind::kForall:
      return "(! [V" + f.var() + "] : " + to_tptp(f.body()) + ")";
    case FormulaKind::kExists:
      return "(? [V" + f.var() + "] : " + to_tptp(f.body()) + ")";
  }
  return "";
}

/// One fof line per premise (premise_1, ...) and the conclusion as `goal`.
inline std::string to_tptp(const FOSequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.premises.size(); ++i) {
    out += "fof(premise_" + std::to_string(i + 1) + ", axiom, " + to_tptp(s.premises[i]) + ").\n";
  }
  out += "fof(goal, conjecture, " + to_tptp(s.conclusion) + ").\n";
  return out;
}

}  // namespace qa

#endif  // QA_PROVER_TPTP_HPP
