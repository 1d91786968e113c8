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

#ifndef QA_SYNTAX_SIMPLIFY_HPP
#define QA_SYNTAX_SIMPLIFY_HPP

#include "qa/syntax/formula.hpp"

namespace qa {

// Constructors that fold truth constants on the spot.

inline Formula mk_not(const Formula& a) {
  if (a.is(FormulaKind::kTrue)) return Formula::bottom();
  if (a.is(FormulaKind::kFalse)) return Formula::top();
  if (a.is(FormulaKind::kNot)) return a.body();
  return Formula::neg(a);
}

inline Formula mk_and(const Formula& a, const Formula& b) {
  if (a.is(FormulaKind::kFalse) || b.is(FormulaKind::kFalse)) return Formula::bottom();
  if (a.is(FormulaKind::kTrue)) return b;
  if (b.is(FormulaKind::kTrue)) return a;
  if (a == b) return a;
  return Formula::conj(a, b);
}

inline Formula mk_or(const Formula& a, const Formula& b) {
  if (a.is(FormulaKind::kTrue) || b.is(FormulaKind::kTrue)) return Formula::top();
  if (a.is(FormulaKind::kFalse)) return b;
  if (b.is(FormulaKind::kFalse)) return a;
  if (a == b) return a;
  return Formula::disj(a, b);
}

inline Formula mk_imp(const Formula& a, const Formula& b) {
  if (a.is(FormulaKind::kFalse) || b.is(FormulaKind::kTrue)) return Formula::top();
  if (a.is(FormulaKind::kTrue)) return b;
  if (b.is(FormulaKind::kFalse)) return mk_not(a);
  return Formula::imp(a, b);
}

inline Formula mk_iff(const Formula& a, const Formula& b) {
  if (a.is(FormulaKind::kTrue)) return b;
  if (b.is(FormulaKind::kTrue)) return a;
  if (a.is(FormulaKind::kFalse)) return mk_not(b);
  if (b.is(FormulaKind::kFalse)) return mk_not(a);
  if (a == b) return Formula::top();
  return Formula::iff(a, b);
}

/// Quantifiers over a body that does not mention the variable are dropped
/// (domains are nonempty).
inline Formula mk_quantifier(FormulaKind k, const std::string& var, const Formula& body) {
  if (body.is(FormulaKind::kTrue) || body.is(FormulaKind::kFalse)) return body;
  for (const auto& v : free_variables(body)) {
    if (v == var) return Formula::quantifier(k, var, body);
  }
  return body;
}

/// Bottom-up constant folding, double-negation elimination and vacuous-quantifier removal.
inline Formula simplify(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
    case FormulaKind::kPred:
      return f;
    case FormulaKind::kEq:
      return f.lhs_term() == f.rhs_term() ? Formula::top() : f;
    case FormulaKind::kNot:
      return mk_not(simplify(f.body()));
    case FormulaKind::kAnd:
      return mk_and(simplify(f.left()), simplify(f.right()));
    case FormulaKind::kOr:
      return mk_or(simplify(f.left()), simplify(f.right()));
    case FormulaKind::kImp:
      return mk_imp(simplify(f.left()), simplify(f.right()));
    case FormulaKind::kIff:
      return mk_iff(simplify(f.left()), simplify(f.right()));
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return mk_quantifier(f.kind(), f.var(), simplify(f.body()));
  }
  return f;
}

}  // namespace qa

#endif  // QA_SYNTAX_SIMPLIFY_HPP
