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

#ifndef QA_SYNTAX_PRIMING_HPP
#define QA_SYNTAX_PRIMING_HPP

#include <string>
#include <vector>

#include "qa/error.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/signature.hpp"

namespace qa {

/// The signature extended with a primed copy of every predicate and every non-rigid function.
inline Signature primed_signature(const Signature& sig) {
  Signature out = sig;
  for (const auto& [name, arity] : sig.predicates()) {
    if (is_primed_name(name)) throw InputError("signature already contains primed symbol '" + name + "'");
    out.add_predicate(primed(name), arity);
  }
  for (const auto& [name, info] : sig.functions()) {
    if (is_primed_name(name)) throw InputError("signature already contains primed symbol '" + name + "'");
    if (!info.rigid) out.add_function(primed(name), info.arity, false);
  }
  return out;
}

namespace detail {

template <typename Rename>
Term rename_functions(const Term& t, const Rename& rename) {
  if (t.is_var()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(rename_functions(a, rename));
  return Term::app(rename(t.name(), false), std::move(args));
}

/// Applies rename(name, is_predicate) to every non-logical symbol.
template <typename Rename>
Formula rename_symbols(const Formula& f, const Rename& rename) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
      return f;
    case FormulaKind::kPred: {
      std::vector<Term> args;
      for (const Term& t : f.terms()) args.push_back(rename_functions(t, rename));
      return Formula::pred(rename(f.symbol(), true), std::move(args));
    }
    case FormulaKind::kEq:
      return Formula::eq(rename_functions(f.lhs_term(), rename), rename_functions(f.rhs_term(), rename));
    case FormulaKind::kNot:
      return Formula::neg(rename_symbols(f.body(), rename));
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return Formula::quantifier(f.kind(), f.var(), rename_symbols(f.body(), rename));
    default:
      return Formula::binary(f.kind(), rename_symbols(f.left(), rename), rename_symbols(f.right(), rename));
  }
}

}  // namespace detail

/// phi*: every predicate and every non-rigid function symbol replaced by its primed copy.
/// Rigid functions, variables and the logical structure are unchanged.
inline Formula prime(const Formula& f, const Signature& sig) {
  return detail::rename_symbols(f, [&](const std::string& name, bool is_pred) {
    if (is_primed_name(name)) throw InputError("formula already contains primed symbol '" + name + "'");
    if (is_pred) return primed(name);
    return sig.is_rigid_function(name) ? name : primed(name);
  });
}

/// Strips primes from every symbol; a left inverse of prime().
inline Formula unprime(const Formula& f) {
  return detail::rename_symbols(f, [](const std::string& name, bool) { return unprimed(name); });
}

/// ?phi# = forall x1 ... forall xn (phi <-> phi*), over the free variables of phi in order.
inline Formula sharp(const Question& q, const Signature& sig) {
  return Formula::forall_all(free_variables(q.body), Formula::iff(q.body, prime(q.body, sig)));
}

}  // namespace qa

#endif  // QA_SYNTAX_PRIMING_HPP
