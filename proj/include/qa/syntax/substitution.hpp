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

#ifndef QA_SYNTAX_SUBSTITUTION_HPP
#define QA_SYNTAX_SUBSTITUTION_HPP

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qa/syntax/formula.hpp"

namespace qa {

/// Finite map from variable names to terms, applied simultaneously.
using Substitution = std::map<std::string, Term>;

inline Term apply(const Term& t, const Substitution& s) {
  if (t.is_var()) {
    auto it = s.find(t.name());
    return it == s.end() ? t : it->second;
  }
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply(a, s));
  return Term::app(t.name(), std::move(args));
}

/// base + smallest numeric suffix not in `used`; the base is the name without trailing digits.
inline std::string fresh_variable(const std::string& name, const std::set<std::string>& used) {
  std::string base = name;
  while (!base.empty() && std::isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
  if (base.empty()) base = "v";
  for (int i = 0;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!used.count(candidate)) return candidate;
  }
}

namespace detail {

inline bool occurs_free(const std::string& v, const Formula& f) {
  for (const auto& x : free_variables(f)) {
    if (x == v) return true;
  }
  return false;
}

}  // namespace detail

/// Capture-avoiding simultaneous substitution. A bound variable is renamed only when
/// a substituted term would otherwise be captured by it.
inline Formula substitute(const Formula& f, const Substitution& s) {
  if (s.empty()) return f;
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
      return f;
    case FormulaKind::kPred: {
      std::vector<Term> args;
      for (const Term& t : f.terms()) args.push_back(apply(t, s));
      return Formula::pred(f.symbol(), std::move(args));
    }
    case FormulaKind::kEq:
      return Formula::eq(apply(f.lhs_term(), s), apply(f.rhs_term(), s));
    case FormulaKind::kNot:
      return Formula::neg(substitute(f.body(), s));
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
    case FormulaKind::kImp:
    case FormulaKind::kIff:
      return Formula::binary(f.kind(), substitute(f.left(), s), substitute(f.right(), s));
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      const std::string& x = f.var();
      Substitution inner;
      for (const auto& [v, t] : s) {
        if (v != x && detail::occurs_free(v, f.body())) inner.emplace(v, t);
      }
      if (inner.empty()) return f;
      bool captured = false;
      for (const auto& [v, t] : inner) {
        for (const auto& tv : term_variables(t)) captured = captured || tv == x;
      }
      if (!captured) return Formula::quantifier(f.kind(), x, substitute(f.body(), inner));
      std::set<std::string> used = all_variables(f.body());
      for (const auto& [v, t] : inner) {
        used.insert(v);
        for (const auto& tv : term_variables(t)) used.insert(tv);
      }
      const std::string renamed = fresh_variable(x, used);
      inner.emplace(x, Term::var(renamed));
      return Formula::quantifier(f.kind(), renamed, substitute(f.body(), inner));
    }
  }
  return f;
}

/// Canonical bound-variable naming (%0, %1, ... in binder order). Free variables are untouched;
/// '%' never occurs in user identifiers so canonical names cannot clash with them.
inline Formula alpha_normalize(const Formula& f) {
  int counter = 0;
  auto rec = [&](const Formula& g, const Substitution& env, auto&& self) -> Formula {
    switch (g.kind()) {
      case FormulaKind::kTrue:
      case FormulaKind::kFalse:
        return g;
      case FormulaKind::kPred: {
        std::vector<Term> args;
        for (const Term& t : g.terms()) args.push_back(apply(t, env));
        return Formula::pred(g.symbol(), std::move(args));
      }
      case FormulaKind::kEq:
        return Formula::eq(apply(g.lhs_term(), env), apply(g.rhs_term(), env));
      case FormulaKind::kNot:
        return Formula::neg(self(g.body(), env, self));
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        const std::string canon = "%" + std::to_string(counter++);
        Substitution inner = env;
        inner[g.var()] = Term::var(canon);
        return Formula::quantifier(g.kind(), canon, self(g.body(), inner, self));
      }
      default: {
        Formula a = self(g.left(), env, self);
        Formula b = self(g.right(), env, self);
        return Formula::binary(g.kind(), a, b);
      }
    }
  };
  return rec(f, Substitution{}, rec);
}

inline bool alpha_equivalent(const Formula& a, const Formula& b) { return alpha_normalize(a) == alpha_normalize(b); }

/// Replace every occurrence of the term `from` (typically a constant) by `to`,
/// renaming binders that would capture variables of `to`.
inline Formula replace_term(const Formula& f, const Term& from, const Term& to) {
  auto rt = [&](const Term& t, auto&& self) -> Term {
    if (t == from) return to;
    if (t.args().empty()) return t;
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(self(a, self));
    return Term::app(t.name(), std::move(args));
  };
  const std::vector<std::string> to_vars = term_variables(to);
  auto rec = [&](const Formula& g, auto&& self) -> Formula {
    switch (g.kind()) {
      case FormulaKind::kTrue:
      case FormulaKind::kFalse:
        return g;
      case FormulaKind::kPred: {
        std::vector<Term> args;
        for (const Term& t : g.terms()) args.push_back(rt(t, rt));
        return Formula::pred(g.symbol(), std::move(args));
      }
      case FormulaKind::kEq:
        return Formula::eq(rt(g.lhs_term(), rt), rt(g.rhs_term(), rt));
      case FormulaKind::kNot:
        return Formula::neg(self(g.body(), self));
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        bool clash = false;
        for (const auto& v : to_vars) clash = clash || v == g.var();
        if (!clash) return Formula::quantifier(g.kind(), g.var(), self(g.body(), self));
        std::set<std::string> used = all_variables(g.body());
        used.insert(to_vars.begin(), to_vars.end());
        const std::string renamed = fresh_variable(g.var(), used);
        Formula body = substitute(g.body(), Substitution{{g.var(), Term::var(renamed)}});
        return Formula::quantifier(g.kind(), renamed, self(body, self));
      }
      default:
        return Formula::binary(g.kind(), self(g.left(), self), self(g.right(), self));
    }
  };
  return rec(f, rec);
}

}  // namespace qa

#endif  // QA_SYNTAX_SUBSTITUTION_HPP
