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

// Herbrand instantiation. Strong quantifiers (existential at positive
// polarity, universal at negative) become Skolem terms; weak ones are expanded
// into finite conjunctions or disjunctions over a term universe.

#ifndef QA_PROVER_HERBRAND_HPP
#define QA_PROVER_HERBRAND_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "qa/error.hpp"
#include "qa/prover/clause.hpp"
#include "qa/prover/prove.hpp"
#include "qa/prover/refutation.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/signature.hpp"
#include "qa/syntax/substitution.hpp"

namespace qa {

class Grounder {
 public:
  explicit Grounder(std::string skolem_prefix = "__hk") : prefix_(std::move(skolem_prefix)) {}

  /// Replaces strong quantifiers by Skolem terms. `positive` is the polarity of f
  /// in the refuted set: true for premises, false for a conclusion.
  Formula skolemize(const Formula& f, bool positive) {
    switch (f.kind()) {
      case FormulaKind::kNot:
        return Formula::neg(skolemize(f.body(), !positive));
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        return Formula::binary(f.kind(), skolemize(f.left(), positive), skolemize(f.right(), positive));
      case FormulaKind::kImp:
        return Formula::imp(skolemize(f.left(), !positive), skolemize(f.right(), positive));
      case FormulaKind::kIff:
        if (!contains_quantifier(f)) return f;
        return skolemize(Formula::conj(Formula::imp(f.left(), f.right()), Formula::imp(f.right(), f.left())), positive);
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        if (f.is(FormulaKind::kForall) == positive) return Formula::quantifier(f.kind(), f.var(), skolemize(f.body(), positive));
        std::vector<Term> args;
        for (const auto& v : free_variables(f)) args.push_back(Term::var(v));
        const std::string name = prefix_ + std::to_string(next_++);
        introduced_.add_function(name, static_cast<int>(args.size()), false);
        return skolemize(substitute(f.body(), {{f.var(), Term::app(name, std::move(args))}}), positive);
      }
      default:
        return f;
    }
  }

  /// Expands the remaining (weak) quantifiers of a Skolemized formula over `universe`.
  static Formula expand(const Formula& f, bool positive, const std::vector<Term>& universe) {
    switch (f.kind()) {
      case FormulaKind::kNot:
        return Formula::neg(expand(f.body(), !positive, universe));
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        return Formula::binary(f.kind(), expand(f.left(), positive, universe), expand(f.right(), positive, universe));
      case FormulaKind::kImp:
        return Formula::imp(expand(f.left(), !positive, universe), expand(f.right(), positive, universe));
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        if (universe.empty()) throw InputError("herbrand_ground: empty term pool with quantifiers present");
        std::vector<Formula> parts;
        for (const Term& t : universe) parts.push_back(expand(substitute(f.body(), {{f.var(), t}}), positive, universe));
        return f.is(FormulaKind::kForall) ? Formula::conj_all(parts) : Formula::disj_all(parts);
      }
      default:
        return f;
    }
  }

  const Signature& introduced() const { return introduced_; }

 private:
  std::string prefix_;
  int next_ = 0;
  Signature introduced_;
};

namespace detail {

inline void ground_subterms(const Term& t, std::set<Term>& out) {
  if (!term_variables(t).empty()) {
    for (const Term& a : t.args()) ground_subterms(a, out);
    return;
  }
  out.insert(t);
  for (const Term& a : t.args()) ground_subterms(a, out);
}

inline void ground_subterms(const Formula& f, std::set<Term>& out) {
  for (const Term& t : f.terms()) ground_subterms(t, out);
  for (std::size_t i = 0; i < f.arity(); ++i) ground_subterms(f.child(i), out);
}

}  // namespace detail

/// Pool plus the constants of the formulas, closed `depth` times under their
/// function symbols. Ordered by size, then by printed form.
inline std::vector<Term> herbrand_universe(const std::vector<Formula>& fs, const std::vector<Term>& pool, int depth) {
  std::set<std::pair<std::string, int>> preds, funcs;
  for (const auto& f : fs) collect_symbols(f, preds, funcs);
  std::set<Term> level(pool.begin(), pool.end());
  for (const auto& [name, arity] : funcs) {
    if (arity == 0) level.insert(Term::app(name));
  }
  std::set<Term> all = level;
  for (int d = 0; d < depth; ++d) {
    std::set<Term> next;
    const std::vector<Term> known(all.begin(), all.end());
    for (const auto& [name, arity] : funcs) {
      if (arity == 0) continue;
      std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
      while (true) {
        std::vector<Term> args;
        for (std::size_t i : idx) args.push_back(known[i]);
        Term t = Term::app(name, std::move(args));
        if (!all.count(t)) next.insert(std::move(t));
        std::size_t k = idx.size();
        for (; k > 0; --k) {
          if (++idx[k - 1] < known.size()) break;
          idx[k - 1] = 0;
        }
        if (k == 0) break;
      }
    }
    if (next.empty()) break;
    all.insert(next.begin(), next.end());
  }
  std::vector<Term> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
    const std::string sa = to_string(a), sb = to_string(b);
    return sa.size() != sb.size() ? sa.size() < sb.size() : sa < sb;
  });
  return out;
}

/// Ground sequent whose validity implies the validity of s. Skolem symbols are
/// added to the returned signature; the universe is pool plus the constants of s
/// closed to `depth` under its function symbols.
inline FOSequent herbrand_ground(const FOSequent& s, const std::vector<Term>& pool, int depth) {
  if (depth < 0) throw InputError("herbrand_ground: depth must be non-negative");
  Grounder g;
  std::vector<Formula> premises;
  for (const auto& p : s.premises) premises.push_back(g.skolemize(p, true));
  const Formula conclusion = g.skolemize(s.conclusion, false);
  std::vector<Formula> all = premises;
  all.push_back(conclusion);
  const std::vector<Term> universe = herbrand_universe(all, pool, depth);
  FOSequent out;
  out.signature = s.signature;
  for (const auto& [name, info] : g.introduced().functions()) out.signature.add_function(name, info.arity, false);
  for (const auto& p : premises) out.premises.push_back(Grounder::expand(p, true, universe));
  out.conclusion = Grounder::expand(conclusion, false, universe);
  return out;
}

/// Symbols (predicates and functions) of a clause set, identity excluded.
inline std::set<std::string> clause_symbols(const std::vector<Clause>& cs) {
  std::set<std::string> out;
  for (const auto& c : cs) {
    for (const auto& l : c) {
      for (const auto& n : symbol_names(l.atom)) out.insert(n);
    }
  }
  return out;
}

/// Ground instances of the identity axioms over the terms occurring in the
/// clauses. An instance goes to the left when its symbols are all left symbols,
/// to the right when they are all right symbols, and is dropped otherwise.
inline std::vector<InputClause> ground_equality_instances(const std::vector<Clause>& left, const std::vector<Clause>& right) {
  std::vector<Clause> both = left;
  both.insert(both.end(), right.begin(), right.end());
  bool uses_eq = false;
  std::set<Term> term_set;
  std::vector<Formula> atoms;
  for (const auto& c : both) {
    for (const auto& l : c) {
      uses_eq = uses_eq || l.atom.is(FormulaKind::kEq);
      detail::ground_subterms(l.atom, term_set);
      if (l.atom.is(FormulaKind::kPred) && !l.atom.terms().empty()) atoms.push_back(l.atom);
    }
  }
  std::vector<InputClause> out;
  if (!uses_eq) return out;
  const std::set<std::string> ls = clause_symbols(left), rs = clause_symbols(right);
  auto emit = [&](Clause c, bool reflexivity = false) {
    const std::set<std::string> syms = clause_symbols({c});
    const bool in_left = std::includes(ls.begin(), ls.end(), syms.begin(), syms.end());
    const bool in_right = std::includes(rs.begin(), rs.end(), syms.begin(), syms.end());
    if (!in_left && !in_right) return;
    Clause s = as_set(std::move(c));
    if (!reflexivity && is_tautology(s)) return;
    out.push_back({std::move(s), ProofRule::kEqAxiom, in_left ? Side::kLeft : Side::kRight});
  };
  const std::vector<Term> terms(term_set.begin(), term_set.end());
  auto eq = [](const Term& a, const Term& b) { return Formula::eq(a, b); };
  for (const auto& a : terms) {
    emit({{false, eq(a, a)}}, true);
    for (const auto& b : terms) {
      if (a == b) continue;
      emit({{true, eq(a, b)}, {false, eq(b, a)}});
      for (const auto& c : terms) {
        if (c == a || c == b) continue;
        emit({{true, eq(a, b)}, {true, eq(b, c)}, {false, eq(a, c)}});
      }
    }
  }
  auto congruent = [&](const std::vector<Term>& xs, const std::vector<Term>& ys, Clause c) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] != ys[i]) c.push_back({true, eq(xs[i], ys[i])});
    }
    emit(std::move(c));
  };
  for (const auto& s : terms) {
    for (const auto& t : terms) {
      if (s == t || !s.is_app() || !t.is_app() || s.name() != t.name() || s.args().empty()) continue;
      congruent(s.args(), t.args(), {{false, eq(s, t)}});
    }
  }
  for (const auto& p : atoms) {
    for (const auto& q : atoms) {
      if (p == q || p.symbol() != q.symbol()) continue;
      congruent(p.terms(), q.terms(), {{true, p}, {false, q}});
    }
  }
  return out;
}

}  // namespace qa

#endif  // QA_PROVER_HERBRAND_HPP
