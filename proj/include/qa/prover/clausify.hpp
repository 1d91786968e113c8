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

#ifndef QA_PROVER_CLAUSIFY_HPP
#define QA_PROVER_CLAUSIFY_HPP

#include <string>
#include <vector>

#include "qa/error.hpp"
#include "qa/prover/clause.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/signature.hpp"
#include "qa/syntax/simplify.hpp"
#include "qa/syntax/substitution.hpp"

namespace qa {

/// Negation normal form: only literals, conjunction, disjunction and quantifiers
/// remain; truth constants are folded away except at the root.
inline Formula nnf(const Formula& f, bool positive = true) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
      return positive ? Formula::top() : Formula::bottom();
    case FormulaKind::kFalse:
      return positive ? Formula::bottom() : Formula::top();
    case FormulaKind::kPred:
    case FormulaKind::kEq:
      return positive ? f : Formula::neg(f);
    case FormulaKind::kNot:
      return nnf(f.body(), !positive);
    case FormulaKind::kAnd:
      return positive ? mk_and(nnf(f.left(), true), nnf(f.right(), true))
                      : mk_or(nnf(f.left(), false), nnf(f.right(), false));
    case FormulaKind::kOr:
      return positive ? mk_or(nnf(f.left(), true), nnf(f.right(), true))
                      : mk_and(nnf(f.left(), false), nnf(f.right(), false));
    case FormulaKind::kImp:
      return positive ? mk_or(nnf(f.left(), false), nnf(f.right(), true))
                      : mk_and(nnf(f.left(), true), nnf(f.right(), false));
    case FormulaKind::kIff:
      // a <-> b  ==  (~a | b) & (a | ~b);   ~(a <-> b)  ==  (a | b) & (~a | ~b)
      if (positive) {
        return mk_and(mk_or(nnf(f.left(), false), nnf(f.right(), true)),
                      mk_or(nnf(f.left(), true), nnf(f.right(), false)));
      }
      return mk_and(mk_or(nnf(f.left(), true), nnf(f.right(), true)),
                    mk_or(nnf(f.left(), false), nnf(f.right(), false)));
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      const bool universal = f.is(FormulaKind::kForall) == positive;
      return mk_quantifier(universal ? FormulaKind::kForall : FormulaKind::kExists, f.var(), nnf(f.body(), positive));
    }
  }
  return f;
}

/// Clausal form with Skolemization and definitional naming of large products.
/// One Clausifier shared across a problem keeps Skolem and definition names
/// distinct; the symbols it introduces are recorded in introduced().
class Clausifier {
 public:
  static constexpr std::size_t kProductLimit = 256;

  explicit Clausifier(std::string skolem_prefix = "__sk", std::string definition_prefix = "__d")
      : sk_prefix_(std::move(skolem_prefix)), def_prefix_(std::move(definition_prefix)) {}

  std::vector<Clause> clausify(const Formula& f) {
    if (!is_closed(f)) throw InputError("clausify expects a closed formula");
    Formula g = rename_apart(nnf(f));
    g = skolemize(g);
    std::vector<Clause> raw = cnf(g);
    raw.insert(raw.end(), pending_.begin(), pending_.end());
    pending_.clear();
    std::vector<Clause> out;
    for (auto& c : raw) {
      Clause s = as_set(std::move(c));
      if (!is_tautology(s)) out.push_back(std::move(s));
    }
    return out;
  }

  const Signature& introduced() const { return introduced_; }

 private:
  Formula rename_apart(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        const std::string v = "V" + std::to_string(next_var_++);
        const Formula body = substitute(f.body(), {{f.var(), Term::var(v)}});
        return Formula::quantifier(f.kind(), v, rename_apart(body));
      }
      case FormulaKind::kNot:
        return Formula::neg(rename_apart(f.body()));
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        return Formula::binary(f.kind(), rename_apart(f.left()), rename_apart(f.right()));
      default:
        return f;
    }
  }

  /// Existentials become Skolem terms over the free variables of the existential
  /// subformula; universals are dropped since every binder is already unique.
  Formula skolemize(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kExists: {
        std::vector<Term> args;
        for (const auto& v : free_variables(f)) args.push_back(Term::var(v));
        const std::string name = sk_prefix_ + std::to_string(next_sk_++);
        introduced_.add_function(name, static_cast<int>(args.size()), false);
        return skolemize(substitute(f.body(), {{f.var(), Term::app(name, std::move(args))}}));
      }
      case FormulaKind::kForall:
        return skolemize(f.body());
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        return Formula::binary(f.kind(), skolemize(f.left()), skolemize(f.right()));
      default:
        return f;
    }
  }

  std::vector<Clause> cnf(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kTrue:
        return {};
      case FormulaKind::kFalse:
        return {Clause{}};
      case FormulaKind::kPred:
      case FormulaKind::kEq:
        return {Clause{{false, f}}};
      case FormulaKind::kNot:
        return {Clause{{true, f.body()}}};
      case FormulaKind::kAnd: {
        std::vector<Clause> a = cnf(f.left());
        std::vector<Clause> b = cnf(f.right());
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }
      case FormulaKind::kOr: {
        std::vector<Clause> a = cnf(f.left());
        std::vector<Clause> b = cnf(f.right());
        if (a.size() * b.size() > kProductLimit) {
          if (a.size() >= b.size()) {
            a = name(f.left(), a);
          } else {
            b = name(f.right(), b);
          }
        }
        std::vector<Clause> out;
        for (const auto& x : a) {
          for (const auto& y : b) {
            Clause c = x;
            c.insert(c.end(), y.begin(), y.end());
            out.push_back(std::move(c));
          }
        }
        return out;
      }
      default:
        throw InternalError("cnf: unexpected connective");
    }
  }

  /// Replaces a subformula (in clausal form) by a fresh atom d(x) with d(x) -> subformula.
  std::vector<Clause> name(const Formula& sub, std::vector<Clause>& clauses) {
    std::vector<Term> args;
    for (const auto& v : free_variables(sub)) args.push_back(Term::var(v));
    const std::string d = def_prefix_ + std::to_string(next_def_++);
    introduced_.add_predicate(d, static_cast<int>(args.size()));
    const Formula atom = Formula::pred(d, args);
    for (auto& c : clauses) {
      c.insert(c.begin(), Literal{true, atom});
      pending_.push_back(c);
    }
    return {Clause{{false, atom}}};
  }

  std::string sk_prefix_;
  std::string def_prefix_;
  int next_sk_ = 0;
  int next_def_ = 0;
  int next_var_ = 0;
  Signature introduced_;
  std::vector<Clause> pending_;
};

/// Clauses of one closed formula, definitions included.
inline std::vector<Clause> clausify(const Formula& f) { return Clausifier().clausify(f); }

}  // namespace qa

#endif  // QA_PROVER_CLAUSIFY_HPP
