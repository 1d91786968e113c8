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

#ifndef QA_SYNTAX_FORMULA_HPP
#define QA_SYNTAX_FORMULA_HPP

#include <cassert>
#include <compare>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qa/syntax/term.hpp"

namespace qa {

enum class FormulaKind { kTrue, kFalse, kPred, kEq, kNot, kAnd, kOr, kImp, kIff, kForall, kExists };

inline bool is_atomic(FormulaKind k) {
  return k == FormulaKind::kTrue || k == FormulaKind::kFalse || k == FormulaKind::kPred || k == FormulaKind::kEq;
}
inline bool is_binary(FormulaKind k) {
  return k == FormulaKind::kAnd || k == FormulaKind::kOr || k == FormulaKind::kImp || k == FormulaKind::kIff;
}
inline bool is_quantifier(FormulaKind k) { return k == FormulaKind::kForall || k == FormulaKind::kExists; }

/// Immutable first-order formula with equality. Copies share structure.
class Formula {
 public:
  Formula() : Formula(make(FormulaKind::kTrue, {}, {}, {})) {}

  static Formula top() { return make(FormulaKind::kTrue, {}, {}, {}); }
  static Formula bottom() { return make(FormulaKind::kFalse, {}, {}, {}); }
  static Formula pred(std::string symbol, std::vector<Term> args = {}) {
    return make(FormulaKind::kPred, std::move(symbol), std::move(args), {});
  }
  static Formula eq(Term lhs, Term rhs) { return make(FormulaKind::kEq, {}, {std::move(lhs), std::move(rhs)}, {}); }
  static Formula neg(Formula f) { return make(FormulaKind::kNot, {}, {}, {std::move(f)}); }
  static Formula conj(Formula a, Formula b) { return make(FormulaKind::kAnd, {}, {}, {std::move(a), std::move(b)}); }
  static Formula disj(Formula a, Formula b) { return make(FormulaKind::kOr, {}, {}, {std::move(a), std::move(b)}); }
  static Formula imp(Formula a, Formula b) { return make(FormulaKind::kImp, {}, {}, {std::move(a), std::move(b)}); }
  static Formula iff(Formula a, Formula b) { return make(FormulaKind::kIff, {}, {}, {std::move(a), std::move(b)}); }
  static Formula forall(std::string var, Formula body) {
    return make(FormulaKind::kForall, std::move(var), {}, {std::move(body)});
  }
  static Formula exists(std::string var, Formula body) {
    return make(FormulaKind::kExists, std::move(var), {}, {std::move(body)});
  }
  static Formula binary(FormulaKind k, Formula a, Formula b) {
    assert(is_binary(k));
    return make(k, {}, {}, {std::move(a), std::move(b)});
  }
  static Formula quantifier(FormulaKind k, std::string var, Formula body) {
    assert(is_quantifier(k));
    return make(k, std::move(var), {}, {std::move(body)});
  }

  /// Conjunction/disjunction of a list, left-nested; empty lists give true/false.
  static Formula conj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return top();
    Formula out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = conj(out, fs[i]);
    return out;
  }
  static Formula disj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return bottom();
    Formula out = fs.front();
    for (std::size_t i = 1; i < fs.size(); ++i) out = disj(out, fs[i]);
    return out;
  }
  static Formula forall_all(const std::vector<std::string>& vars, Formula body) {
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = forall(*it, std::move(body));
    return body;
  }

  FormulaKind kind() const { return node_->kind; }
  bool is(FormulaKind k) const { return node_->kind == k; }

  /// Predicate symbol (kPred) or bound variable (quantifiers).
  const std::string& symbol() const { return node_->name; }
  const std::string& var() const { return node_->name; }
  /// Arguments of a predicate, or the two sides of an identity.
  const std::vector<Term>& terms() const { return node_->terms; }
  const Term& lhs_term() const { return node_->terms[0]; }
  const Term& rhs_term() const { return node_->terms[1]; }

  const Formula& child(std::size_t i = 0) const { return node_->kids[i]; }
  const Formula& body() const { return node_->kids[0]; }
  const Formula& left() const { return node_->kids[0]; }
  const Formula& right() const { return node_->kids[1]; }
  std::size_t arity() const { return node_->kids.size(); }

  std::size_t hash() const { return node_->hash; }

  /// Number of formula nodes; an atom counts as one regardless of its terms.
  std::size_t size() const { return node_->size; }

  bool same_node(const Formula& o) const { return node_ == o.node_; }

  bool operator==(const Formula& o) const { return compare(o) == 0; }
  std::strong_ordering operator<=>(const Formula& o) const {
    const int c = compare(o);
    return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::vector<Term> terms;
    std::vector<Formula> kids;
    std::size_t hash = 0;
    std::size_t size = 1;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Formula make(FormulaKind kind, std::string name, std::vector<Term> terms, std::vector<Formula> kids) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->name = std::move(name);
    n->terms = std::move(terms);
    n->kids = std::move(kids);
    std::size_t h = static_cast<std::size_t>(kind) * 0x9e3779b97f4a7c15ULL ^ std::hash<std::string>()(n->name);
    for (const Term& t : n->terms) h = h * 1099511628211ULL ^ t.hash();
    for (const Formula& k : n->kids) {
      h = h * 1099511628211ULL ^ k.hash();
      n->size += k.size();
    }
    n->hash = h;
    return Formula(std::move(n));
  }

  int compare(const Formula& o) const {
    if (node_ == o.node_) return 0;
    const Node& a = *node_;
    const Node& b = *o.node_;
    if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
    if (int c = a.name.compare(b.name); c != 0) return c < 0 ? -1 : 1;
    if (a.terms != b.terms) return a.terms < b.terms ? -1 : 1;
    if (a.kids.size() != b.kids.size()) return a.kids.size() < b.kids.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.kids.size(); ++i) {
      if (int c = a.kids[i].compare(b.kids[i]); c != 0) return c;
    }
    return 0;
  }

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// A question ?phi; free variables of the body are its abstracted positions.
struct Question {
  Formula body;

  bool operator==(const Question&) const = default;
};

using QuestionSet = std::vector<Question>;

// --- variable bookkeeping -------------------------------------------------

inline void collect_term_vars(const Term& t, std::vector<std::string>& out, std::set<std::string>& seen) {
  if (t.is_var()) {
    if (seen.insert(t.name()).second) out.push_back(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_term_vars(a, out, seen);
}

namespace detail {

inline void free_vars_rec(const Formula& f, std::vector<std::string>& bound, std::vector<std::string>& out,
                          std::set<std::string>& seen) {
  auto visit_term = [&](const Term& t, auto&& self) -> void {
    if (t.is_var()) {
      for (const auto& b : bound) {
        if (b == t.name()) return;
      }
      if (seen.insert(t.name()).second) out.push_back(t.name());
      return;
    }
    for (const Term& a : t.args()) self(a, self);
  };
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
      return;
    case FormulaKind::kPred:
    case FormulaKind::kEq:
      for (const Term& t : f.terms()) visit_term(t, visit_term);
      return;
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      bound.push_back(f.var());
      free_vars_rec(f.body(), bound, out, seen);
      bound.pop_back();
      return;
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) free_vars_rec(f.child(i), bound, out, seen);
      return;
  }
}

}  // namespace detail

/// Free variables in order of first occurrence, left to right.
inline std::vector<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  std::set<std::string> seen;
  detail::free_vars_rec(f, bound, out, seen);
  return out;
}

inline bool is_closed(const Formula& f) { return free_variables(f).empty(); }

inline std::vector<std::string> term_variables(const Term& t) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  collect_term_vars(t, out, seen);
  return out;
}

/// Every variable name occurring in f, free or bound (including binder names).
inline std::set<std::string> all_variables(const Formula& f) {
  std::set<std::string> out;
  auto rec = [&](const Formula& g, auto&& self) -> void {
    if (is_quantifier(g.kind())) out.insert(g.var());
    for (const Term& t : g.terms()) {
      for_each_subterm(t, [&](const Term& s) {
        if (s.is_var()) out.insert(s.name());
      });
    }
    for (std::size_t i = 0; i < g.arity(); ++i) self(g.child(i), self);
  };
  rec(f, rec);
  return out;
}

/// Function symbols occurring in f (name -> arity).
inline void collect_functions(const Term& t, std::set<std::pair<std::string, int>>& out) {
  for_each_subterm(t, [&](const Term& s) {
    if (s.is_app()) out.insert({s.name(), static_cast<int>(s.args().size())});
  });
}

inline void collect_symbols(const Formula& f, std::set<std::pair<std::string, int>>& preds,
                            std::set<std::pair<std::string, int>>& funcs) {
  if (f.is(FormulaKind::kPred)) preds.insert({f.symbol(), static_cast<int>(f.terms().size())});
  for (const Term& t : f.terms()) collect_functions(t, funcs);
  for (std::size_t i = 0; i < f.arity(); ++i) collect_symbols(f.child(i), preds, funcs);
}

/// Non-logical symbol names (predicates and functions) occurring in f.
inline std::set<std::string> symbol_names(const Formula& f) {
  std::set<std::pair<std::string, int>> preds, funcs;
  collect_symbols(f, preds, funcs);
  std::set<std::string> out;
  for (const auto& p : preds) out.insert(p.first);
  for (const auto& p : funcs) out.insert(p.first);
  return out;
}

inline bool contains_quantifier(const Formula& f) {
  if (is_quantifier(f.kind())) return true;
  for (std::size_t i = 0; i < f.arity(); ++i) {
    if (contains_quantifier(f.child(i))) return true;
  }
  return false;
}

}  // namespace qa

#endif  // QA_SYNTAX_FORMULA_HPP
