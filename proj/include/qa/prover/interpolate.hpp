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

#ifndef QA_PROVER_INTERPOLATE_HPP
#define QA_PROVER_INTERPOLATE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qa/error.hpp"
#include "qa/prover/proof.hpp"
#include "qa/prover/prove.hpp"
#include "qa/syntax/simplify.hpp"
#include "qa/syntax/substitution.hpp"

namespace qa {

/// Interpolant of a ground refutation whose leaves are tagged left (A) or right (B).
/// Partial interpolants follow McMillan's system: an A-leaf contributes the
/// disjunction of its literals over atoms that also occur in B-leaves, a B-leaf
/// contributes true; resolving on an atom absent from B joins by disjunction,
/// any other pivot by conjunction.
inline Formula ground_interpolate(const Proof& p) {
  std::set<Formula> b_atoms;
  for (const auto& s : p.steps) {
    if (!s.parents.empty()) continue;
    if (s.side == Side::kNone) throw InputError("ground_interpolate: untagged input clause");
    if (s.side == Side::kRight) {
      for (const auto& l : s.clause) b_atoms.insert(l.atom);
    }
  }
  std::vector<Formula> part(p.steps.size(), Formula::top());
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const ProofStep& s = p.steps[i];
    for (const auto& u : s.unifiers) {
      if (!u.empty()) throw InputError("ground_interpolate: proof is not ground");
    }
    switch (s.rule) {
      case ProofRule::kInput:
      case ProofRule::kEqAxiom:
        if (s.side == Side::kLeft) {
          Formula d = Formula::bottom();
          for (const auto& l : s.clause) {
            if (b_atoms.count(l.atom)) d = mk_or(d, l.to_formula());
          }
          part[i] = d;
        }
        break;
      case ProofRule::kFactor:
        part[i] = part[static_cast<std::size_t>(s.parents[0])];
        break;
      case ProofRule::kResolve: {
        const Formula& a = part[static_cast<std::size_t>(s.parents[0])];
        const Formula& b = part[static_cast<std::size_t>(s.parents[1])];
        const Formula& pivot = p.steps[static_cast<std::size_t>(s.parents[0])].clause[static_cast<std::size_t>(s.pivots[0])].atom;
        part[i] = b_atoms.count(pivot) ? mk_and(a, b) : mk_or(a, b);
        break;
      }
    }
  }
  return part.at(static_cast<std::size_t>(p.root));
}

/// Symbols of ϑ outside `shared`; empty when the symbol condition holds.
inline std::set<std::string> unshared_symbols(const Formula& f, const std::set<std::string>& shared) {
  std::set<std::string> out;
  for (const auto& n : symbol_names(f)) {
    if (!shared.count(n)) out.insert(n);
  }
  return out;
}

namespace detail {

inline void maximal_unshared(const Term& t, const std::set<std::string>& shared, std::set<Term>& out) {
  if (t.is_var()) return;
  if (!shared.count(t.name())) {
    out.insert(t);
    return;
  }
  for (const Term& a : t.args()) maximal_unshared(a, shared, out);
}

inline void maximal_unshared(const Formula& f, const std::set<std::string>& shared, std::set<Term>& out) {
  for (const Term& t : f.terms()) maximal_unshared(t, shared, out);
  for (std::size_t i = 0; i < f.arity(); ++i) maximal_unshared(f.child(i), shared, out);
}

inline bool all_symbols_in(const Term& t, const std::set<std::string>& syms) {
  if (t.is_var()) return true;
  if (!syms.count(t.name())) return false;
  for (const Term& a : t.args()) {
    if (!all_symbols_in(a, syms)) return false;
  }
  return true;
}

}  // namespace detail

/// Lifts a ground interpolant whose terms mention symbols private to one side.
/// Each maximal term headed by an unshared function symbol becomes a variable,
/// existentially bound when its symbols are all left symbols and universally
/// otherwise. Both prefix orders are tried; the first one the prover confirms
/// (left entails ϑ, ϑ with right is refutable) is returned. Symbols in
/// `also_shared` are kept even when one side does not mention them.
inline std::optional<Formula> lift_interpolant(const Formula& theta, const std::vector<Formula>& left,
                                               const std::vector<Formula>& right, const Signature& sig,
                                               const ProveOptions& opts = {},
                                               const std::set<std::string>& also_shared = {}) {
  std::set<std::string> ls, rs;
  for (const auto& f : left) {
    for (const auto& n : symbol_names(f)) ls.insert(n);
  }
  for (const auto& f : right) {
    for (const auto& n : symbol_names(f)) rs.insert(n);
  }
  std::set<std::string> shared;
  std::set_intersection(ls.begin(), ls.end(), rs.begin(), rs.end(), std::inserter(shared, shared.end()));
  shared.insert(also_shared.begin(), also_shared.end());

  std::set<Term> found;
  detail::maximal_unshared(theta, shared, found);
  std::vector<Term> terms(found.begin(), found.end());
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    const std::string sa = to_string(a), sb = to_string(b);
    return sa.size() != sb.size() ? sa.size() < sb.size() : sa < sb;
  });
  std::set<std::string> used = all_variables(theta);
  Formula body = theta;
  std::vector<std::pair<std::string, bool>> binders;  // variable, existential
  for (const Term& t : terms) {
    const std::string v = fresh_variable("z", used);
    used.insert(v);
    body = replace_term(body, t, Term::var(v));
    binders.push_back({v, detail::all_symbols_in(t, ls)});
  }
  auto verified = [&](const Formula& f) {
    if (!unshared_symbols(f, shared).empty()) return false;
    if (prove({left, f, sig}, opts).status != ProofStatus::kProved) return false;
    std::vector<Formula> with = right;
    with.push_back(f);
    return prove({with, Formula::bottom(), sig}, opts).status == ProofStatus::kProved;
  };
  for (bool universal_outer : {true, false}) {
    std::vector<std::pair<std::string, bool>> order = binders;
    std::stable_partition(order.begin(), order.end(), [&](const auto& b) { return b.second != universal_outer; });
    Formula f = body;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      f = Formula::quantifier(it->second ? FormulaKind::kExists : FormulaKind::kForall, it->first, f);
    }
    if (verified(f)) return f;
    if (binders.empty()) break;
  }
  return std::nullopt;
}

}  // namespace qa

#endif  // QA_PROVER_INTERPOLATE_HPP
