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

#ifndef QA_PROVER_CLAUSE_HPP
#define QA_PROVER_CLAUSE_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "qa/syntax/formula.hpp"
#include "qa/syntax/printer.hpp"
#include "qa/syntax/substitution.hpp"

namespace qa {

/// Signed atom; the atom is a predicate application or an identity.
struct Literal {
  bool negative = false;
  Formula atom;

  Literal complement() const { return {!negative, atom}; }
  Formula to_formula() const { return negative ? Formula::neg(atom) : atom; }

  bool operator==(const Literal&) const = default;
  auto operator<=>(const Literal& o) const {
    if (auto c = atom <=> o.atom; c != 0) return c;
    return negative <=> o.negative;
  }
};

/// Disjunction of literals; the empty clause is falsum.
using Clause = std::vector<Literal>;

/// Which side of an interpolation split a clause comes from.
enum class Side { kNone, kLeft, kRight };

inline const char* side_name(Side s) {
  switch (s) {
    case Side::kLeft:
      return "left";
    case Side::kRight:
      return "right";
    default:
      return "none";
  }
}

inline std::string to_string(const Literal& l) {
  if (!l.negative) return to_string(l.atom);
  if (l.atom.is(FormulaKind::kEq)) return "~(" + to_string(l.atom) + ")";
  return "~" + to_string(l.atom);
}

inline std::string to_string(const Clause& c) {
  if (c.empty()) return "$false";
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += to_string(c[i]);
  }
  return out;
}

/// Sorted, duplicate-free copy.
inline Clause as_set(Clause c) {
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  return c;
}

inline bool is_tautology(const Clause& c) {
  for (const auto& l : c) {
    if (!l.negative && l.atom.is(FormulaKind::kEq) && l.atom.lhs_term() == l.atom.rhs_term()) return true;
    for (const auto& k : c) {
      if (k.negative != l.negative && k.atom == l.atom) return true;
    }
  }
  return false;
}

inline Literal apply(const Literal& l, const Substitution& s) { return {l.negative, substitute(l.atom, s)}; }

inline Clause apply(const Clause& c, const Substitution& s) {
  Clause out;
  out.reserve(c.size());
  for (const auto& l : c) out.push_back(apply(l, s));
  return out;
}

inline std::vector<std::string> clause_variables(const Clause& c) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& l : c) {
    for (const auto& v : free_variables(l.atom)) {
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  return out;
}

inline Formula clause_formula(const Clause& c) {
  std::vector<Formula> lits;
  for (const auto& l : c) lits.push_back(l.to_formula());
  return Formula::forall_all(clause_variables(c), Formula::disj_all(lits));
}

}  // namespace qa

#endif  // QA_PROVER_CLAUSE_HPP
