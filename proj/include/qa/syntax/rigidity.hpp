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

#ifndef QA_SYNTAX_RIGIDITY_HPP
#define QA_SYNTAX_RIGIDITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qa/syntax/formula.hpp"
#include "qa/syntax/signature.hpp"
#include "qa/syntax/substitution.hpp"

namespace qa {

/// A term is rigid when it is built from variables and rigid function symbols only.
inline bool is_rigid_term(const Term& t, const Signature& sig) {
  if (t.is_var()) return true;
  if (!sig.is_rigid_function(t.name())) return false;
  for (const Term& a : t.args()) {
    if (!is_rigid_term(a, sig)) return false;
  }
  return true;
}

/// s = t with both sides rigid.
inline bool is_rigid_identity(const Formula& f, const Signature& sig) {
  return f.is(FormulaKind::kEq) && is_rigid_term(f.lhs_term(), sig) && is_rigid_term(f.rhs_term(), sig);
}

namespace detail {

class RigidMatcher {
 public:
  explicit RigidMatcher(const Signature& sig) : sig_(sig) {}

  bool match(const Formula& cand, const Formula& pat) {
    if (cand.kind() != pat.kind()) return false;
    switch (pat.kind()) {
      case FormulaKind::kTrue:
      case FormulaKind::kFalse:
        return true;
      case FormulaKind::kPred:
        if (cand.symbol() != pat.symbol() || cand.terms().size() != pat.terms().size()) return false;
        [[fallthrough]];
      case FormulaKind::kEq:
        for (std::size_t i = 0; i < pat.terms().size(); ++i) {
          if (!match_term(cand.terms()[i], pat.terms()[i])) return false;
        }
        return true;
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        cand_bound_.push_back(cand.var());
        pat_bound_.push_back(pat.var());
        const bool ok = match(cand.body(), pat.body());
        cand_bound_.pop_back();
        pat_bound_.pop_back();
        return ok;
      }
      default:
        for (std::size_t i = 0; i < pat.arity(); ++i) {
          if (!match(cand.child(i), pat.child(i))) return false;
        }
        return true;
    }
  }

  Substitution result() const { return sigma_; }

 private:
  static int innermost(const std::vector<std::string>& stack, const std::string& v) {
    for (int i = static_cast<int>(stack.size()) - 1; i >= 0; --i) {
      if (stack[static_cast<std::size_t>(i)] == v) return i;
    }
    return -1;
  }

  bool mentions_candidate_bound(const Term& t) const {
    if (t.is_var()) return innermost(cand_bound_, t.name()) >= 0;
    for (const Term& a : t.args()) {
      if (mentions_candidate_bound(a)) return true;
    }
    return false;
  }

  bool match_term(const Term& ct, const Term& pt) {
    if (pt.is_var()) {
      const int level = innermost(pat_bound_, pt.name());
      if (level >= 0) {
        return ct.is_var() && innermost(cand_bound_, ct.name()) == level;
      }
      // Free pattern variable: substitutable by a rigid term that would not be captured.
      if (mentions_candidate_bound(ct) || !is_rigid_term(ct, sig_)) return false;
      auto [it, inserted] = sigma_.emplace(pt.name(), ct);
      return inserted || it->second == ct;
    }
    if (!ct.is_app() || ct.name() != pt.name() || ct.args().size() != pt.args().size()) return false;
    for (std::size_t i = 0; i < pt.args().size(); ++i) {
      if (!match_term(ct.args()[i], pt.args()[i])) return false;
    }
    return true;
  }

  const Signature& sig_;
  std::vector<std::string> cand_bound_;
  std::vector<std::string> pat_bound_;
  Substitution sigma_;
};

}  // namespace detail

/// Finds sigma with rigid range such that substitute(pattern, sigma) is alpha-equivalent to candidate.
/// Bound variables of the pattern never enter sigma's domain.
inline std::optional<Substitution> match_rigid_instance(const Formula& candidate, const Formula& pattern,
                                                        const Signature& sig) {
  detail::RigidMatcher m(sig);
  if (!m.match(candidate, pattern)) return std::nullopt;
  return m.result();
}

}  // namespace qa

#endif  // QA_SYNTAX_RIGIDITY_HPP
