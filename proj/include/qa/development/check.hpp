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

#ifndef QA_DEVELOPMENT_CHECK_HPP
#define QA_DEVELOPMENT_CHECK_HPP

#include <map>
#include <optional>
#include <vector>

#include "qa/development/tree.hpp"
#include "qa/syntax/rigidity.hpp"
#include "qa/syntax/signature.hpp"

namespace qa {

namespace detail {

class DevelopmentChecker {
 public:
  DevelopmentChecker(const std::vector<Formula>& phis, const Signature& sig, DevelopmentVariant v)
      : phis_(phis), sig_(sig), v_(v) {}

  std::optional<DevelopmentTree> check(const Formula& f) {
    if (auto it = memo_.find(f); it != memo_.end()) return it->second;
    std::optional<DevelopmentTree> out = leaf(f);
    if (!out) out = composite(f);
    memo_.emplace(f, out);
    return out;
  }

  std::optional<DevelopmentTree> leaf(const Formula& f) const {
    for (std::size_t i = 0; i < phis_.size(); ++i) {
      if (auto sigma = match_rigid_instance(f, phis_[i], sig_)) {
        DevelopmentTree t;
        t.kind = DevelopmentNodeKind::kInstance;
        t.pattern_index = static_cast<int>(i);
        t.pattern = phis_[i];
        t.sigma = std::move(*sigma);
        return t;
      }
    }
    if (v_.allow_equality && is_rigid_identity(f, sig_)) {
      if (!v_.allow_var_var_identity && f.lhs_term().is_var() && f.rhs_term().is_var()) return std::nullopt;
      DevelopmentTree t;
      t.kind = DevelopmentNodeKind::kIdentity;
      t.identity = f;
      return t;
    }
    return std::nullopt;
  }

 private:
  /// In the existential-free fragment a negated position must be a leaf.
  std::optional<DevelopmentTree> negated(const Formula& f) {
    return v_.allow_existential ? check(f) : leaf(f);
  }

  std::optional<DevelopmentTree> composite(const Formula& f) {
    DevelopmentTree t;
    auto with = [&](DevelopmentNodeKind k, std::vector<std::optional<DevelopmentTree>> kids) -> std::optional<DevelopmentTree> {
      t.kind = k;
      for (auto& c : kids) {
        if (!c) return std::nullopt;
        t.kids.push_back(std::move(*c));
      }
      return t;
    };
    switch (f.kind()) {
      case FormulaKind::kNot:
        return with(DevelopmentNodeKind::kNot, {negated(f.body())});
      case FormulaKind::kAnd:
        return with(DevelopmentNodeKind::kAnd, {check(f.left()), check(f.right())});
      case FormulaKind::kOr:
        return with(DevelopmentNodeKind::kOr, {check(f.left()), check(f.right())});
      case FormulaKind::kImp:
        return with(DevelopmentNodeKind::kImp, {negated(f.left()), check(f.right())});
      case FormulaKind::kIff:
        return with(DevelopmentNodeKind::kIff, {negated(f.left()), negated(f.right())});
      case FormulaKind::kForall:
        t.var = f.var();
        return with(DevelopmentNodeKind::kForall, {check(f.body())});
      case FormulaKind::kExists:
        if (!v_.allow_existential) return std::nullopt;
        t.var = f.var();
        return with(DevelopmentNodeKind::kExists, {check(f.body())});
      default:
        return std::nullopt;
    }
  }

  const std::vector<Formula>& phis_;
  const Signature& sig_;
  DevelopmentVariant v_;
  std::map<Formula, std::optional<DevelopmentTree>> memo_;
};

}  // namespace detail

/// A derivation of psi from rigid instances of the phis and rigid identities,
/// if one exists. Leaves are tried before connectives, so a formula that is
/// itself an instance gets a one-node tree. Implication and biconditional are
/// accepted as abbreviations over negation, conjunction and disjunction.
inline std::optional<DevelopmentTree> check_development(const Formula& psi, const std::vector<Formula>& phis,
                                                        const Signature& sig, const DevelopmentVariant& v = {}) {
  return detail::DevelopmentChecker(phis, sig, v).check(psi);
}

inline bool is_development(const Formula& psi, const std::vector<Formula>& phis, const Signature& sig,
                           const DevelopmentVariant& v = {}) {
  return check_development(psi, phis, sig, v).has_value();
}

}  // namespace qa

#endif  // QA_DEVELOPMENT_CHECK_HPP
