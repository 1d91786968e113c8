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

#ifndef QA_DEVELOPMENT_CLASSIFY_HPP
#define QA_DEVELOPMENT_CLASSIFY_HPP

#include <optional>
#include <string>

#include "qa/development/check.hpp"
#include "qa/development/tree.hpp"
#include "qa/error.hpp"
#include "qa/prover/prove.hpp"
#include "qa/semantics/countermodel.hpp"

namespace qa {

enum class TriState { kFalse, kTrue, kUnknown };

inline const char* tri_name(TriState t) {
  switch (t) {
    case TriState::kFalse:
      return "false";
    case TriState::kTrue:
      return "true";
    case TriState::kUnknown:
      return "unknown";
  }
  return "?";
}

struct AnswerClassification {
  TriState is_tautology = TriState::kUnknown;
  TriState is_contradiction = TriState::kUnknown;
  /// The root is a leaf or a negated leaf.
  bool is_atomic = false;
  /// No existential node, and negation (including the negative side of an
  /// implication or biconditional) only directly over leaves.
  bool existential_free = false;
};

/// Small budget used for the tautology and contradiction flags.
inline ProveOptions classification_prove_options() {
  ProveOptions o;
  o.budget = 5000;
  o.counterexample_domain = 2;
  o.counterexample_cap = 200'000;
  return o;
}

inline bool existential_free(const DevelopmentTree& t) {
  switch (t.kind) {
    case DevelopmentNodeKind::kInstance:
    case DevelopmentNodeKind::kIdentity:
      return true;
    case DevelopmentNodeKind::kExists:
      return false;
    case DevelopmentNodeKind::kNot:
      return t.kids[0].is_leaf();
    case DevelopmentNodeKind::kImp:
      return t.kids[0].is_leaf() && existential_free(t.kids[1]);
    case DevelopmentNodeKind::kIff:
      return t.kids[0].is_leaf() && t.kids[1].is_leaf();
    default:
      for (const auto& k : t.kids) {
        if (!existential_free(k)) return false;
      }
      return true;
  }
}

namespace detail {

inline TriState prove_flag(const FOSequent& s, const ProveOptions& opts) {
  const ProofResult r = prove(s, opts);
  if (r.status == ProofStatus::kProved) return TriState::kTrue;
  if (r.status == ProofStatus::kCounterexampleFound || r.saturated) return TriState::kFalse;
  return TriState::kUnknown;
}

inline Formula exists_all(const std::vector<std::string>& vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = Formula::exists(*it, body);
  return body;
}

}  // namespace detail

/// Syntactic flags come from the tree; tautology and contradiction from the
/// prover on the universal and existential closure of psi respectively.
inline AnswerClassification classify_answer(const Formula& psi, const DevelopmentTree& tree, const Signature& sig,
                                            const ProveOptions& opts = classification_prove_options()) {
  if (!alpha_equivalent(replay(tree), psi)) {
    throw InputError("classify_answer: tree does not derive " + to_string(psi));
  }
  AnswerClassification c;
  c.is_atomic = tree.is_leaf() || (tree.kind == DevelopmentNodeKind::kNot && tree.kids[0].is_leaf());
  c.existential_free = existential_free(tree);
  const std::vector<std::string> fv = free_variables(psi);
  c.is_tautology = detail::prove_flag({{}, Formula::forall_all(fv, psi), sig}, opts);
  if (c.is_tautology != TriState::kTrue) {
    c.is_contradiction = detail::prove_flag({{detail::exists_all(fv, psi)}, Formula::bottom(), sig}, opts);
  } else {
    c.is_contradiction = TriState::kFalse;
  }
  return c;
}

struct DevelopmentEntailmentCheck {
  bool passed = true;
  std::optional<Countermodel> countermodel;
};

/// If psi develops phi then ?phi entails ?psi; a countermodel within the
/// bounds is a bug somewhere in the checker, the evaluator or the search.
inline DevelopmentEntailmentCheck check_development_entails(const Formula& phi, const Formula& psi, const Signature& sig, const Bounds& b,
                                         const DevelopmentVariant& v = {}) {
  if (!check_development(psi, {phi}, sig, v)) {
    throw InputError("check_development_entails: " + to_string(psi) + " is not a development of " + to_string(phi));
  }
  DevelopmentEntailmentCheck out;
  out.countermodel = find_countermodel(sig, {Question{phi}}, Formula::top(), Question{psi}, b);
  out.passed = !out.countermodel.has_value();
  return out;
}

}  // namespace qa

#endif  // QA_DEVELOPMENT_CLASSIFY_HPP
