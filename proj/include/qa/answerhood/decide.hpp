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

#ifndef QA_ANSWERHOOD_DECIDE_HPP
#define QA_ANSWERHOOD_DECIDE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "qa/answerhood/translate.hpp"
#include "qa/development/tree.hpp"
#include "qa/error.hpp"
#include "qa/prover/prove.hpp"
#include "qa/semantics/countermodel.hpp"

namespace qa {

struct EngineConfig {
  Bounds bounds{2, 3};
  std::uint64_t prover_budget = 50000;
  int grounding_depth = 1;
  /// Extra grounding depths tried by extraction before it gives up.
  int grounding_retries = 2;
  DevelopmentVariant variant;
  /// Run the prover even after a countermodel was found and fail loudly if it
  /// also succeeds.
  bool cross_check = false;

  void validate() const {
    if (prover_budget == 0) throw InputError("prover budget must be positive");
    if (grounding_depth < 0 || grounding_retries < 0) throw InputError("grounding depth must be non-negative");
  }
};

enum class VerdictKind { kEntailed, kNotEntailed, kUnknown };

inline const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::kEntailed:
      return "Entailed";
    case VerdictKind::kNotEntailed:
      return "NotEntailed";
    case VerdictKind::kUnknown:
      return "Unknown";
  }
  return "?";
}

struct Verdict {
  VerdictKind kind = VerdictKind::kUnknown;
  std::optional<Proof> proof;               // kEntailed
  std::optional<Countermodel> countermodel;  // kNotEntailed
  Bounds bounds;
  /// Clauses generated by the prover, zero when it did not run.
  std::uint64_t budget_used = 0;
};

/// Bounded countermodel search first, then the prover on the translated sequent.
inline Verdict decide_entailment(const QuestionSet& qs, const Formula& chi, const Question& q, const Signature& sig,
                                 const EngineConfig& cfg = {}) {
  cfg.validate();
  if (!is_closed(chi)) throw InputError("context formula must be closed");
  Verdict v;
  v.bounds = cfg.bounds;
  v.countermodel = find_countermodel(sig, qs, chi, q, cfg.bounds);
  if (v.countermodel) {
    v.kind = VerdictKind::kNotEntailed;
    if (!cfg.cross_check) return v;
  }
  ProveOptions po;
  po.budget = cfg.prover_budget;
  po.counterexample_domain = 0;
  ProofResult r = prove(translate_entailment(qs, chi, q, sig), po);
  v.budget_used = r.generated;
  if (r.status == ProofStatus::kProved) {
    if (v.countermodel) {
      throw InternalError("soundness violation: countermodel and proof for the same entailment");
    }
    v.kind = VerdictKind::kEntailed;
    v.proof = std::move(r.proof);
  }
  return v;
}

/// Definition of answerhood: psi (closed) answers ?phi in context chi when ?phi |=_chi ?psi.
inline Verdict is_answer(const Formula& psi, const Question& q, const Formula& chi, const Signature& sig,
                         const EngineConfig& cfg = {}) {
  if (!is_closed(psi)) throw InputError("an answer must be closed: " + to_string(psi));
  return decide_entailment({q}, chi, Question{psi}, sig, cfg);
}

}  // namespace qa

#endif  // QA_ANSWERHOOD_DECIDE_HPP
