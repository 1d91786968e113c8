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

#ifndef QA_ANSWERHOOD_TRANSLATE_HPP
#define QA_ANSWERHOOD_TRANSLATE_HPP

#include "qa/error.hpp"
#include "qa/prover/prove.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/priming.hpp"

namespace qa {

/// ?Phi |=_chi ?psi as a first-order sequent over the primed signature:
/// ?phi_1#, ..., ?phi_n#, chi, chi* |= ?psi#.
inline FOSequent translate_entailment(const QuestionSet& qs, const Formula& chi, const Question& q, const Signature& sig) {
  if (!is_closed(chi)) throw InputError("context formula must be closed");
  FOSequent s;
  s.signature = primed_signature(sig);
  for (const auto& p : qs) s.premises.push_back(sharp(p, sig));
  s.premises.push_back(chi);
  s.premises.push_back(prime(chi, sig));
  s.conclusion = sharp(q, sig);
  return s;
}

}  // namespace qa

#endif  // QA_ANSWERHOOD_TRANSLATE_HPP
