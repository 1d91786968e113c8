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

#ifndef QA_PROVER_REFUTATION_HPP
#define QA_PROVER_REFUTATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qa/prover/clause.hpp"
#include "qa/prover/proof.hpp"

namespace qa {

/// A clause handed to a refutation engine, with the provenance recorded on its proof leaf.
struct InputClause {
  Clause clause;
  ProofRule rule = ProofRule::kInput;
  Side side = Side::kNone;
};

enum class RefutationStatus { kRefuted, kSaturated, kBudgetExhausted };

struct RefutationResult {
  RefutationStatus status = RefutationStatus::kSaturated;
  std::optional<Proof> proof;
  std::uint64_t generated = 0;
};

}  // namespace qa

#endif  // QA_PROVER_REFUTATION_HPP
