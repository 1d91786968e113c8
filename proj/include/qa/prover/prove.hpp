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

#ifndef QA_PROVER_PROVE_HPP
#define QA_PROVER_PROVE_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qa/error.hpp"
#include "qa/prover/cdcl.hpp"
#include "qa/prover/clausify.hpp"
#include "qa/prover/refutation.hpp"
#include "qa/prover/saturation.hpp"
#include "qa/semantics/enumerate.hpp"
#include "qa/semantics/evaluate.hpp"

namespace qa {

/// Classical first-order sequent: premises entail conclusion. All formulas closed.
struct FOSequent {
  std::vector<Formula> premises;
  Formula conclusion = Formula::bottom();
  Signature signature;
};

enum class ProofStatus { kProved, kNotProved, kCounterexampleFound };

inline const char* status_name(ProofStatus s) {
  switch (s) {
    case ProofStatus::kProved:
      return "proved";
    case ProofStatus::kNotProved:
      return "not-proved";
    case ProofStatus::kCounterexampleFound:
      return "counterexample";
  }
  return "?";
}

struct ProveOptions {
  std::uint64_t budget = 50000;
  /// Largest domain tried by the finite counterexample search; 0 disables it.
  int counterexample_domain = 3;
  std::uint64_t counterexample_cap = 2'000'000;
};

struct ProofResult {
  ProofStatus status = ProofStatus::kNotProved;
  std::optional<Proof> proof;
  /// A one-world structure satisfying the premises and falsifying the conclusion.
  std::optional<ModalStructure> counterexample;
  /// True when saturation finished without the empty clause: the sequent is invalid.
  bool saturated = false;
  std::uint64_t generated = 0;
};

/// Reflexivity, symmetry, transitivity and one substitutivity clause per
/// argument position of every symbol occurring in the clauses.
inline std::vector<InputClause> equality_axioms(const std::vector<Clause>& clauses, Side side = Side::kNone) {
  std::set<std::pair<std::string, int>> preds, funcs;
  bool uses_eq = false;
  for (const auto& c : clauses) {
    for (const auto& l : c) {
      uses_eq = uses_eq || l.atom.is(FormulaKind::kEq);
      collect_symbols(l.atom, preds, funcs);
    }
  }
  std::vector<InputClause> out;
  if (!uses_eq) return out;
  const Term x = Term::var("X"), y = Term::var("Y"), z = Term::var("Z");
  auto eq = [](const Term& a, const Term& b) { return Formula::eq(a, b); };
  auto axiom = [&](Clause c) { out.push_back({std::move(c), ProofRule::kEqAxiom, side}); };
  axiom({{false, eq(x, x)}});
  axiom({{true, eq(x, y)}, {false, eq(y, x)}});
  axiom({{true, eq(x, y)}, {true, eq(y, z)}, {false, eq(x, z)}});
  auto args_with = [](int n, int i, const Term& t) {
    std::vector<Term> args;
    for (int k = 0; k < n; ++k) args.push_back(k == i ? t : Term::var("A" + std::to_string(k)));
    return args;
  };
  for (const auto& [f, n] : funcs) {
    for (int i = 0; i < n; ++i) {
      axiom({{true, eq(x, y)}, {false, eq(Term::app(f, args_with(n, i, x)), Term::app(f, args_with(n, i, y)))}});
    }
  }
  for (const auto& [p, n] : preds) {
    for (int i = 0; i < n; ++i) {
      axiom({{true, eq(x, y)}, {true, Formula::pred(p, args_with(n, i, x))}, {false, Formula::pred(p, args_with(n, i, y))}});
    }
  }
  return out;
}

inline bool all_ground(const std::vector<InputClause>& cs) {
  for (const auto& c : cs) {
    if (!clause_variables(c.clause).empty()) return false;
  }
  return true;
}

/// Refutes the clause set with CDCL when ground and with saturation otherwise.
inline RefutationResult refute(const std::vector<InputClause>& cs, std::uint64_t budget) {
  return all_ground(cs) ? ground_refute(cs, budget * 20) : saturate(cs, budget);
}

/// A one-world model of the premises that falsifies the conclusion, over domains
/// up to max_domain. Domains whose enumeration exceeds the cap are skipped.
inline std::optional<ModalStructure> find_counterexample(const FOSequent& s, int max_domain, std::uint64_t cap) {
  std::vector<Formula> all = s.premises;
  all.push_back(s.conclusion);
  const Signature sig = restrict_signature(s.signature, all);
  for (int d = 1; d <= max_domain; ++d) {
    if (structure_count(sig, 1, d) > static_cast<long double>(cap)) break;
    ModalStructure m(sig, 1, d);
    std::vector<CompiledFormula> premises;
    for (const auto& p : s.premises) premises.emplace_back(p, m);
    const CompiledFormula goal(s.conclusion, m);
    auto& cells = m.mutable_cells();
    const std::size_t preds = m.predicate_cell_count();
    while (true) {
      bool ok = !holds_globally(m, goal);
      for (std::size_t i = 0; ok && i < premises.size(); ++i) ok = holds_globally(m, premises[i]);
      if (ok) return extend_signature(m, s.signature);
      std::size_t i = cells.size();
      for (; i > 0; --i) {
        if (++cells[i - 1] < (i - 1 < preds ? 2 : d)) break;
        cells[i - 1] = 0;
      }
      if (i == 0) break;
    }
  }
  return std::nullopt;
}

/// Proves a sequent by refutation of premises plus the negated conclusion; when
/// that fails, looks for a small counterexample.
inline ProofResult prove(const FOSequent& s, const ProveOptions& opts = {}) {
  if (opts.budget == 0) throw InputError("prove: budget must be positive");
  for (const auto& p : s.premises) {
    if (!is_closed(p)) throw InputError("prove: premise " + to_string(p) + " is not closed");
  }
  if (!is_closed(s.conclusion)) throw InputError("prove: conclusion " + to_string(s.conclusion) + " is not closed");
  Clausifier cl;
  std::vector<InputClause> input;
  std::vector<Clause> raw;
  auto add = [&](const Formula& f) {
    for (auto& c : cl.clausify(f)) {
      raw.push_back(c);
      input.push_back({std::move(c), ProofRule::kInput, Side::kNone});
    }
  };
  for (const auto& p : s.premises) add(p);
  add(Formula::neg(s.conclusion));
  for (auto& a : equality_axioms(raw)) input.push_back(std::move(a));

  ProofResult result;
  RefutationResult r = refute(input, opts.budget);
  result.generated = r.generated;
  if (r.status == RefutationStatus::kRefuted) {
    result.status = ProofStatus::kProved;
    result.proof = std::move(r.proof);
    return result;
  }
  result.saturated = r.status == RefutationStatus::kSaturated;
  if (opts.counterexample_domain > 0) {
    result.counterexample = find_counterexample(s, opts.counterexample_domain, opts.counterexample_cap);
    if (result.counterexample) result.status = ProofStatus::kCounterexampleFound;
  }
  return result;
}

}  // namespace qa

#endif  // QA_PROVER_PROVE_HPP
