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

#ifndef QA_SEMANTICS_COUNTERMODEL_HPP
#define QA_SEMANTICS_COUNTERMODEL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "qa/error.hpp"
#include "qa/semantics/enumerate.hpp"
#include "qa/semantics/evaluate.hpp"
#include "qa/semantics/partition.hpp"
#include "qa/semantics/structure.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/priming.hpp"

namespace qa {

/// M |= chi with worlds w, v related by [?Phi]_M but not by [?psi]_M.
struct Countermodel {
  ModalStructure model;
  int w = 0;
  int v = 1;
};

struct SearchOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  bool prune_world_symmetry = true;
  /// Filled in by the search when non-null.
  std::uint64_t* examined = nullptr;
};

/// Does (w, v) witness failure of ?Phi |=_chi ?psi in m?
inline bool is_countermodel(const ModalStructure& m, int w, int v, const QuestionSet& qs, const Formula& chi,
                            const Question& q) {
  if (w == v || !holds_globally(m, chi)) return false;
  if (question_partition(m, q).related(w, v)) return false;
  return questions_partition(m, qs).related(w, v);
}

/// Does some two-world structure within b tell its worlds apart by ?psi? Any
/// countermodel, cut down to psi's symbols and to the separated pair, is one.
inline bool question_can_split(const Signature& sig, const Question& q, const Bounds& b, std::uint64_t cap) {
  EnumerationOptions eo;
  eo.cap = cap;
  eo.min_worlds = 2;
  eo.prune_world_symmetry = true;
  if (b.max_worlds < 2) return false;
  const Signature small = restrict_signature(sig, {q.body});
  StructureEnumerator e(small, Bounds(2, b.max_domain), eo);
  const ModalStructure layout(small, 1, 1);
  const CompiledFormula c(q.body, layout);
  std::vector<int> slots(c.slot_count(), 0);
  while (e.next()) {
    if (truth_signature(e.current(), 0, c, slots) != truth_signature(e.current(), 1, c, slots)) return true;
  }
  return false;
}

/// Bounded search for a countermodel to ?Phi |=_chi ?psi.
///
/// Only structures with at least two worlds can separate a pair, so |W| = 1 is
/// skipped. The search runs over the symbols that occur in the input, and the
/// witness is re-expressed over the full signature. No result means only that
/// nothing exists within the bounds.
inline std::optional<Countermodel> find_countermodel(const Signature& sig, const QuestionSet& qs, const Formula& chi,
                                                     const Question& q, const Bounds& b, SearchOptions opts = {}) {
  if (!is_closed(chi)) throw InputError("context formula must be closed");
  std::vector<Formula> all{chi, q.body};
  for (const auto& p : qs) all.push_back(p.body);
  const Signature small = restrict_signature(sig, all);
  // Cheap refutation of the whole search when ?psi alone never splits a pair.
  const Signature psi_only = restrict_signature(sig, {q.body});
  auto count = [](const Signature& x) { return x.predicates().size() + x.functions().size(); };
  if (count(psi_only) < count(small) &&
      !question_can_split(sig, q, b, opts.cap)) {
    if (opts.examined) *opts.examined = 0;
    return std::nullopt;
  }

  EnumerationOptions eo;
  eo.cap = opts.cap;
  eo.min_worlds = 2;
  eo.prune_world_symmetry = opts.prune_world_symmetry;
  StructureEnumerator e(small, b, eo);

  const ModalStructure layout(small, 1, 1);
  const CompiledFormula c_chi(chi, layout);
  const CompiledFormula c_psi(q.body, layout);
  std::vector<CompiledFormula> c_phis;
  std::size_t slots_needed = std::max(c_chi.slot_count(), c_psi.slot_count());
  for (const auto& p : qs) {
    c_phis.emplace_back(p.body, layout);
    slots_needed = std::max(slots_needed, c_phis.back().slot_count());
  }
  std::vector<int> slots(slots_needed, 0);

  std::uint64_t examined = 0;
  std::optional<Countermodel> found;
  while (!found && e.next()) {
    ++examined;
    const ModalStructure& m = e.current();
    const int n = m.world_count();
    std::vector<std::vector<bool>> psi_sig;
    for (int w = 0; w < n; ++w) psi_sig.push_back(truth_signature(m, w, c_psi, slots));
    bool split = false;
    for (int w = 1; w < n && !split; ++w) split = psi_sig[static_cast<std::size_t>(w)] != psi_sig[0];
    if (!split || !holds_globally(m, c_chi)) continue;
    std::vector<std::vector<std::vector<bool>>> phi_sig(c_phis.size());
    for (std::size_t i = 0; i < c_phis.size(); ++i) {
      for (int w = 0; w < n; ++w) phi_sig[i].push_back(truth_signature(m, w, c_phis[i], slots));
    }
    for (int w = 0; w < n && !found; ++w) {
      for (int v = w + 1; v < n && !found; ++v) {
        if (psi_sig[static_cast<std::size_t>(w)] == psi_sig[static_cast<std::size_t>(v)]) continue;
        bool agree = true;
        for (std::size_t i = 0; i < c_phis.size() && agree; ++i) {
          agree = phi_sig[i][static_cast<std::size_t>(w)] == phi_sig[i][static_cast<std::size_t>(v)];
        }
        if (agree) found = Countermodel{extend_signature(m, sig), w, v};
      }
    }
  }
  if (opts.examined) *opts.examined = examined;
  return found;
}

/// The classical structure over the primed signature that reads unprimed symbols
/// at w, primed symbols at v, and rigid symbols from their shared table.
inline ModalStructure two_world_correspondence(const ModalStructure& m, int w, int v) {
  if (w < 0 || v < 0 || w >= m.world_count() || v >= m.world_count()) throw InputError("world index out of range");
  ModalStructure out(primed_signature(m.signature()), 1, m.domain_size());
  out.set_entity_names(m.entity_names());
  out.set_world_names({m.world_names()[static_cast<std::size_t>(w)] + "|" + m.world_names()[static_cast<std::size_t>(v)]});
  auto& cells = out.mutable_cells();
  auto copy = [&](std::size_t src, std::size_t dst, std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) cells[dst + k] = m.cell(src + k);
  };
  for (const auto& t : m.predicate_tables()) {
    const int p = m.predicate_id(t.name);
    copy(m.predicate_offset(p, w), out.predicate_offset(out.predicate_id(t.name), 0), t.stride);
    copy(m.predicate_offset(p, v), out.predicate_offset(out.predicate_id(primed(t.name)), 0), t.stride);
  }
  for (const auto& t : m.function_tables()) {
    const int f = m.function_id(t.name);
    copy(m.function_offset(f, w), out.function_offset(out.function_id(t.name), 0), t.stride);
    if (!t.rigid) copy(m.function_offset(f, v), out.function_offset(out.function_id(primed(t.name)), 0), t.stride);
  }
  return out;
}

}  // namespace qa

#endif  // QA_SEMANTICS_COUNTERMODEL_HPP
