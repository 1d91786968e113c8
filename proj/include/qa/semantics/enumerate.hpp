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

#ifndef QA_SEMANTICS_ENUMERATE_HPP
#define QA_SEMANTICS_ENUMERATE_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qa/error.hpp"
#include "qa/semantics/structure.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/signature.hpp"

namespace qa {

inline constexpr std::uint64_t kDefaultEnumerationCap = 20'000'000;

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  int min_worlds = 1;
  /// Yield only structures whose worlds are sorted by local interpretation.
  /// Sound for searches that are invariant under permuting worlds.
  bool prune_world_symmetry = false;
};

/// Number of structures with exactly `worlds` worlds and `domain` entities, as a double
/// so that huge signatures do not wrap.
inline long double structure_count(const Signature& sig, int worlds, int domain) {
  long double pred_cells = 0, func_cells = 0;
  for (const auto& [name, arity] : sig.predicates()) pred_cells += std::pow(static_cast<long double>(domain), arity) * worlds;
  for (const auto& [name, info] : sig.functions()) {
    func_cells += std::pow(static_cast<long double>(domain), info.arity) * (info.rigid ? 1 : worlds);
  }
  return std::pow(2.0L, pred_cells) * std::pow(static_cast<long double>(domain), func_cells);
}

/// Total over min_worlds <= |W| <= max_worlds and 1 <= |D| <= max_domain, before pruning.
inline long double count_structures(const Signature& sig, const Bounds& b, int min_worlds = 1) {
  long double total = 0;
  for (int w = min_worlds; w <= b.max_worlds; ++w) {
    for (int d = 1; d <= b.max_domain; ++d) total += structure_count(sig, w, d);
  }
  return total;
}

/// Deterministic stream of structures: |W| ascending, then |D| ascending, then
/// interpretations in lexicographic cell order. Rigid functions have one shared
/// table, so every yielded structure satisfies the rigid-symbol invariant.
class StructureEnumerator {
 public:
  StructureEnumerator(Signature sig, Bounds b, EnumerationOptions opts = {})
      : sig_(std::move(sig)), bounds_(b), opts_(opts) {
    const long double total = count_structures(sig_, bounds_, opts_.min_worlds);
    if (total > static_cast<long double>(opts_.cap)) {
      throw EnumerationOverflow("structure enumeration needs " + std::to_string(static_cast<double>(total)) +
                                " structures, above the cap of " + std::to_string(opts_.cap));
    }
    total_ = static_cast<std::uint64_t>(total);
  }

  /// Advances to the next structure; false once the bounds are exhausted.
  bool next() {
    do {
      if (!advance()) return false;
    } while (opts_.prune_world_symmetry && !worlds_sorted());
    ++yielded_;
    return true;
  }

  const ModalStructure& current() const { return *current_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t yielded() const { return yielded_; }

 private:
  bool advance() {
    if (!current_) {
      if (opts_.min_worlds > bounds_.max_worlds) return false;
      current_.emplace(sig_, opts_.min_worlds, 1);
      return true;
    }
    auto& cells = current_->mutable_cells();
    const std::size_t preds = current_->predicate_cell_count();
    const int d = current_->domain_size();
    for (std::size_t i = cells.size(); i > 0; --i) {
      const int radix = i - 1 < preds ? 2 : d;
      if (++cells[i - 1] < radix) return true;
      cells[i - 1] = 0;
    }
    int worlds = current_->world_count();
    int domain = d + 1;
    if (domain > bounds_.max_domain) {
      domain = 1;
      ++worlds;
    }
    if (worlds > bounds_.max_worlds) return false;
    current_.emplace(sig_, worlds, domain);
    return true;
  }

  bool worlds_sorted() const {
    std::vector<int> prev = current_->local_view(0);
    for (int w = 1; w < current_->world_count(); ++w) {
      std::vector<int> cur = current_->local_view(w);
      if (cur < prev) return false;
      prev = std::move(cur);
    }
    return true;
  }

  Signature sig_;
  Bounds bounds_;
  EnumerationOptions opts_;
  std::optional<ModalStructure> current_;
  std::uint64_t total_ = 0;
  std::uint64_t yielded_ = 0;
};

/// Every structure within bounds, materialized. Only for small signatures.
inline std::vector<ModalStructure> enumerate_structures(const Signature& sig, const Bounds& b,
                                                        EnumerationOptions opts = {}) {
  std::vector<ModalStructure> out;
  StructureEnumerator e(sig, b, opts);
  while (e.next()) out.push_back(e.current());
  return out;
}

/// The part of sig whose symbols occur in the given formulas. Evaluation never
/// looks at other symbols, so searching over this signature loses nothing.
inline Signature restrict_signature(const Signature& sig, const std::vector<Formula>& fs) {
  std::set<std::string> used;
  for (const auto& f : fs) {
    for (const auto& s : symbol_names(f)) used.insert(s);
  }
  Signature out;
  for (const auto& [name, arity] : sig.predicates()) {
    if (used.count(name)) out.add_predicate(name, arity);
  }
  for (const auto& [name, info] : sig.functions()) {
    if (used.count(name)) out.add_function(name, info.arity, info.rigid);
  }
  for (const auto& s : used) {
    if (!sig.has_symbol(s)) throw InputError("symbol '" + s + "' is not in the signature");
  }
  return out;
}

}  // namespace qa

#endif  // QA_SEMANTICS_ENUMERATE_HPP
