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

#ifndef QA_SEMANTICS_PARTITION_HPP
#define QA_SEMANTICS_PARTITION_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "qa/error.hpp"
#include "qa/semantics/evaluate.hpp"
#include "qa/semantics/structure.hpp"
#include "qa/syntax/formula.hpp"

namespace qa {

/// An equivalence relation on worlds 0..n-1 in canonical form: each block sorted,
/// blocks ordered by their least element.
class Partition {
 public:
  Partition() = default;

  /// Builds the canonical form from a block label per world; labels are arbitrary.
  template <typename Label>
  static Partition from_labels(const std::vector<Label>& labels) {
    Partition p;
    p.block_of_.assign(labels.size(), -1);
    std::map<Label, int> ids;
    for (std::size_t w = 0; w < labels.size(); ++w) {
      auto [it, inserted] = ids.emplace(labels[w], static_cast<int>(p.blocks_.size()));
      if (inserted) p.blocks_.emplace_back();
      p.blocks_[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(w));
      p.block_of_[w] = it->second;
    }
    return p;
  }

  /// Validates and canonicalizes explicit blocks over worlds 0..n-1.
  static Partition from_blocks(int n, std::vector<std::vector<int>> blocks) {
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw InputError("partition blocks must be nonempty");
      for (int w : blocks[b]) {
        if (w < 0 || w >= n) throw InputError("partition block mentions an unknown world");
        if (label[static_cast<std::size_t>(w)] >= 0) throw InputError("partition blocks must be disjoint");
        label[static_cast<std::size_t>(w)] = static_cast<int>(b);
      }
    }
    for (int l : label) {
      if (l < 0) throw InputError("partition blocks must cover every world");
    }
    return from_labels(label);
  }

  static Partition discrete(int n) {
    std::vector<int> label(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(i)] = i;
    return from_labels(label);
  }
  static Partition total(int n) { return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  int world_count() const { return static_cast<int>(block_of_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int w) const { return block_of_.at(static_cast<std::size_t>(w)); }
  bool related(int w, int v) const { return block_of(w) == block_of(v); }

  bool operator==(const Partition& o) const { return blocks_ == o.blocks_ && block_of_.size() == o.block_of_.size(); }

 private:
  std::vector<std::vector<int>> blocks_;
  std::vector<int> block_of_;
};

/// Common refinement: w ~ v iff related in both.
inline Partition meet(const Partition& a, const Partition& b) {
  if (a.world_count() != b.world_count()) throw InputError("partitions of different world sets");
  std::vector<std::pair<int, int>> label;
  for (int w = 0; w < a.world_count(); ++w) label.push_back({a.block_of(w), b.block_of(w)});
  return Partition::from_labels(label);
}

/// Every block of a lies inside a block of b.
inline bool refines(const Partition& a, const Partition& b) {
  if (a.world_count() != b.world_count()) throw InputError("partitions of different world sets");
  for (const auto& block : a.blocks()) {
    for (int w : block) {
      if (b.block_of(w) != b.block_of(block.front())) return false;
    }
  }
  return true;
}

/// [?phi]_M: worlds agree on phi under every assignment to its free variables.
inline Partition question_partition(const ModalStructure& m, const CompiledFormula& c) {
  std::vector<int> slots(c.slot_count(), 0);
  std::vector<std::vector<bool>> label;
  for (int w = 0; w < m.world_count(); ++w) label.push_back(truth_signature(m, w, c, slots));
  return Partition::from_labels(label);
}

inline Partition question_partition(const ModalStructure& m, const Question& q) {
  return question_partition(m, CompiledFormula(q.body, m));
}

/// The meet over a set of questions; the empty set gives the one-block partition.
inline Partition questions_partition(const ModalStructure& m, const QuestionSet& qs) {
  Partition p = Partition::total(m.world_count());
  for (const auto& q : qs) p = meet(p, question_partition(m, q));
  return p;
}

}  // namespace qa

#endif  // QA_SEMANTICS_PARTITION_HPP
