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

#ifndef QA_PROVER_CONGRUENCE_HPP
#define QA_PROVER_CONGRUENCE_HPP

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qa/prover/clause.hpp"
#include "qa/syntax/term.hpp"

namespace qa {

/// Naive congruence closure over a handful of terms. Variables are treated as
/// uninterpreted constants, so a clause found valid here is valid under every
/// instantiation of its variables.
class CongruenceClosure {
 public:
  int add(const Term& t) {
    std::vector<int> args;
    for (const Term& a : t.args()) args.push_back(add(a));
    const std::string head = t.is_var() ? "?" + t.name() : t.name();
    auto key = std::make_pair(head, args);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back({head, args});
    parent_.push_back(id);
    ids_.emplace(std::move(key), id);
    dirty_ = true;
    return id;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[static_cast<std::size_t>(a)] = b;
    dirty_ = true;
  }

  bool equal(int a, int b) {
    close();
    return find(a) == find(b);
  }

 private:
  struct Node {
    std::string head;
    std::vector<int> args;
  };

  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void close() {
    while (dirty_) {
      dirty_ = false;
      for (std::size_t i = 0; i < nodes_.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
          const Node& a = nodes_[i];
          const Node& b = nodes_[j];
          if (a.head != b.head || a.args.size() != b.args.size() || a.args.empty()) continue;
          if (find(static_cast<int>(i)) == find(static_cast<int>(j))) continue;
          bool same = true;
          for (std::size_t k = 0; k < a.args.size() && same; ++k) same = find(a.args[k]) == find(b.args[k]);
          if (same) merge(static_cast<int>(i), static_cast<int>(j));
        }
      }
    }
  }

  std::vector<Node> nodes_;
  std::vector<int> parent_;
  std::map<std::pair<std::string, std::vector<int>>, int> ids_;
  bool dirty_ = false;
};

/// True iff the clause holds in every structure, by the laws of identity alone
/// (predicate and function symbols uninterpreted).
inline bool valid_in_equality(const Clause& c) {
  CongruenceClosure cc;
  std::vector<std::pair<int, int>> diseqs;
  std::vector<std::pair<std::string, std::vector<int>>> true_atoms, false_atoms;
  std::vector<std::pair<int, int>> eqs;
  for (const auto& l : c) {
    if (l.atom.is(FormulaKind::kEq)) {
      const int a = cc.add(l.atom.lhs_term()), b = cc.add(l.atom.rhs_term());
      (l.negative ? eqs : diseqs).push_back({a, b});
    } else if (l.atom.is(FormulaKind::kPred)) {
      std::vector<int> args;
      for (const Term& t : l.atom.terms()) args.push_back(cc.add(t));
      (l.negative ? true_atoms : false_atoms).push_back({l.atom.symbol(), args});
    } else if (l.atom.is(FormulaKind::kTrue) != l.negative) {
      return true;
    }
  }
  for (const auto& [a, b] : eqs) cc.merge(a, b);
  for (const auto& [a, b] : diseqs) {
    if (cc.equal(a, b)) return true;
  }
  for (const auto& [p, xs] : true_atoms) {
    for (const auto& [q, ys] : false_atoms) {
      if (p != q || xs.size() != ys.size()) continue;
      bool same = true;
      for (std::size_t k = 0; k < xs.size() && same; ++k) same = cc.equal(xs[k], ys[k]);
      if (same) return true;
    }
  }
  return false;
}

}  // namespace qa

#endif  // QA_PROVER_CONGRUENCE_HPP
