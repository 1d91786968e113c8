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

// Ground CDCL. Conflict analysis records each resolution step, so learned
// clauses and the final empty clause come with a resolution derivation.

#ifndef QA_PROVER_CDCL_HPP
#define QA_PROVER_CDCL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qa/error.hpp"
#include "qa/prover/proof.hpp"
#include "qa/prover/refutation.hpp"
#include "qa/prover/term_bank.hpp"

namespace qa::detail {

class Cdcl {
 public:
  explicit Cdcl(std::uint64_t budget) : budget_(budget) {}

  RefutationResult run(const std::vector<InputClause>& input) {
    for (const auto& in : input) {
      Record r;
      r.rule = in.rule;
      r.side = in.side;
      std::map<std::string, int> vars;
      for (const auto& l : in.clause) {
        const int t = bank_.import_atom(l.atom, vars);
        if (!vars.empty()) throw InputError("ground solver given a clause with variables");
        r.lits.push_back(atom_index(t) << 1 | (l.negative ? 1 : 0));
      }
      std::sort(r.lits.begin(), r.lits.end());
      r.lits.erase(std::unique(r.lits.begin(), r.lits.end()), r.lits.end());
      if (tautology(r.lits)) continue;
      if (r.lits.empty()) return refuted(add(std::move(r)));
      add(std::move(r));
    }
    value_.assign(atoms_.size(), -1);
    level_.assign(atoms_.size(), 0);
    reason_.assign(atoms_.size(), -1);
    occurs_.assign(atoms_.size() * 2, {});
    for (std::size_t c = 0; c < clauses_.size(); ++c) index(static_cast<int>(c));

    // Level-0 units.
    for (std::size_t c = 0; c < clauses_.size(); ++c) {
      if (clauses_[c].lits.size() == 1) {
        const int l = clauses_[c].lits[0];
        if (lit_value(l) == 0) return refuted(analyze_final(static_cast<int>(c)));
        if (lit_value(l) < 0) assign(l, static_cast<int>(c));
      }
    }
    while (true) {
      const int conflict = propagate();
      if (conflict >= 0) {
        if (decision_level() == 0) return refuted(analyze_final(conflict));
        const auto [learned, back] = analyze(conflict);
        if (steps_ > budget_) return exhausted();
        backjump(back);
        const int uip = clauses_[static_cast<std::size_t>(learned)].lits[static_cast<std::size_t>(asserting_)];
        index(learned);
        assign(uip, learned);
        continue;
      }
      const int next = pick();
      if (next < 0) break;
      level_start_.push_back(trail_.size());
      assign(next << 1 | 1, -1);
    }
    RefutationResult result;
    result.status = RefutationStatus::kSaturated;
    result.generated = steps_;
    return result;
  }

  /// Model of the last satisfiable run, as atom to truth value.
  std::map<Formula, bool> model() const {
    std::map<Formula, bool> out;
    for (std::size_t a = 0; a < atoms_.size(); ++a) out[bank_.export_atom(atoms_[a], "X")] = value_[a] == 1;
    return out;
  }

 private:
  struct Record {
    std::vector<int> lits;  // atom index << 1 | negative, sorted
    ProofRule rule = ProofRule::kInput;
    Side side = Side::kNone;
    std::vector<int> parents;
    std::vector<int> pivots;
  };

  int atom_index(int term) {
    auto [it, inserted] = atom_ids_.emplace(term, static_cast<int>(atoms_.size()));
    if (inserted) atoms_.push_back(term);
    return it->second;
  }

  bool tautology(const std::vector<int>& lits) const {
    for (std::size_t i = 0; i + 1 < lits.size(); ++i) {
      if ((lits[i] ^ 1) == lits[i + 1]) return true;
    }
    return false;
  }

  int add(Record r) {
    clauses_.push_back(std::move(r));
    return static_cast<int>(clauses_.size()) - 1;
  }

  void index(int c) {
    for (int l : clauses_[static_cast<std::size_t>(c)].lits) occurs_[static_cast<std::size_t>(l)].push_back(c);
  }

  int lit_value(int l) const {
    const int v = value_[static_cast<std::size_t>(l >> 1)];
    if (v < 0) return -1;
    return (l & 1) ? 1 - v : v;
  }

  std::size_t decision_level() const { return level_start_.size(); }

  void assign(int l, int reason) {
    const auto a = static_cast<std::size_t>(l >> 1);
    value_[a] = (l & 1) ? 0 : 1;
    level_[a] = static_cast<int>(decision_level());
    reason_[a] = reason;
    trail_.push_back(l);
  }

  /// Scans the clauses containing each newly falsified literal.
  int propagate() {
    while (head_ < trail_.size()) {
      const int falsified = trail_[head_++] ^ 1;
      for (int c : occurs_[static_cast<std::size_t>(falsified)]) {
        int unassigned = -1, open = 0;
        bool satisfied = false;
        for (int l : clauses_[static_cast<std::size_t>(c)].lits) {
          const int v = lit_value(l);
          if (v == 1) {
            satisfied = true;
            break;
          }
          if (v < 0) {
            ++open;
            unassigned = l;
          }
        }
        if (satisfied) continue;
        if (open == 0) return c;
        if (open == 1) assign(unassigned, c);
      }
    }
    return -1;
  }

  int pick() const {
    for (std::size_t a = 0; a < atoms_.size(); ++a) {
      if (value_[a] < 0) return static_cast<int>(a);
    }
    return -1;
  }

  /// Resolves clause `c` against the reason of the atom of its literal `l`.
  int resolve_on(int c, int atom) {
    ++steps_;
    const int r = reason_[static_cast<std::size_t>(atom)];
    const auto& a = clauses_[static_cast<std::size_t>(c)].lits;
    const auto& b = clauses_[static_cast<std::size_t>(r)].lits;
    Record out;
    out.rule = ProofRule::kResolve;
    out.parents = {c, r};
    int pa = -1, pb = -1;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] >> 1 == atom) {
        pa = static_cast<int>(i);
      } else {
        out.lits.push_back(a[i]);
      }
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] >> 1 == atom) {
        pb = static_cast<int>(i);
      } else {
        out.lits.push_back(b[i]);
      }
    }
    if (pa < 0 || pb < 0) throw InternalError("cdcl: pivot missing during analysis");
    out.pivots = {pa, pb};
    std::sort(out.lits.begin(), out.lits.end());
    out.lits.erase(std::unique(out.lits.begin(), out.lits.end()), out.lits.end());
    return add(std::move(out));
  }

  /// First-UIP learning; returns the learned clause and the backjump level.
  std::pair<int, std::size_t> analyze(int conflict) {
    const int level = static_cast<int>(decision_level());
    int cur = conflict;
    std::size_t pos = trail_.size();
    while (true) {
      int at_level = 0;
      for (int l : clauses_[static_cast<std::size_t>(cur)].lits) at_level += level_[static_cast<std::size_t>(l >> 1)] == level;
      if (at_level <= 1) break;
      // Latest trail literal whose atom is in the clause.
      std::set<int> in_clause;
      for (int l : clauses_[static_cast<std::size_t>(cur)].lits) in_clause.insert(l >> 1);
      int atom = -1;
      while (pos > 0) {
        const int a = trail_[--pos] >> 1;
        if (in_clause.count(a)) {
          atom = a;
          break;
        }
      }
      if (atom < 0 || reason_[static_cast<std::size_t>(atom)] < 0) throw InternalError("cdcl: analysis ran off the trail");
      cur = resolve_on(cur, atom);
    }
    std::size_t back = 0;
    const auto& lits = clauses_[static_cast<std::size_t>(cur)].lits;
    for (std::size_t i = 0; i < lits.size(); ++i) {
      const int lv = level_[static_cast<std::size_t>(lits[i] >> 1)];
      if (lv == level) {
        asserting_ = static_cast<int>(i);
      } else {
        back = std::max(back, static_cast<std::size_t>(lv));
      }
    }
    return {cur, back};
  }

  /// At level 0 every assignment has a reason; resolving them all away yields the empty clause.
  int analyze_final(int conflict) {
    int cur = conflict;
    std::size_t pos = trail_.size();
    while (!clauses_[static_cast<std::size_t>(cur)].lits.empty()) {
      std::set<int> in_clause;
      for (int l : clauses_[static_cast<std::size_t>(cur)].lits) in_clause.insert(l >> 1);
      int atom = -1;
      while (pos > 0) {
        const int a = trail_[--pos] >> 1;
        if (in_clause.count(a)) {
          atom = a;
          break;
        }
      }
      if (atom < 0) throw InternalError("cdcl: final analysis ran off the trail");
      cur = resolve_on(cur, atom);
    }
    return cur;
  }

  void backjump(std::size_t level) {
    const std::size_t keep = level_start_[level];
    while (trail_.size() > keep) {
      const auto a = static_cast<std::size_t>(trail_.back() >> 1);
      value_[a] = -1;
      reason_[a] = -1;
      trail_.pop_back();
    }
    level_start_.resize(level);
    head_ = std::min(head_, trail_.size());
  }

  RefutationResult exhausted() const {
    RefutationResult result;
    result.status = RefutationStatus::kBudgetExhausted;
    result.generated = steps_;
    return result;
  }

  RefutationResult refuted(int empty) {
    std::set<int> needed;
    std::vector<int> stack = {empty};
    while (!stack.empty()) {
      const int id = stack.back();
      stack.pop_back();
      if (!needed.insert(id).second) continue;
      for (int p : clauses_[static_cast<std::size_t>(id)].parents) stack.push_back(p);
    }
    Proof proof;
    proof.signature = bank_.signature();
    std::map<int, int> renumber;
    for (int id : needed) {
      const Record& r = clauses_[static_cast<std::size_t>(id)];
      ProofStep s;
      s.rule = r.rule;
      s.side = r.side;
      s.pivots = r.pivots;
      for (int l : r.lits) s.clause.push_back({(l & 1) != 0, bank_.export_atom(atoms_[static_cast<std::size_t>(l >> 1)], "X")});
      for (int p : r.parents) {
        s.parents.push_back(renumber.at(p));
        s.unifiers.emplace_back();
      }
      renumber[id] = static_cast<int>(proof.steps.size());
      proof.steps.push_back(std::move(s));
    }
    proof.root = renumber.at(empty);
    RefutationResult result;
    result.status = RefutationStatus::kRefuted;
    result.proof = std::move(proof);
    result.generated = steps_;
    return result;
  }

  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  TermBank bank_;
  std::map<int, int> atom_ids_;
  std::vector<int> atoms_;
  std::vector<Record> clauses_;
  std::vector<std::vector<int>> occurs_;
  std::vector<int> value_;
  std::vector<int> level_;
  std::vector<int> reason_;
  std::vector<int> trail_;
  std::vector<std::size_t> level_start_;
  std::size_t head_ = 0;
  int asserting_ = 0;
};

}  // namespace qa::detail

namespace qa {

/// Refutes a ground clause set. `budget` bounds the resolution steps of conflict analysis.
inline RefutationResult ground_refute(const std::vector<InputClause>& clauses, std::uint64_t budget = 1000000) {
  return detail::Cdcl(budget).run(clauses);
}

}  // namespace qa

#endif  // QA_PROVER_CDCL_HPP
