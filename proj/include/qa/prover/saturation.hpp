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

// Given-clause saturation with binary resolution and factoring. Every derived
// clause keeps its parents, pivots and unifiers so a refutation can be
// exported as a checkable Proof.

#ifndef QA_PROVER_SATURATION_HPP
#define QA_PROVER_SATURATION_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "qa/prover/proof.hpp"
#include "qa/prover/refutation.hpp"
#include "qa/prover/term_bank.hpp"

namespace qa::detail {

class Saturation {
 public:
  explicit Saturation(std::uint64_t budget) : budget_(budget) {}

  RefutationResult run(const std::vector<InputClause>& input) {
    RefutationResult result;
    for (const auto& in : input) {
      Record r;
      r.rule = in.rule;
      r.side = in.side;
      std::map<std::string, int> vars;
      for (const auto& l : in.clause) r.lits.push_back(bank_.import_atom(l.atom, vars) << 1 | (l.negative ? 1 : 0));
      std::vector<int> none;
      finish(r, none);
      // Input s = s is kept: it may be the reflexivity axiom itself.
      if (is_tautology(r.lits, false)) continue;
      if (const int id = keep(std::move(r)); id >= 0 && clauses_[static_cast<std::size_t>(id)].lits.empty()) {
        return refuted(id);
      }
    }
    std::uint64_t picks = 0;
    while (!passive_.empty() || !fifo_.empty()) {
      // Every fifth pick is the oldest clause so heavy clauses still get a turn.
      int given = -1;
      while (given < 0 && (!passive_.empty() || !fifo_.empty())) {
        int id;
        if (++picks % 5 == 0 && !fifo_.empty()) {
          id = fifo_.front();
          fifo_.pop_front();
        } else if (!passive_.empty()) {
          id = passive_.top().second;
          passive_.pop();
        } else {
          id = fifo_.front();
          fifo_.pop_front();
        }
        auto& rec = clauses_[static_cast<std::size_t>(id)];
        if (rec.activated) continue;
        rec.activated = true;
        if (!forward_subsumed(id)) given = id;
      }
      if (given < 0) break;
      activate(given);
      const int found = generate(given);
      result.generated = generated_;
      if (found >= 0) return refuted(found);
      if (generated_ > budget_) {
        result.status = RefutationStatus::kBudgetExhausted;
        return result;
      }
    }
    result.generated = generated_;
    result.status = RefutationStatus::kSaturated;
    return result;
  }

 private:
  struct Record {
    std::vector<int> lits;  // atom << 1 | negative, sorted
    int nvars = 0;
    int weight = 0;
    ProofRule rule = ProofRule::kInput;
    Side side = Side::kNone;
    std::vector<int> parents;
    std::vector<int> pivots;
    std::vector<std::vector<int>> unifiers;  // per parent: term of each parent variable, in child variables
    bool activated = false;
  };

  static int atom_of(int lit) { return lit >> 1; }
  static bool neg_of(int lit) { return lit & 1; }

  bool is_tautology(const std::vector<int>& lits, bool trivial_equations = true) const {
    for (std::size_t i = 0; i < lits.size(); ++i) {
      if (i + 1 < lits.size() && (lits[i] ^ 1) == lits[i + 1]) return true;
      const int a = atom_of(lits[i]);
      if (trivial_equations && !neg_of(lits[i]) && bank_.symbol(a) == TermBank::kEq &&
          bank_.args(a)[0] == bank_.args(a)[1]) {
        return true;
      }
    }
    return false;
  }

  // ---- unification on (term, offset) pairs -------------------------------

  void ensure(int globals) {
    if (static_cast<int>(bind_.size()) < globals) bind_.resize(static_cast<std::size_t>(globals), {-1, 0});
  }

  void deref(int& t, int& o) const {
    while (bank_.is_var(t)) {
      const auto& b = bind_[static_cast<std::size_t>(bank_.var_index(t) + o)];
      if (b.first < 0) return;
      t = b.first;
      o = b.second;
    }
  }

  bool occurs(int g, int t, int o) const {
    deref(t, o);
    if (bank_.is_var(t)) return bank_.var_index(t) + o == g;
    if (bank_.ground(t)) return false;
    for (int a : bank_.args(t)) {
      if (occurs(g, a, o)) return true;
    }
    return false;
  }

  bool unify(int s, int so, int t, int to) {
    deref(s, so);
    deref(t, to);
    const bool sv = bank_.is_var(s), tv = bank_.is_var(t);
    if (sv && tv && bank_.var_index(s) + so == bank_.var_index(t) + to) return true;
    if (sv || tv) {
      if (!sv) {
        std::swap(s, t);
        std::swap(so, to);
      }
      const int g = bank_.var_index(s) + so;
      if (occurs(g, t, to)) return false;
      bind_[static_cast<std::size_t>(g)] = {t, to};
      trail_.push_back(g);
      return true;
    }
    if (bank_.symbol(s) != bank_.symbol(t)) return false;
    if (s == t && bank_.ground(s)) return true;
    const auto& as = bank_.args(s);
    const auto& at = bank_.args(t);
    for (std::size_t i = 0; i < as.size(); ++i) {
      if (!unify(as[i], so, at[i], to)) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      bind_[static_cast<std::size_t>(trail_.back())] = {-1, 0};
      trail_.pop_back();
    }
  }

  /// Instantiates (t, o) under the current bindings; unbound globals are
  /// numbered through `local`.
  int build(int t, int o, std::map<int, int>& local) {
    deref(t, o);
    if (bank_.ground(t)) return t;
    if (bank_.is_var(t)) {
      auto [it, inserted] = local.emplace(bank_.var_index(t) + o, static_cast<int>(local.size()));
      return bank_.var(it->second);
    }
    std::vector<int> args;
    for (int a : bank_.args(t)) args.push_back(build(a, o, local));
    return bank_.app(bank_.symbol(t), std::move(args));
  }

  /// Renames variables of t through `map` (old index to new index).
  int rename(int t, std::map<int, int>& map) {
    if (bank_.ground(t)) return t;
    if (bank_.is_var(t)) {
      auto [it, inserted] = map.emplace(bank_.var_index(t), static_cast<int>(map.size()));
      return bank_.var(it->second);
    }
    std::vector<int> args;
    for (int a : bank_.args(t)) args.push_back(rename(a, map));
    return bank_.app(bank_.symbol(t), std::move(args));
  }

  /// Sorts and deduplicates the literals, renames variables canonically and
  /// pushes the renaming through the unifier terms.
  void finish(Record& r, std::vector<int>& unifier_terms) {
    std::sort(r.lits.begin(), r.lits.end());
    r.lits.erase(std::unique(r.lits.begin(), r.lits.end()), r.lits.end());
    std::map<int, int> canon;
    for (int& l : r.lits) l = rename(atom_of(l), canon) << 1 | (l & 1);
    r.nvars = static_cast<int>(canon.size());
    std::sort(r.lits.begin(), r.lits.end());
    for (int& t : unifier_terms) t = rename(t, canon);
    r.weight = 0;
    for (int l : r.lits) r.weight += bank_.size(atom_of(l));
  }

  /// Stores a clause unless it repeats an existing one; returns its id or -1.
  int keep(Record r) {
    if (!seen_.insert(r.lits).second) return -1;
    const int id = static_cast<int>(clauses_.size());
    passive_.push({r.weight, id});
    fifo_.push_back(id);
    clauses_.push_back(std::move(r));
    return id;
  }

  // ---- subsumption ---------------------------------------------------------

  bool match(int p, int t, std::vector<int>& b, std::vector<int>& tr) const {
    if (bank_.is_var(p)) {
      int& slot = b[static_cast<std::size_t>(bank_.var_index(p))];
      if (slot < 0) {
        slot = t;
        tr.push_back(bank_.var_index(p));
        return true;
      }
      return slot == t;
    }
    if (bank_.ground(p)) return p == t;
    if (bank_.is_var(t) || bank_.symbol(p) != bank_.symbol(t)) return false;
    const auto& ap = bank_.args(p);
    const auto& at = bank_.args(t);
    for (std::size_t i = 0; i < ap.size(); ++i) {
      if (!match(ap[i], at[i], b, tr)) return false;
    }
    return true;
  }

  bool subsumes_from(const Record& c, const Record& d, std::size_t k, std::vector<int>& b, std::vector<int>& tr) const {
    if (k == c.lits.size()) return true;
    const int lc = c.lits[k];
    for (int ld : d.lits) {
      if (neg_of(ld) != neg_of(lc)) continue;
      const std::size_t mark = tr.size();
      if (match(atom_of(lc), atom_of(ld), b, tr) && subsumes_from(c, d, k + 1, b, tr)) return true;
      while (tr.size() > mark) {
        b[static_cast<std::size_t>(tr.back())] = -1;
        tr.pop_back();
      }
    }
    return false;
  }

  bool subsumes(const Record& c, const Record& d) const {
    if (c.lits.size() > d.lits.size()) return false;
    std::vector<int> b(static_cast<std::size_t>(c.nvars), -1), tr;
    return subsumes_from(c, d, 0, b, tr);
  }

  std::pair<int, bool> key(int lit) const { return {bank_.symbol(atom_of(lit)), neg_of(lit)}; }

  bool forward_subsumed(int id) const {
    const Record& d = clauses_[static_cast<std::size_t>(id)];
    std::set<std::pair<int, bool>> keys;
    for (int l : d.lits) keys.insert(key(l));
    for (const auto& k : keys) {
      auto it = by_first_.find(k);
      if (it == by_first_.end()) continue;
      for (int c : it->second) {
        if (c != id && subsumes(clauses_[static_cast<std::size_t>(c)], d)) return true;
      }
    }
    return false;
  }

  void activate(int id) {
    const Record& r = clauses_[static_cast<std::size_t>(id)];
    if (!r.lits.empty()) by_first_[key(r.lits[0])].push_back(id);
    for (std::size_t i = 0; i < r.lits.size(); ++i) index_[key(r.lits[i])].push_back({id, static_cast<int>(i)});
  }

  // ---- inferences ----------------------------------------------------------

  /// Adds a derived clause; returns its id when it is empty.
  int derive(Record r, std::vector<int>& unifier_terms, const std::vector<int>& split) {
    ++generated_;
    finish(r, unifier_terms);
    if (is_tautology(r.lits)) return -1;
    std::size_t at = 0;
    for (std::size_t p = 0; p < split.size(); ++p) {
      r.unifiers.emplace_back(unifier_terms.begin() + static_cast<std::ptrdiff_t>(at),
                              unifier_terms.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(split[p])));
      at += static_cast<std::size_t>(split[p]);
    }
    const bool empty = r.lits.empty();
    const int id = keep(std::move(r));
    return empty ? id : -1;
  }

  int resolve(int a, int i, int g, int j) {
    const Record& ra = clauses_[static_cast<std::size_t>(a)];
    const Record& rg = clauses_[static_cast<std::size_t>(g)];
    const int off = ra.nvars;
    ensure(ra.nvars + rg.nvars);
    const std::size_t mark = trail_.size();
    const int la = ra.lits[static_cast<std::size_t>(i)], lg = rg.lits[static_cast<std::size_t>(j)];
    if (!unify(atom_of(la), 0, atom_of(lg), off)) {
      undo(mark);
      return -1;
    }
    Record r;
    r.rule = ProofRule::kResolve;
    r.parents = {a, g};
    r.pivots = {i, j};
    std::map<int, int> local;
    const int pa = build(atom_of(la), 0, local);
    for (int l : ra.lits) {
      const int x = build(atom_of(l), 0, local);
      if (!(x == pa && neg_of(l) == neg_of(la))) r.lits.push_back(x << 1 | (l & 1));
    }
    for (int l : rg.lits) {
      const int x = build(atom_of(l), off, local);
      if (!(x == pa && neg_of(l) == neg_of(lg))) r.lits.push_back(x << 1 | (l & 1));
    }
    std::vector<int> terms;
    for (int v = 0; v < ra.nvars; ++v) terms.push_back(build(bank_.var(v), 0, local));
    for (int v = 0; v < rg.nvars; ++v) terms.push_back(build(bank_.var(v), off, local));
    const std::vector<int> split = {ra.nvars, rg.nvars};
    undo(mark);
    return derive(std::move(r), terms, split);
  }

  int factor(int g, int i, int j) {
    const Record& rg = clauses_[static_cast<std::size_t>(g)];
    ensure(rg.nvars);
    const std::size_t mark = trail_.size();
    if (!unify(atom_of(rg.lits[static_cast<std::size_t>(i)]), 0, atom_of(rg.lits[static_cast<std::size_t>(j)]), 0)) {
      undo(mark);
      return -1;
    }
    Record r;
    r.rule = ProofRule::kFactor;
    r.parents = {g};
    r.pivots = {i, j};
    std::map<int, int> local;
    for (int l : rg.lits) r.lits.push_back(build(atom_of(l), 0, local) << 1 | (l & 1));
    std::vector<int> terms;
    for (int v = 0; v < rg.nvars; ++v) terms.push_back(build(bank_.var(v), 0, local));
    const std::vector<int> split = {rg.nvars};
    undo(mark);
    return derive(std::move(r), terms, split);
  }

  int generate(int g) {
    const std::size_t n = clauses_[static_cast<std::size_t>(g)].lits.size();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const int li = clauses_[static_cast<std::size_t>(g)].lits[i], lj = clauses_[static_cast<std::size_t>(g)].lits[j];
        if (key(li) != key(lj)) continue;
        if (const int e = factor(g, static_cast<int>(i), static_cast<int>(j)); e >= 0) return e;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      const int lg = clauses_[static_cast<std::size_t>(g)].lits[j];
      auto it = index_.find({bank_.symbol(atom_of(lg)), !neg_of(lg)});
      if (it == index_.end()) continue;
      // The partner list can grow while we iterate only through activation, which happens outside.
      const auto partners = it->second;
      for (const auto& [a, i] : partners) {
        if (const int e = resolve(a, i, g, static_cast<int>(j)); e >= 0) return e;
        if (generated_ > budget_) return -1;
      }
    }
    return -1;
  }

  // ---- proof export --------------------------------------------------------

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
    const std::string x = variable_prefix(proof.signature);
    std::map<int, int> renumber;
    for (int id : needed) {
      const Record& r = clauses_[static_cast<std::size_t>(id)];
      ProofStep s;
      s.rule = r.rule;
      s.side = r.side;
      s.pivots = r.pivots;
      for (int l : r.lits) s.clause.push_back({neg_of(l), bank_.export_atom(atom_of(l), x)});
      for (std::size_t k = 0; k < r.parents.size(); ++k) {
        s.parents.push_back(renumber.at(r.parents[k]));
        Substitution sub;
        const auto& terms = r.unifiers[k];
        for (std::size_t v = 0; v < terms.size(); ++v) sub[x + std::to_string(v)] = bank_.export_term(terms[v], x);
        s.unifiers.push_back(std::move(sub));
      }
      renumber[id] = static_cast<int>(proof.steps.size());
      proof.steps.push_back(std::move(s));
    }
    proof.root = renumber.at(empty);
    RefutationResult result;
    result.status = RefutationStatus::kRefuted;
    result.proof = std::move(proof);
    result.generated = generated_;
    return result;
  }

  std::uint64_t budget_;
  std::uint64_t generated_ = 0;
  TermBank bank_;
  std::vector<Record> clauses_;
  std::set<std::vector<int>> seen_;
  std::priority_queue<std::pair<int, int>, std::vector<std::pair<int, int>>, std::greater<>> passive_;
  std::deque<int> fifo_;
  std::map<std::pair<int, bool>, std::vector<std::pair<int, int>>> index_;
  std::map<std::pair<int, bool>, std::vector<int>> by_first_;
  std::vector<std::pair<int, int>> bind_;
  std::vector<int> trail_;
};

}  // namespace qa::detail

namespace qa {

/// Refutes a first-order clause set by saturation, within `budget` generated clauses.
inline RefutationResult saturate(const std::vector<InputClause>& clauses, std::uint64_t budget = 50000) {
  return detail::Saturation(budget).run(clauses);
}

}  // namespace qa

#endif  // QA_PROVER_SATURATION_HPP
