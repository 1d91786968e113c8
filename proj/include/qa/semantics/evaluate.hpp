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

#ifndef QA_SEMANTICS_EVALUATE_HPP
#define QA_SEMANTICS_EVALUATE_HPP

#include <map>
#include <string>
#include <vector>

#include "qa/error.hpp"
#include "qa/semantics/structure.hpp"
#include "qa/syntax/formula.hpp"

namespace qa {

/// A formula resolved against a structure's symbol table, ready for repeated evaluation.
///
/// Every variable name gets one slot; a quantifier overwrites its slot and restores
/// it on exit, which gives shadowing for free. Compiled formulas stay valid for any
/// structure over the same signature, whatever its world and domain sizes.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const ModalStructure& layout) {
    free_ = free_variables(f);
    for (const auto& v : free_) slot(v);
    root_ = compile(f, layout);
  }

  const std::vector<std::string>& free_vars() const { return free_; }
  std::size_t slot_count() const { return slot_names_.size(); }
  /// Slot index of the i-th free variable (free variables take the first slots).
  int free_slot(std::size_t i) const { return static_cast<int>(i); }

  /// Truth at world w; `slots` must have slot_count() entries with the free ones set.
  bool eval(const ModalStructure& m, int w, std::vector<int>& slots) const { return eval_node(m, w, slots, root_); }

 private:
  struct TermNode {
    int var_slot = -1;  // >= 0 for a variable
    int func = -1;
    std::vector<int> args;
  };
  struct Node {
    FormulaKind kind = FormulaKind::kTrue;
    int symbol = -1;     // predicate id
    int slot = -1;       // bound slot of a quantifier
    std::vector<int> terms;
    int a = -1;
    int b = -1;
  };

  int slot(const std::string& v) {
    auto it = slots_.find(v);
    if (it != slots_.end()) return it->second;
    const int s = static_cast<int>(slot_names_.size());
    slots_.emplace(v, s);
    slot_names_.push_back(v);
    return s;
  }

  int compile_term(const Term& t, const ModalStructure& layout) {
    TermNode n;
    if (t.is_var()) {
      n.var_slot = slot(t.name());
    } else {
      n.func = layout.function_id(t.name());
      if (n.func < 0) throw InputError("function symbol '" + t.name() + "' is not interpreted");
      if (layout.function_tables()[static_cast<std::size_t>(n.func)].arity != static_cast<int>(t.args().size())) {
        throw InputError("function symbol '" + t.name() + "' used with the wrong arity");
      }
      for (const Term& a : t.args()) n.args.push_back(compile_term(a, layout));
    }
    terms_.push_back(std::move(n));
    return static_cast<int>(terms_.size()) - 1;
  }

  int compile(const Formula& f, const ModalStructure& layout) {
    Node n;
    n.kind = f.kind();
    switch (f.kind()) {
      case FormulaKind::kTrue:
      case FormulaKind::kFalse:
        break;
      case FormulaKind::kPred:
        n.symbol = layout.predicate_id(f.symbol());
        if (n.symbol < 0) throw InputError("predicate '" + f.symbol() + "' is not interpreted");
        if (layout.predicate_tables()[static_cast<std::size_t>(n.symbol)].arity != static_cast<int>(f.terms().size())) {
          throw InputError("predicate '" + f.symbol() + "' used with the wrong arity");
        }
        [[fallthrough]];
      case FormulaKind::kEq:
        for (const Term& t : f.terms()) n.terms.push_back(compile_term(t, layout));
        break;
      case FormulaKind::kNot:
        n.a = compile(f.body(), layout);
        break;
      case FormulaKind::kForall:
      case FormulaKind::kExists:
        n.slot = slot(f.var());
        n.a = compile(f.body(), layout);
        break;
      default:
        n.a = compile(f.left(), layout);
        n.b = compile(f.right(), layout);
        break;
    }
    nodes_.push_back(std::move(n));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int eval_term(const ModalStructure& m, int w, const std::vector<int>& slots, int t) const {
    const TermNode& n = terms_[static_cast<std::size_t>(t)];
    if (n.var_slot >= 0) return slots[static_cast<std::size_t>(n.var_slot)];
    std::size_t idx = 0;
    const auto d = static_cast<std::size_t>(m.domain_size());
    for (int a : n.args) idx = idx * d + static_cast<std::size_t>(eval_term(m, w, slots, a));
    return m.cell(m.function_offset(n.func, w) + idx);
  }

  bool eval_node(const ModalStructure& m, int w, std::vector<int>& slots, int i) const {
    const Node& n = nodes_[static_cast<std::size_t>(i)];
    switch (n.kind) {
      case FormulaKind::kTrue:
        return true;
      case FormulaKind::kFalse:
        return false;
      case FormulaKind::kPred: {
        std::size_t idx = 0;
        const auto d = static_cast<std::size_t>(m.domain_size());
        for (int t : n.terms) idx = idx * d + static_cast<std::size_t>(eval_term(m, w, slots, t));
        return m.cell(m.predicate_offset(n.symbol, w) + idx) != 0;
      }
      case FormulaKind::kEq:
        return eval_term(m, w, slots, n.terms[0]) == eval_term(m, w, slots, n.terms[1]);
      case FormulaKind::kNot:
        return !eval_node(m, w, slots, n.a);
      case FormulaKind::kAnd:
        return eval_node(m, w, slots, n.a) && eval_node(m, w, slots, n.b);
      case FormulaKind::kOr:
        return eval_node(m, w, slots, n.a) || eval_node(m, w, slots, n.b);
      case FormulaKind::kImp:
        return !eval_node(m, w, slots, n.a) || eval_node(m, w, slots, n.b);
      case FormulaKind::kIff:
        return eval_node(m, w, slots, n.a) == eval_node(m, w, slots, n.b);
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        const bool universal = n.kind == FormulaKind::kForall;
        auto& s = slots[static_cast<std::size_t>(n.slot)];
        const int saved = s;
        bool result = universal;
        for (int e = 0; e < m.domain_size(); ++e) {
          s = e;
          if (eval_node(m, w, slots, n.a) != universal) {
            result = !universal;
            break;
          }
        }
        s = saved;
        return result;
      }
    }
    return false;
  }

  std::vector<std::string> free_;
  std::map<std::string, int> slots_;
  std::vector<std::string> slot_names_;
  std::vector<TermNode> terms_;
  std::vector<Node> nodes_;
  int root_ = -1;
};

/// M, w, g |= f.
inline bool evaluate(const ModalStructure& m, int w, const Assignment& g, const Formula& f) {
  if (w < 0 || w >= m.world_count()) throw InputError("world index out of range");
  const CompiledFormula c(f, m);
  std::vector<int> slots(c.slot_count(), 0);
  for (std::size_t i = 0; i < c.free_vars().size(); ++i) {
    auto it = g.find(c.free_vars()[i]);
    if (it == g.end()) throw InputError("free variable '" + c.free_vars()[i] + "' is unassigned");
    if (it->second < 0 || it->second >= m.domain_size()) throw InputError("assignment leaves the domain");
    slots[i] = it->second;
  }
  return c.eval(m, w, slots);
}

/// Truth of a closed compiled formula at every world.
inline bool holds_globally(const ModalStructure& m, const CompiledFormula& chi) {
  std::vector<int> slots(chi.slot_count(), 0);
  for (int w = 0; w < m.world_count(); ++w) {
    if (!chi.eval(m, w, slots)) return false;
  }
  return true;
}

/// M |= chi: chi is true at every world.
inline bool holds_globally(const ModalStructure& m, const Formula& chi) {
  if (!is_closed(chi)) throw InputError("context formula must be closed");
  return holds_globally(m, CompiledFormula(chi, m));
}

/// Truth values of a compiled formula at world w under every assignment to its free
/// variables, in odometer order (last free variable fastest).
inline std::vector<bool> truth_signature(const ModalStructure& m, int w, const CompiledFormula& c,
                                         std::vector<int>& slots) {
  const std::size_t k = c.free_vars().size();
  std::vector<bool> out;
  for (std::size_t i = 0; i < k; ++i) slots[i] = 0;
  for (;;) {
    out.push_back(c.eval(m, w, slots));
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++slots[i] < m.domain_size()) break;
      slots[i] = 0;
      if (i == 0) return out;
    }
    if (k == 0) return out;
  }
}

}  // namespace qa

#endif  // QA_SEMANTICS_EVALUATE_HPP
