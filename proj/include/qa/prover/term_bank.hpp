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

#ifndef QA_PROVER_TERM_BANK_HPP
#define QA_PROVER_TERM_BANK_HPP

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "qa/error.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/signature.hpp"

namespace qa::detail {

/// Hash-consed first-order terms. Atoms are terms whose head is a predicate
/// symbol; identity is the reserved symbol 0.
class TermBank {
 public:
  static constexpr int kEq = 0;

  TermBank() { intern_symbol("=", 2, true); }

  int intern_symbol(const std::string& name, int arity, bool predicate) {
    auto it = sym_index_.find({name, predicate});
    if (it != sym_index_.end()) {
      if (syms_[static_cast<std::size_t>(it->second)].arity != arity) {
        throw InputError("symbol '" + name + "' used with two arities");
      }
      return it->second;
    }
    const int id = static_cast<int>(syms_.size());
    syms_.push_back({name, arity, predicate});
    sym_index_.emplace(std::make_pair(name, predicate), id);
    return id;
  }

  int var(int index) {
    while (static_cast<int>(var_ids_.size()) <= index) {
      const int i = static_cast<int>(var_ids_.size());
      var_ids_.push_back(make({-1, i, {}}));
    }
    return var_ids_[static_cast<std::size_t>(index)];
  }

  int app(int sym, std::vector<int> args) { return make({sym, -1, std::move(args)}); }

  bool is_var(int t) const { return node(t).var >= 0; }
  int var_index(int t) const { return node(t).var; }
  int symbol(int t) const { return node(t).sym; }
  const std::vector<int>& args(int t) const { return node(t).args; }
  int size(int t) const { return node(t).size; }
  bool ground(int t) const { return node(t).ground; }
  const std::string& symbol_name(int s) const { return syms_[static_cast<std::size_t>(s)].name; }
  int symbol_arity(int s) const { return syms_[static_cast<std::size_t>(s)].arity; }
  bool symbol_is_predicate(int s) const { return syms_[static_cast<std::size_t>(s)].predicate; }
  std::size_t symbol_count() const { return syms_.size(); }

  /// Imports a syntax term; variables are numbered through `vars`.
  int import_term(const Term& t, std::map<std::string, int>& vars) {
    if (t.is_var()) {
      auto [it, inserted] = vars.emplace(t.name(), static_cast<int>(vars.size()));
      return var(it->second);
    }
    std::vector<int> args;
    for (const Term& a : t.args()) args.push_back(import_term(a, vars));
    const int sym = intern_symbol(t.name(), static_cast<int>(args.size()), false);
    return app(sym, std::move(args));
  }

  int import_atom(const Formula& atom, std::map<std::string, int>& vars) {
    std::vector<int> args;
    for (const Term& a : atom.terms()) args.push_back(import_term(a, vars));
    if (atom.is(FormulaKind::kEq)) return app(kEq, std::move(args));
    if (!atom.is(FormulaKind::kPred)) throw InternalError("import_atom: not an atom");
    const int sym = intern_symbol(atom.symbol(), static_cast<int>(args.size()), true);
    return app(sym, std::move(args));
  }

  Term export_term(int t, const std::string& var_prefix) const {
    if (is_var(t)) return Term::var(var_prefix + std::to_string(var_index(t)));
    std::vector<Term> args;
    for (int a : node(t).args) args.push_back(export_term(a, var_prefix));
    return Term::app(symbol_name(node(t).sym), std::move(args));
  }

  Formula export_atom(int t, const std::string& var_prefix) const {
    std::vector<Term> args;
    for (int a : node(t).args) args.push_back(export_term(a, var_prefix));
    if (node(t).sym == kEq) return Formula::eq(args[0], args[1]);
    return Formula::pred(symbol_name(node(t).sym), std::move(args));
  }

  /// Signature of every symbol seen except identity.
  Signature signature() const {
    Signature s;
    for (std::size_t i = 1; i < syms_.size(); ++i) {
      if (syms_[i].predicate) {
        s.add_predicate(syms_[i].name, syms_[i].arity);
      } else {
        s.add_function(syms_[i].name, syms_[i].arity, false);
      }
    }
    return s;
  }

 private:
  struct Node {
    int sym = -1;
    int var = -1;
    std::vector<int> args;
    int size = 1;
    bool ground = true;
  };
  struct Sym {
    std::string name;
    int arity;
    bool predicate;
  };
  struct KeyHash {
    std::size_t operator()(const std::pair<int, std::vector<int>>& k) const {
      std::size_t h = std::hash<int>()(k.first);
      for (int a : k.second) h = h * 1000003u ^ std::hash<int>()(a);
      return h;
    }
  };

  const Node& node(int t) const { return nodes_[static_cast<std::size_t>(t)]; }

  int make(Node n) {
    // Variables are keyed by a negative head so they never meet applications.
    std::pair<int, std::vector<int>> key{n.var >= 0 ? -1 - n.var : n.sym, n.args};
    auto it = index_.find(key);
    if (it != index_.end()) return it->second;
    if (n.var >= 0) {
      n.ground = false;
    } else {
      for (int a : n.args) {
        n.size += node(a).size;
        n.ground = n.ground && node(a).ground;
      }
    }
    const int id = static_cast<int>(nodes_.size());
    nodes_.push_back(std::move(n));
    index_.emplace(std::move(key), id);
    return id;
  }

  std::vector<Node> nodes_;
  std::unordered_map<std::pair<int, std::vector<int>>, int, KeyHash> index_;
  std::vector<int> var_ids_;
  std::vector<Sym> syms_;
  std::map<std::pair<std::string, bool>, int> sym_index_;
};

/// A variable prefix such that prefix + digits names no symbol of sig.
inline std::string variable_prefix(const Signature& sig) {
  for (std::string prefix = "X";; prefix += "_") {
    bool clash = false;
    auto check = [&](const std::string& name) {
      if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return;
      bool digits = true;
      for (std::size_t i = prefix.size(); i < name.size(); ++i) digits = digits && std::isdigit(static_cast<unsigned char>(name[i]));
      clash = clash || digits;
    };
    for (const auto& [n, a] : sig.predicates()) check(n);
    for (const auto& [n, i] : sig.functions()) check(n);
    if (!clash) return prefix;
  }
}

}  // namespace qa::detail

#endif  // QA_PROVER_TERM_BANK_HPP
