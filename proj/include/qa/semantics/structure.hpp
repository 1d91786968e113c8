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

#ifndef QA_SEMANTICS_STRUCTURE_HPP
#define QA_SEMANTICS_STRUCTURE_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "qa/error.hpp"
#include "qa/syntax/signature.hpp"

namespace qa {

/// Search radius for finite structure enumeration.
struct Bounds {
  int max_worlds = 2;
  int max_domain = 3;

  Bounds() = default;
  Bounds(int worlds, int domain) : max_worlds(worlds), max_domain(domain) {
    if (worlds < 1 || domain < 1) throw InputError("bounds must be at least 1");
  }
  bool operator==(const Bounds&) const = default;
};

/// Variable name to entity index.
using Assignment = std::map<std::string, int>;

/// Finite constant-domain modal structure (W, D, I) over a signature.
///
/// Worlds and entities are dense indices 0..n-1 with display names attached.
/// Every interpretation cell lives in one flat vector: a predicate table holds
/// D^arity booleans per world, a non-rigid function table D^arity entity
/// indices per world, and a rigid function table a single D^arity block shared
/// by all worlds, so the rigid-symbol invariant holds by construction.
class ModalStructure {
 public:
  struct Table {
    std::string name;
    int arity = 0;
    bool is_predicate = false;
    bool rigid = false;
    std::size_t offset = 0;
    std::size_t stride = 1;  // D^arity
    bool operator==(const Table&) const = default;
  };

  ModalStructure(Signature sig, int worlds, int domain) : sig_(std::move(sig)), worlds_(worlds), domain_(domain) {
    if (worlds < 1 || domain < 1) throw InputError("a structure needs at least one world and one entity");
    for (int w = 0; w < worlds; ++w) world_names_.push_back("w" + std::to_string(w + 1));
    for (int e = 0; e < domain; ++e) entity_names_.push_back("e" + std::to_string(e + 1));
    std::size_t offset = 0;
    auto power = [&](int arity) {
      std::size_t s = 1;
      for (int i = 0; i < arity; ++i) s *= static_cast<std::size_t>(domain);
      return s;
    };
    for (const auto& [name, arity] : sig_.predicates()) {
      pred_index_[name] = static_cast<int>(preds_.size());
      preds_.push_back({name, arity, true, false, offset, power(arity)});
      offset += preds_.back().stride * static_cast<std::size_t>(worlds);
    }
    pred_cells_ = offset;
    for (const auto& [name, info] : sig_.functions()) {
      func_index_[name] = static_cast<int>(funcs_.size());
      funcs_.push_back({name, info.arity, false, info.rigid, offset, power(info.arity)});
      offset += funcs_.back().stride * (info.rigid ? 1 : static_cast<std::size_t>(worlds));
    }
    cells_.assign(offset, 0);
  }

  const Signature& signature() const { return sig_; }
  int world_count() const { return worlds_; }
  int domain_size() const { return domain_; }

  const std::vector<std::string>& world_names() const { return world_names_; }
  const std::vector<std::string>& entity_names() const { return entity_names_; }
  void set_world_names(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) != worlds_) throw InputError("world name count does not match");
    world_names_ = std::move(names);
  }
  void set_entity_names(std::vector<std::string> names) {
    if (static_cast<int>(names.size()) != domain_) throw InputError("entity name count does not match");
    entity_names_ = std::move(names);
  }
  int world_index(const std::string& name) const { return index_of(world_names_, name, "world"); }
  int entity_index(const std::string& name) const { return index_of(entity_names_, name, "entity"); }

  const std::vector<Table>& predicate_tables() const { return preds_; }
  const std::vector<Table>& function_tables() const { return funcs_; }
  int predicate_id(const std::string& name) const {
    auto it = pred_index_.find(name);
    return it == pred_index_.end() ? -1 : it->second;
  }
  int function_id(const std::string& name) const {
    auto it = func_index_.find(name);
    return it == func_index_.end() ? -1 : it->second;
  }

  /// Row-major position of a tuple inside a D^arity block.
  std::size_t tuple_index(std::span<const int> tuple) const {
    std::size_t idx = 0;
    for (int e : tuple) {
      check_entity(e);
      idx = idx * static_cast<std::size_t>(domain_) + static_cast<std::size_t>(e);
    }
    return idx;
  }
  std::vector<int> tuple_at(std::size_t index, int arity) const {
    std::vector<int> t(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
      t[static_cast<std::size_t>(i)] = static_cast<int>(index % static_cast<std::size_t>(domain_));
      index /= static_cast<std::size_t>(domain_);
    }
    return t;
  }

  std::size_t predicate_offset(int p, int w) const {
    const Table& t = preds_[static_cast<std::size_t>(p)];
    return t.offset + static_cast<std::size_t>(w) * t.stride;
  }
  std::size_t function_offset(int f, int w) const {
    const Table& t = funcs_[static_cast<std::size_t>(f)];
    return t.rigid ? t.offset : t.offset + static_cast<std::size_t>(w) * t.stride;
  }
  int cell(std::size_t i) const { return cells_[i]; }

  bool holds(int w, const std::string& pred, std::span<const int> tuple) const {
    const int p = checked_predicate(pred, tuple.size());
    check_world(w);
    return cells_[predicate_offset(p, w) + tuple_index(tuple)] != 0;
  }
  void set_holds(int w, const std::string& pred, std::span<const int> tuple, bool value) {
    const int p = checked_predicate(pred, tuple.size());
    check_world(w);
    cells_[predicate_offset(p, w) + tuple_index(tuple)] = value ? 1 : 0;
  }
  int value(int w, const std::string& func, std::span<const int> args) const {
    const int f = checked_function(func, args.size());
    check_world(w);
    return cells_[function_offset(f, w) + tuple_index(args)];
  }
  /// For a rigid symbol the world argument is irrelevant: the one shared table is written.
  void set_value(int w, const std::string& func, std::span<const int> args, int v) {
    const int f = checked_function(func, args.size());
    check_world(w);
    check_entity(v);
    cells_[function_offset(f, w) + tuple_index(args)] = v;
  }
  void set_holds(int w, const std::string& pred, std::initializer_list<int> tuple, bool value) {
    set_holds(w, pred, std::span<const int>(tuple.begin(), tuple.size()), value);
  }
  bool holds(int w, const std::string& pred, std::initializer_list<int> tuple) const {
    return holds(w, pred, std::span<const int>(tuple.begin(), tuple.size()));
  }
  void set_value(int w, const std::string& func, std::initializer_list<int> args, int v) {
    set_value(w, func, std::span<const int>(args.begin(), args.size()), v);
  }
  int value(int w, const std::string& func, std::initializer_list<int> args) const {
    return value(w, func, std::span<const int>(args.begin(), args.size()));
  }

  /// Raw interpretation cells; predicate cells come first and take values {0,1},
  /// function cells take entity indices.
  const std::vector<int>& cells() const { return cells_; }
  std::vector<int>& mutable_cells() { return cells_; }
  std::size_t predicate_cell_count() const { return pred_cells_; }

  /// The interpretation local to world w (predicates and non-rigid functions), in cell order.
  std::vector<int> local_view(int w) const {
    std::vector<int> out;
    for (std::size_t p = 0; p < preds_.size(); ++p) {
      const std::size_t o = predicate_offset(static_cast<int>(p), w);
      out.insert(out.end(), cells_.begin() + static_cast<std::ptrdiff_t>(o),
                 cells_.begin() + static_cast<std::ptrdiff_t>(o + preds_[p].stride));
    }
    for (std::size_t f = 0; f < funcs_.size(); ++f) {
      if (funcs_[f].rigid) continue;
      const std::size_t o = function_offset(static_cast<int>(f), w);
      out.insert(out.end(), cells_.begin() + static_cast<std::ptrdiff_t>(o),
                 cells_.begin() + static_cast<std::ptrdiff_t>(o + funcs_[f].stride));
    }
    return out;
  }

  bool operator==(const ModalStructure&) const = default;

 private:
  static int index_of(const std::vector<std::string>& names, const std::string& name, const char* what) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) return static_cast<int>(i);
    }
    throw InputError(std::string("unknown ") + what + " '" + name + "'");
  }
  void check_world(int w) const {
    if (w < 0 || w >= worlds_) throw InputError("world index out of range");
  }
  void check_entity(int e) const {
    if (e < 0 || e >= domain_) throw InputError("entity index out of range");
  }
  int checked_predicate(const std::string& name, std::size_t arity) const {
    const int p = predicate_id(name);
    if (p < 0) throw InputError("predicate '" + name + "' is not interpreted");
    if (static_cast<std::size_t>(preds_[static_cast<std::size_t>(p)].arity) != arity) {
      throw InputError("wrong tuple size for predicate '" + name + "'");
    }
    return p;
  }
  int checked_function(const std::string& name, std::size_t arity) const {
    const int f = function_id(name);
    if (f < 0) throw InputError("function '" + name + "' is not interpreted");
    if (static_cast<std::size_t>(funcs_[static_cast<std::size_t>(f)].arity) != arity) {
      throw InputError("wrong argument count for function '" + name + "'");
    }
    return f;
  }

  Signature sig_;
  int worlds_;
  int domain_;
  std::vector<std::string> world_names_;
  std::vector<std::string> entity_names_;
  std::vector<Table> preds_;
  std::vector<Table> funcs_;
  std::map<std::string, int> pred_index_;
  std::map<std::string, int> func_index_;
  std::size_t pred_cells_ = 0;
  std::vector<int> cells_;
};

/// The sub-structure on the given worlds, in the given order.
inline ModalStructure restrict_worlds(const ModalStructure& m, const std::vector<int>& worlds) {
  ModalStructure out(m.signature(), static_cast<int>(worlds.size()), m.domain_size());
  std::vector<std::string> names;
  for (int w : worlds) names.push_back(m.world_names().at(static_cast<std::size_t>(w)));
  out.set_world_names(std::move(names));
  out.set_entity_names(m.entity_names());
  auto& cells = out.mutable_cells();
  for (std::size_t p = 0; p < m.predicate_tables().size(); ++p) {
    const auto& t = m.predicate_tables()[p];
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      const std::size_t src = m.predicate_offset(static_cast<int>(p), worlds[i]);
      const std::size_t dst = out.predicate_offset(static_cast<int>(p), static_cast<int>(i));
      for (std::size_t k = 0; k < t.stride; ++k) cells[dst + k] = m.cell(src + k);
    }
  }
  for (std::size_t f = 0; f < m.function_tables().size(); ++f) {
    const auto& t = m.function_tables()[f];
    for (std::size_t i = 0; i < worlds.size(); ++i) {
      const std::size_t src = m.function_offset(static_cast<int>(f), worlds[i]);
      const std::size_t dst = out.function_offset(static_cast<int>(f), static_cast<int>(i));
      for (std::size_t k = 0; k < t.stride; ++k) cells[dst + k] = m.cell(src + k);
    }
  }
  return out;
}

/// Re-expresses m over a larger signature; symbols m does not know get empty
/// predicate extensions and constant-first-entity functions.
inline ModalStructure extend_signature(const ModalStructure& m, const Signature& sig) {
  ModalStructure out(sig, m.world_count(), m.domain_size());
  out.set_world_names(m.world_names());
  out.set_entity_names(m.entity_names());
  auto& cells = out.mutable_cells();
  for (const auto& t : m.predicate_tables()) {
    const int p = out.predicate_id(t.name);
    if (p < 0 || out.predicate_tables()[static_cast<std::size_t>(p)].arity != t.arity) {
      throw InputError("signature does not extend the structure's signature at '" + t.name + "'");
    }
    for (int w = 0; w < m.world_count(); ++w) {
      const std::size_t src = m.predicate_offset(m.predicate_id(t.name), w), dst = out.predicate_offset(p, w);
      for (std::size_t k = 0; k < t.stride; ++k) cells[dst + k] = m.cell(src + k);
    }
  }
  for (const auto& t : m.function_tables()) {
    const int f = out.function_id(t.name);
    if (f < 0 || out.function_tables()[static_cast<std::size_t>(f)].arity != t.arity ||
        out.function_tables()[static_cast<std::size_t>(f)].rigid != t.rigid) {
      throw InputError("signature does not extend the structure's signature at '" + t.name + "'");
    }
    for (int w = 0; w < m.world_count(); ++w) {
      const std::size_t src = m.function_offset(m.function_id(t.name), w), dst = out.function_offset(f, w);
      for (std::size_t k = 0; k < t.stride; ++k) cells[dst + k] = m.cell(src + k);
    }
  }
  return out;
}

}  // namespace qa

#endif  // QA_SEMANTICS_STRUCTURE_HPP
