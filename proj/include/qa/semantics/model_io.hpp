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

// Model files:
//   {"worlds": [ids], "domain": [ids],
//    "interpretation": {world: {"predicates": {P: [[e, ...], ...]},
//                               "functions": {f: [[[args], value], ...]}}},
//    "rigid_functions": {f: [[[args], value], ...]}}
// A 0-ary predicate may be given as a boolean and a constant as a bare entity id.

#ifndef QA_SEMANTICS_MODEL_IO_HPP
#define QA_SEMANTICS_MODEL_IO_HPP

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "qa/error.hpp"
#include "qa/semantics/structure.hpp"
#include "qa/syntax/signature.hpp"

namespace qa {

namespace detail {

inline std::vector<std::string> read_ids(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw InputError(std::string("model: '") + what + "' must be a nonempty array");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& x : j) {
    if (!x.is_string()) throw InputError(std::string("model: '") + what + "' entries must be strings");
    if (!seen.insert(x.get<std::string>()).second) {
      throw InputError(std::string("model: duplicate ") + what + " id '" + x.get<std::string>() + "'");
    }
    out.push_back(x.get<std::string>());
  }
  return out;
}

class ModelReader {
 public:
  ModelReader(ModalStructure& m) : m_(m), assigned_(m.cells().size(), false) {}

  std::vector<int> tuple(const nlohmann::json& j, int arity, const std::string& sym) {
    if (!j.is_array() || static_cast<int>(j.size()) != arity) {
      throw InputError("model: tuple of the wrong size for '" + sym + "'");
    }
    std::vector<int> out;
    for (const auto& e : j) {
      if (!e.is_string()) throw InputError("model: entity ids must be strings in '" + sym + "'");
      out.push_back(m_.entity_index(e.get<std::string>()));
    }
    return out;
  }

  void predicates(int w, const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("model: 'predicates' must be an object");
    for (const auto& [name, ext] : j.items()) {
      const int p = m_.predicate_id(name);
      if (p < 0) throw InputError("model: unknown predicate '" + name + "'");
      const int arity = m_.predicate_tables()[static_cast<std::size_t>(p)].arity;
      if (ext.is_boolean() && arity == 0) {
        m_.set_holds(w, name, std::span<const int>{}, ext.get<bool>());
        continue;
      }
      if (!ext.is_array()) throw InputError("model: extension of '" + name + "' must be an array of tuples");
      for (const auto& t : ext) m_.set_holds(w, name, tuple(t, arity, name), true);
    }
  }

  /// Functions for world w, or the shared tables when w < 0.
  void functions(int w, const nlohmann::json& j, bool rigid_section) {
    if (!j.is_object()) throw InputError("model: function tables must be objects");
    for (const auto& [name, table] : j.items()) {
      const int f = m_.function_id(name);
      if (f < 0) throw InputError("model: unknown function '" + name + "'");
      const auto& info = m_.function_tables()[static_cast<std::size_t>(f)];
      if (rigid_section && !info.rigid) throw InputError("model: '" + name + "' is not rigid");
      if (table.is_string() && info.arity == 0) {
        set(w < 0 ? 0 : w, name, f, {}, m_.entity_index(table.get<std::string>()));
        continue;
      }
      if (!table.is_array()) throw InputError("model: table of '" + name + "' must be an array");
      for (const auto& entry : table) {
        if (!entry.is_array() || entry.size() != 2 || !entry[1].is_string()) {
          throw InputError("model: entries of '" + name + "' must be [[args], value]");
        }
        set(w < 0 ? 0 : w, name, f, tuple(entry[0], info.arity, name), m_.entity_index(entry[1].get<std::string>()));
      }
    }
  }

  void check_total() const {
    for (std::size_t f = 0; f < m_.function_tables().size(); ++f) {
      const auto& t = m_.function_tables()[f];
      const int worlds = t.rigid ? 1 : m_.world_count();
      for (int w = 0; w < worlds; ++w) {
        const std::size_t o = m_.function_offset(static_cast<int>(f), w);
        for (std::size_t k = 0; k < t.stride; ++k) {
          if (!assigned_[o + k]) throw InputError("model: function '" + t.name + "' is not total");
        }
      }
    }
  }

 private:
  void set(int w, const std::string& name, int f, const std::vector<int>& args, int value) {
    const std::size_t cell = m_.function_offset(f, w) + m_.tuple_index(args);
    if (assigned_[cell] && m_.cell(cell) != value) {
      const bool rigid = m_.function_tables()[static_cast<std::size_t>(f)].rigid;
      throw InputError(rigid ? "model: rigid function '" + name + "' differs between worlds"
                             : "model: conflicting values for '" + name + "'");
    }
    assigned_[cell] = true;
    m_.set_value(w, name, args, value);
  }

  ModalStructure& m_;
  std::vector<bool> assigned_;
};

inline nlohmann::json tuple_json(const ModalStructure& m, const std::vector<int>& t) {
  nlohmann::json out = nlohmann::json::array();
  for (int e : t) out.push_back(m.entity_names()[static_cast<std::size_t>(e)]);
  return out;
}

inline nlohmann::json function_json(const ModalStructure& m, int f, int w) {
  const auto& t = m.function_tables()[static_cast<std::size_t>(f)];
  nlohmann::json table = nlohmann::json::array();
  const std::size_t o = m.function_offset(f, w);
  for (std::size_t k = 0; k < t.stride; ++k) {
    table.push_back({tuple_json(m, m.tuple_at(k, t.arity)), m.entity_names()[static_cast<std::size_t>(m.cell(o + k))]});
  }
  return table;
}

}  // namespace detail

/// Loads a model over sig. Every function must be total; a rigid function may be
/// given once under "rigid_functions" or per world, but must agree everywhere.
inline ModalStructure model_from_json(const nlohmann::json& j, const Signature& sig) {
  try {
    if (!j.is_object()) throw InputError("model: expected a JSON object");
    const auto worlds = detail::read_ids(j.at("worlds"), "worlds");
    const auto domain = detail::read_ids(j.at("domain"), "domain");
    ModalStructure m(sig, static_cast<int>(worlds.size()), static_cast<int>(domain.size()));
    m.set_world_names(worlds);
    m.set_entity_names(domain);
    detail::ModelReader reader(m);
    if (j.contains("rigid_functions")) reader.functions(-1, j.at("rigid_functions"), true);
    if (j.contains("interpretation")) {
      const auto& interp = j.at("interpretation");
      if (!interp.is_object()) throw InputError("model: 'interpretation' must be an object");
      for (const auto& [wname, local] : interp.items()) {
        const int w = m.world_index(wname);
        if (!local.is_object()) throw InputError("model: interpretation of '" + wname + "' must be an object");
        for (const auto& [key, _] : local.items()) {
          if (key != "predicates" && key != "functions") throw InputError("model: unexpected key '" + key + "'");
        }
        if (local.contains("predicates")) reader.predicates(w, local.at("predicates"));
        if (local.contains("functions")) reader.functions(w, local.at("functions"), false);
      }
    }
    reader.check_total();
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("model: ") + e.what());
  }
}

inline nlohmann::json model_to_json(const ModalStructure& m) {
  nlohmann::json j;
  j["worlds"] = m.world_names();
  j["domain"] = m.entity_names();
  j["interpretation"] = nlohmann::json::object();
  j["rigid_functions"] = nlohmann::json::object();
  for (int w = 0; w < m.world_count(); ++w) {
    nlohmann::json local;
    local["predicates"] = nlohmann::json::object();
    local["functions"] = nlohmann::json::object();
    for (std::size_t p = 0; p < m.predicate_tables().size(); ++p) {
      const auto& t = m.predicate_tables()[p];
      nlohmann::json ext = nlohmann::json::array();
      const std::size_t o = m.predicate_offset(static_cast<int>(p), w);
      for (std::size_t k = 0; k < t.stride; ++k) {
        if (m.cell(o + k)) ext.push_back(detail::tuple_json(m, m.tuple_at(k, t.arity)));
      }
      local["predicates"][t.name] = ext;
    }
    for (std::size_t f = 0; f < m.function_tables().size(); ++f) {
      if (m.function_tables()[f].rigid) continue;
      local["functions"][m.function_tables()[f].name] = detail::function_json(m, static_cast<int>(f), w);
    }
    j["interpretation"][m.world_names()[static_cast<std::size_t>(w)]] = local;
  }
  for (std::size_t f = 0; f < m.function_tables().size(); ++f) {
    if (!m.function_tables()[f].rigid) continue;
    j["rigid_functions"][m.function_tables()[f].name] = detail::function_json(m, static_cast<int>(f), 0);
  }
  return j;
}

}  // namespace qa

#endif  // QA_SEMANTICS_MODEL_IO_HPP
