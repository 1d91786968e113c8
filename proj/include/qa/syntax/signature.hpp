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

#ifndef QA_SYNTAX_SIGNATURE_HPP
#define QA_SYNTAX_SIGNATURE_HPP

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qa/error.hpp"

namespace qa {

struct FunctionInfo {
  int arity = 0;
  bool rigid = false;

  bool operator==(const FunctionInfo&) const = default;
};

inline bool is_keyword(std::string_view s) {
  return s == "forall" || s == "exists" || s == "true" || s == "false";
}

/// Identifier lexeme class: [A-Za-z_][A-Za-z0-9_]* optionally followed by apostrophes.
inline bool is_identifier(std::string_view s, bool allow_primes = false) {
  if (s.empty()) return false;
  const unsigned char first = static_cast<unsigned char>(s.front());
  if (!std::isalpha(first) && first != '_') return false;
  std::size_t i = 1;
  for (; i < s.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (!std::isalnum(c) && c != '_') break;
  }
  if (i == s.size()) return true;
  if (!allow_primes) return false;
  for (; i < s.size(); ++i) {
    if (s[i] != '\'') return false;
  }
  return true;
}

inline bool is_primed_name(std::string_view s) { return !s.empty() && s.back() == '\''; }

/// Names starting with a double underscore are reserved for fresh and Skolem symbols.
inline bool is_reserved_name(std::string_view s) { return s.size() >= 2 && s[0] == '_' && s[1] == '_'; }

inline std::string primed(std::string_view s) { return std::string(s) + "'"; }

inline std::string unprimed(std::string_view s) {
  while (!s.empty() && s.back() == '\'') s.remove_suffix(1);
  return std::string(s);
}

/// Predicate and function symbols, each function flagged rigid or not.
/// Constants are arity-0 functions; propositional letters are arity-0 predicates.
class Signature {
 public:
  Signature() = default;

  Signature& add_predicate(const std::string& name, int arity) {
    check_new(name, arity);
    predicates_[name] = arity;
    return *this;
  }

  Signature& add_function(const std::string& name, int arity, bool rigid) {
    check_new(name, arity);
    functions_[name] = FunctionInfo{arity, rigid};
    return *this;
  }

  Signature& add_constant(const std::string& name, bool rigid) { return add_function(name, 0, rigid); }

  bool has_predicate(const std::string& name) const { return predicates_.count(name) != 0; }
  bool has_function(const std::string& name) const { return functions_.count(name) != 0; }
  bool has_symbol(const std::string& name) const { return has_predicate(name) || has_function(name); }

  std::optional<int> predicate_arity(const std::string& name) const {
    auto it = predicates_.find(name);
    if (it == predicates_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<FunctionInfo> function(const std::string& name) const {
    auto it = functions_.find(name);
    if (it == functions_.end()) return std::nullopt;
    return it->second;
  }

  bool is_rigid_function(const std::string& name) const {
    auto it = functions_.find(name);
    return it != functions_.end() && it->second.rigid;
  }

  const std::map<std::string, int>& predicates() const { return predicates_; }
  const std::map<std::string, FunctionInfo>& functions() const { return functions_; }

  /// Union of two signatures; shared names must agree on kind, arity and rigidity.
  Signature merged(const Signature& other) const {
    Signature out = *this;
    for (const auto& [name, arity] : other.predicates_) {
      if (auto mine = predicate_arity(name)) {
        if (*mine != arity) throw InputError("conflicting arity for predicate '" + name + "'");
        continue;
      }
      out.add_predicate(name, arity);
    }
    for (const auto& [name, info] : other.functions_) {
      if (auto mine = function(name)) {
        if (!(*mine == info)) throw InputError("conflicting declaration for function '" + name + "'");
        continue;
      }
      out.add_function(name, info.arity, info.rigid);
    }
    return out;
  }

  /// Validation applied to signatures coming from users: primed and reserved names are rejected.
  void validate_user() const {
    auto check = [](const std::string& name) {
      if (!is_identifier(name)) throw InputError("invalid symbol name '" + name + "'");
      if (is_keyword(name)) throw InputError("symbol name '" + name + "' is a keyword");
      if (is_reserved_name(name)) throw InputError("symbol name '" + name + "' uses the reserved '__' prefix");
    };
    for (const auto& [name, arity] : predicates_) check(name);
    for (const auto& [name, info] : functions_) check(name);
  }

  bool operator==(const Signature&) const = default;

 private:
  void check_new(const std::string& name, int arity) const {
    if (!is_identifier(name, /*allow_primes=*/true)) throw InputError("invalid symbol name '" + name + "'");
    if (arity < 0) throw InputError("negative arity for '" + name + "'");
    if (has_symbol(name)) throw InputError("symbol '" + name + "' declared twice");
  }

  std::map<std::string, int> predicates_;
  std::map<std::string, FunctionInfo> functions_;
};

/// Signature file: {"predicates": {name: arity}, "functions": {name: {"arity": n, "rigid": bool}}}.
inline Signature signature_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InputError("signature: expected a JSON object");
  Signature sig;
  try {
    if (j.contains("predicates")) {
      for (const auto& [name, arity] : j.at("predicates").items()) {
        if (!arity.is_number_integer()) throw InputError("signature: arity of '" + name + "' must be an integer");
        sig.add_predicate(name, arity.get<int>());
      }
    }
    if (j.contains("functions")) {
      for (const auto& [name, info] : j.at("functions").items()) {
        if (!info.is_object() || !info.contains("arity") || !info.at("arity").is_number_integer()) {
          throw InputError("signature: function '" + name + "' needs an integer \"arity\"");
        }
        const bool rigid = info.contains("rigid") ? info.at("rigid").get<bool>() : false;
        sig.add_function(name, info.at("arity").get<int>(), rigid);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("signature: ") + e.what());
  }
  sig.validate_user();
  return sig;
}

inline nlohmann::json signature_to_json(const Signature& sig) {
  nlohmann::json j;
  j["predicates"] = nlohmann::json::object();
  j["functions"] = nlohmann::json::object();
  for (const auto& [name, arity] : sig.predicates()) j["predicates"][name] = arity;
  for (const auto& [name, info] : sig.functions()) {
    j["functions"][name] = {{"arity", info.arity}, {"rigid", info.rigid}};
  }
  return j;
}

}  // namespace qa

#endif  // QA_SYNTAX_SIGNATURE_HPP
