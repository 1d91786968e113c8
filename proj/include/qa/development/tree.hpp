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

#ifndef QA_DEVELOPMENT_TREE_HPP
#define QA_DEVELOPMENT_TREE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qa/error.hpp"
#include "qa/syntax/formula.hpp"
#include "qa/syntax/printer.hpp"
#include "qa/syntax/substitution.hpp"

namespace qa {

/// Restrictions on the development grammar. The defaults give the full grammar.
struct DevelopmentVariant {
  bool allow_var_var_identity = true;
  /// When false, the existential-free fragment: no existential quantifier, and
  /// negation only directly on a leaf.
  bool allow_existential = true;
  bool allow_equality = true;

  bool operator==(const DevelopmentVariant&) const = default;
  auto operator<=>(const DevelopmentVariant&) const = default;
};

enum class DevelopmentNodeKind { kInstance, kIdentity, kNot, kAnd, kOr, kImp, kIff, kForall, kExists };

inline const char* node_kind_name(DevelopmentNodeKind k) {
  switch (k) {
    case DevelopmentNodeKind::kInstance:
      return "instance";
    case DevelopmentNodeKind::kIdentity:
      return "identity";
    case DevelopmentNodeKind::kNot:
      return "not";
    case DevelopmentNodeKind::kAnd:
      return "and";
    case DevelopmentNodeKind::kOr:
      return "or";
    case DevelopmentNodeKind::kImp:
      return "implies";
    case DevelopmentNodeKind::kIff:
      return "iff";
    case DevelopmentNodeKind::kForall:
      return "forall";
    case DevelopmentNodeKind::kExists:
      return "exists";
  }
  return "?";
}

/// Derivation of a development. Leaves are rigid instances of a pattern
/// (pattern index, pattern, substitution) or rigid identities; inner nodes are
/// the connective or quantifier applied.
struct DevelopmentTree {
  DevelopmentNodeKind kind = DevelopmentNodeKind::kInstance;
  int pattern_index = -1;
  Formula pattern = Formula::top();
  Substitution sigma;
  Formula identity = Formula::top();
  std::string var;
  std::vector<DevelopmentTree> kids;

  bool is_leaf() const { return kind == DevelopmentNodeKind::kInstance || kind == DevelopmentNodeKind::kIdentity; }
};

/// Rebuilds the formula the tree derives.
inline Formula replay(const DevelopmentTree& t) {
  switch (t.kind) {
    case DevelopmentNodeKind::kInstance:
      return substitute(t.pattern, t.sigma);
    case DevelopmentNodeKind::kIdentity:
      return t.identity;
    case DevelopmentNodeKind::kNot:
      return Formula::neg(replay(t.kids.at(0)));
    case DevelopmentNodeKind::kAnd:
      return Formula::conj(replay(t.kids.at(0)), replay(t.kids.at(1)));
    case DevelopmentNodeKind::kOr:
      return Formula::disj(replay(t.kids.at(0)), replay(t.kids.at(1)));
    case DevelopmentNodeKind::kImp:
      return Formula::imp(replay(t.kids.at(0)), replay(t.kids.at(1)));
    case DevelopmentNodeKind::kIff:
      return Formula::iff(replay(t.kids.at(0)), replay(t.kids.at(1)));
    case DevelopmentNodeKind::kForall:
      return Formula::forall(t.var, replay(t.kids.at(0)));
    case DevelopmentNodeKind::kExists:
      return Formula::exists(t.var, replay(t.kids.at(0)));
  }
  throw InternalError("replay: unknown node");
}

/// Number of leaves.
inline std::size_t leaf_count(const DevelopmentTree& t) {
  if (t.is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& k : t.kids) n += leaf_count(k);
  return n;
}

inline nlohmann::json tree_to_json(const DevelopmentTree& t) {
  nlohmann::json j;
  j["node"] = node_kind_name(t.kind);
  switch (t.kind) {
    case DevelopmentNodeKind::kInstance: {
      j["pattern"] = t.pattern_index;
      j["formula"] = to_string(replay(t));
      nlohmann::json s = nlohmann::json::object();
      for (const auto& [v, term] : t.sigma) s[v] = to_string(term);
      j["substitution"] = s;
      break;
    }
    case DevelopmentNodeKind::kIdentity:
      j["formula"] = to_string(t.identity);
      break;
    case DevelopmentNodeKind::kForall:
    case DevelopmentNodeKind::kExists:
      j["var"] = t.var;
      [[fallthrough]];
    default: {
      nlohmann::json kids = nlohmann::json::array();
      for (const auto& k : t.kids) kids.push_back(tree_to_json(k));
      j["children"] = kids;
    }
  }
  return j;
}

}  // namespace qa

#endif  // QA_DEVELOPMENT_TREE_HPP
