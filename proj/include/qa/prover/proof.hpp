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

// Resolution proofs as self-contained DAGs plus a line-oriented text format:
//
//   qa-proof 1
//   signature {"predicates": ..., "functions": ...}
//   0 input left : P(c)
//   1 eq-axiom right : X0 = X0
//   2 resolve 0 0 1 2 {X0 -> c} {} : Q(X0) | R(c)
//   3 factor 2 0 1 {X0 -> c} : R(c)
//   root 3
//
// Unifiers map the parents' variables into the child's variables.

#ifndef QA_PROVER_PROOF_HPP
#define QA_PROVER_PROOF_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qa/error.hpp"
#include "qa/prover/clause.hpp"
#include "qa/prover/congruence.hpp"
#include "qa/syntax/parser.hpp"
#include "qa/syntax/signature.hpp"

namespace qa {

enum class ProofRule { kInput, kEqAxiom, kResolve, kFactor };

inline const char* rule_name(ProofRule r) {
  switch (r) {
    case ProofRule::kInput:
      return "input";
    case ProofRule::kEqAxiom:
      return "eq-axiom";
    case ProofRule::kResolve:
      return "resolve";
    case ProofRule::kFactor:
      return "factor";
  }
  return "?";
}

struct ProofStep {
  ProofRule rule = ProofRule::kInput;
  Clause clause;
  std::vector<int> parents;     // resolve: 2, factor: 1
  std::vector<int> pivots;      // resolve: literal in each parent; factor: the two merged literals
  std::vector<Substitution> unifiers;  // one per parent
  Side side = Side::kNone;      // leaves only
};

/// Steps in topological order; parents always precede children.
struct Proof {
  Signature signature;
  std::vector<ProofStep> steps;
  int root = -1;

  const ProofStep& root_step() const { return steps.at(static_cast<std::size_t>(root)); }
  std::size_t size() const { return steps.size(); }
};

namespace detail {

inline bool same_set(const Clause& a, const Clause& b) { return as_set(a) == as_set(b); }

inline Clause remove_literal(const Clause& c, const Literal& l) {
  Clause out;
  for (const auto& k : c) {
    if (!(k == l)) out.push_back(k);
  }
  return out;
}

inline bool check_step(const Proof& p, std::size_t i, std::string* why) {
  const ProofStep& s = p.steps[i];
  auto fail = [&](const std::string& msg) {
    if (why) *why = "step " + std::to_string(i) + ": " + msg;
    return false;
  };
  for (const auto& l : s.clause) {
    if (!l.atom.is(FormulaKind::kPred) && !l.atom.is(FormulaKind::kEq)) return fail("non-atomic literal");
  }
  for (int q : s.parents) {
    if (q < 0 || static_cast<std::size_t>(q) >= i) return fail("parent does not precede the step");
  }
  switch (s.rule) {
    case ProofRule::kInput:
      if (!s.parents.empty()) return fail("input step with parents");
      return true;
    case ProofRule::kEqAxiom:
      if (!s.parents.empty()) return fail("axiom step with parents");
      if (!valid_in_equality(s.clause)) return fail("not an equality axiom");
      return true;
    case ProofRule::kResolve: {
      if (s.parents.size() != 2 || s.pivots.size() != 2 || s.unifiers.size() != 2) return fail("malformed resolution");
      const Clause& c1 = p.steps[static_cast<std::size_t>(s.parents[0])].clause;
      const Clause& c2 = p.steps[static_cast<std::size_t>(s.parents[1])].clause;
      if (s.pivots[0] < 0 || s.pivots[1] < 0 || static_cast<std::size_t>(s.pivots[0]) >= c1.size() ||
          static_cast<std::size_t>(s.pivots[1]) >= c2.size()) {
        return fail("pivot out of range");
      }
      const Clause a = apply(c1, s.unifiers[0]);
      const Clause b = apply(c2, s.unifiers[1]);
      const Literal l1 = a[static_cast<std::size_t>(s.pivots[0])];
      const Literal l2 = b[static_cast<std::size_t>(s.pivots[1])];
      if (!(l1.complement() == l2)) return fail("pivots are not complementary under the unifiers");
      Clause expected = remove_literal(a, l1);
      const Clause rest = remove_literal(b, l2);
      expected.insert(expected.end(), rest.begin(), rest.end());
      if (!same_set(expected, s.clause)) return fail("resolvent does not match");
      return true;
    }
    case ProofRule::kFactor: {
      if (s.parents.size() != 1 || s.pivots.size() != 2 || s.unifiers.size() != 1) return fail("malformed factoring");
      const Clause& c = p.steps[static_cast<std::size_t>(s.parents[0])].clause;
      if (s.pivots[0] < 0 || s.pivots[1] < 0 || static_cast<std::size_t>(s.pivots[0]) >= c.size() ||
          static_cast<std::size_t>(s.pivots[1]) >= c.size() || s.pivots[0] == s.pivots[1]) {
        return fail("pivot out of range");
      }
      const Clause a = apply(c, s.unifiers[0]);
      if (!(a[static_cast<std::size_t>(s.pivots[0])] == a[static_cast<std::size_t>(s.pivots[1])])) {
        return fail("factored literals differ under the unifier");
      }
      if (!same_set(a, s.clause)) return fail("factor does not match");
      return true;
    }
  }
  return fail("unknown rule");
}

}  // namespace detail

/// Re-validates every step independently of the prover and requires an empty root.
inline bool check_proof(const Proof& p, std::string* why = nullptr) {
  if (p.root < 0 || static_cast<std::size_t>(p.root) >= p.steps.size()) {
    if (why) *why = "missing root";
    return false;
  }
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (!detail::check_step(p, i, why)) return false;
  }
  if (!p.root_step().clause.empty()) {
    if (why) *why = "root clause is not empty";
    return false;
  }
  return true;
}

/// The proof's leaves, in step order.
inline std::vector<int> proof_leaves(const Proof& p) {
  std::vector<int> out;
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    if (p.steps[i].parents.empty()) out.push_back(static_cast<int>(i));
  }
  return out;
}

namespace detail {

inline std::string substitution_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s) {
    if (!first) out += ", ";
    first = false;
    out += v + " -> " + to_string(t);
  }
  return out + "}";
}

/// Splits on `sep` at parenthesis depth zero.
inline std::vector<std::string> split_top(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && s.compare(i, sep.size(), sep) == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + sep.size();
      i = start - 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(' ') - b + 1);
}

inline Clause parse_clause(const std::string& text, const Signature& sig) {
  Clause c;
  const std::string body = trim(text);
  if (body == "$false") return c;
  for (const auto& part : split_top(body, " | ")) {
    Formula f = parse_formula(part, sig);
    const bool neg = f.is(FormulaKind::kNot);
    if (neg) f = f.body();
    if (!f.is(FormulaKind::kPred) && !f.is(FormulaKind::kEq)) throw ParseError("expected a literal", 1, 1);
    c.push_back({neg, f});
  }
  return c;
}

inline Substitution parse_substitution(const std::string& text, const Signature& sig) {
  const std::string t = trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw InputError("proof: malformed unifier '" + t + "'");
  Substitution s;
  const std::string inner = trim(t.substr(1, t.size() - 2));
  if (inner.empty()) return s;
  for (const auto& binding : split_top(inner, ", ")) {
    const auto arrow = binding.find(" -> ");
    if (arrow == std::string::npos) throw InputError("proof: malformed binding '" + binding + "'");
    s[trim(binding.substr(0, arrow))] = parse_term(trim(binding.substr(arrow + 4)), sig);
  }
  return s;
}

}  // namespace detail

inline std::string serialize_proof(const Proof& p) {
  std::ostringstream out;
  out << "qa-proof 1\n";
  out << "signature " << signature_to_json(p.signature).dump() << "\n";
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    const ProofStep& s = p.steps[i];
    out << i << ' ' << rule_name(s.rule);
    if (s.rule == ProofRule::kInput || s.rule == ProofRule::kEqAxiom) out << ' ' << side_name(s.side);
    if (s.rule == ProofRule::kResolve) {
      out << ' ' << s.parents[0] << ' ' << s.pivots[0] << ' ' << s.parents[1] << ' ' << s.pivots[1];
    }
    if (s.rule == ProofRule::kFactor) out << ' ' << s.parents[0] << ' ' << s.pivots[0] << ' ' << s.pivots[1];
    for (const auto& u : s.unifiers) out << ' ' << detail::substitution_string(u);
    out << " : " << to_string(s.clause) << "\n";
  }
  out << "root " << p.root << "\n";
  return out.str();
}

inline Proof parse_proof(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Proof p;
  auto bad = [&](const std::string& msg) { return InputError("proof: " + msg + " in '" + line + "'"); };
  if (!std::getline(in, line) || line != "qa-proof 1") throw bad("missing header");
  if (!std::getline(in, line) || line.rfind("signature ", 0) != 0) throw bad("missing signature");
  try {
    p.signature = signature_from_json(nlohmann::json::parse(line.substr(10)));
  } catch (const nlohmann::json::exception& e) {
    throw bad(e.what());
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.rfind("root ", 0) == 0) {
      p.root = std::stoi(line.substr(5));
      continue;
    }
    const auto colon = line.find(" : ");
    if (colon == std::string::npos) throw bad("missing clause");
    std::string head = line.substr(0, colon);
    ProofStep s;
    s.clause = detail::parse_clause(line.substr(colon + 3), p.signature);
    // Unifiers are the brace groups at the end of the head.
    std::vector<std::string> unifiers;
    while (!head.empty() && head.back() == '}') {
      const auto open = head.rfind('{');
      if (open == std::string::npos) throw bad("unbalanced unifier");
      unifiers.insert(unifiers.begin(), head.substr(open));
      head = detail::trim(head.substr(0, open));
    }
    std::istringstream hs(head);
    std::size_t id = 0;
    std::string rule;
    if (!(hs >> id >> rule) || id != p.steps.size()) throw bad("bad step id");
    if (rule == "input" || rule == "eq-axiom") {
      s.rule = rule == "input" ? ProofRule::kInput : ProofRule::kEqAxiom;
      std::string side;
      hs >> side;
      s.side = side == "left" ? Side::kLeft : side == "right" ? Side::kRight : Side::kNone;
    } else if (rule == "resolve") {
      s.rule = ProofRule::kResolve;
      int a = 0, i = 0, b = 0, j = 0;
      if (!(hs >> a >> i >> b >> j)) throw bad("bad resolution header");
      s.parents = {a, b};
      s.pivots = {i, j};
    } else if (rule == "factor") {
      s.rule = ProofRule::kFactor;
      int a = 0, i = 0, j = 0;
      if (!(hs >> a >> i >> j)) throw bad("bad factoring header");
      s.parents = {a};
      s.pivots = {i, j};
    } else {
      throw bad("unknown rule");
    }
    for (const auto& u : unifiers) s.unifiers.push_back(detail::parse_substitution(u, p.signature));
    p.steps.push_back(std::move(s));
  }
  return p;
}

}  // namespace qa

#endif  // QA_PROVER_PROOF_HPP
