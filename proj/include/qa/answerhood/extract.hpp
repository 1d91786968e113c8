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

// Constructive answerhood: from an answer psi to ?phi, build a development of
// phi equivalent to psi in the context. The route is translation to a primed
// first-order sequent, Herbrand grounding, a ground refutation, an interpolant
// read off that refutation, and a sequence of syntactic repairs that turn the
// interpolant into a development.

#ifndef QA_ANSWERHOOD_EXTRACT_HPP
#define QA_ANSWERHOOD_EXTRACT_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qa/answerhood/decide.hpp"
#include "qa/answerhood/translate.hpp"
#include "qa/development/check.hpp"
#include "qa/development/enumerate.hpp"
#include "qa/error.hpp"
#include "qa/prover/cdcl.hpp"
#include "qa/prover/clausify.hpp"
#include "qa/prover/herbrand.hpp"
#include "qa/prover/interpolate.hpp"
#include "qa/syntax/printer.hpp"
#include "qa/syntax/simplify.hpp"

namespace qa {

/// Extraction stopped before producing a verified development.
class ExtractionFailure : public Error {
 public:
  ExtractionFailure(std::string step, const std::string& msg) : Error(step + ": " + msg), step_(std::move(step)) {}
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

struct TraceStep {
  std::string step;
  std::string detail;
};

struct ExtractionResult {
  Formula development = Formula::top();
  DevelopmentTree tree;
  /// chi |= forall y (psi -> development) and the converse.
  Proof forward;
  Proof backward;
  std::vector<TraceStep> trace;
};

namespace detail {

/// Replaces every atom name(t1..tn) by body[params := t1..tn]. The body's own
/// binders are renamed by substitute() when a ti would be captured.
inline Formula expand_predicate(const Formula& f, const std::string& name, const std::vector<std::string>& params,
                                const Formula& body) {
  switch (f.kind()) {
    case FormulaKind::kPred: {
      if (f.symbol() != name) return f;
      Substitution s;
      for (std::size_t i = 0; i < params.size(); ++i) s.emplace(params[i], f.terms()[i]);
      return substitute(body, s);
    }
    case FormulaKind::kNot:
      return Formula::neg(expand_predicate(f.body(), name, params, body));
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return Formula::quantifier(f.kind(), f.var(), expand_predicate(f.body(), name, params, body));
    default:
      if (f.arity() == 2) {
        return Formula::binary(f.kind(), expand_predicate(f.left(), name, params, body),
                               expand_predicate(f.right(), name, params, body));
      }
      return f;
  }
}

/// Truth constants become `guard or not guard` and `guard and not guard`.
inline Formula replace_truth_constants(const Formula& f, const Formula& guard) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
      return Formula::disj(guard, Formula::neg(guard));
    case FormulaKind::kFalse:
      return Formula::conj(guard, Formula::neg(guard));
    case FormulaKind::kNot:
      return Formula::neg(replace_truth_constants(f.body(), guard));
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return Formula::quantifier(f.kind(), f.var(), replace_truth_constants(f.body(), guard));
    default:
      if (f.arity() == 2) {
        return Formula::binary(f.kind(), replace_truth_constants(f.left(), guard),
                               replace_truth_constants(f.right(), guard));
      }
      return f;
  }
}

/// P(x1..xn) with n distinct variables.
inline bool is_plain_atom(const Formula& f) {
  if (!f.is(FormulaKind::kPred)) return false;
  std::set<std::string> seen;
  for (const Term& t : f.terms()) {
    if (!t.is_var() || !seen.insert(t.name()).second) return false;
  }
  return true;
}

inline ProveOptions verification_options(const EngineConfig& cfg) {
  ProveOptions po;
  po.budget = cfg.prover_budget;
  return po;
}

/// Proves chi |= forall ys (a -> b).
inline ProofResult prove_implication(const Formula& chi, const std::vector<std::string>& ys, const Formula& a,
                                     const Formula& b, const Signature& sig, const EngineConfig& cfg) {
  return prove({{chi}, Formula::forall_all(ys, Formula::imp(a, b)), sig}, verification_options(cfg));
}

}  // namespace detail

/// Builds a development of q.body equivalent to psi under chi, following the
/// constructive proof step by step. Throws ExtractionFailure when a bounded step
/// gives up and InternalError when a produced artifact fails verification.
inline ExtractionResult extract_development(const Formula& psi, const Question& q, const Formula& chi,
                                            const Signature& sig, const EngineConfig& cfg = {}) {
  cfg.validate();
  if (!is_closed(chi)) throw InputError("context formula must be closed");
  ExtractionResult out;
  auto trace = [&](const std::string& step, const std::string& detail) { out.trace.push_back({step, detail}); };

  // (1) An atomic question body is used as is; otherwise a fresh predicate is
  // defined in the context.
  const Formula& phi = q.body;
  Signature s1 = sig;
  Formula chi1 = chi;
  std::string pred;
  std::vector<std::string> params;
  if (detail::is_plain_atom(phi)) {
    pred = phi.symbol();
    for (const Term& t : phi.terms()) params.push_back(t.name());
    trace("fresh-predicate", "none: " + to_string(phi) + " is atomic");
  } else {
    pred = "__Q";
    params = free_variables(phi);
    s1.add_predicate(pred, static_cast<int>(params.size()));
    std::vector<Term> args;
    for (const auto& x : params) args.push_back(Term::var(x));
    const Formula def = Formula::forall_all(params, Formula::iff(Formula::pred(pred, args), phi));
    chi1 = mk_and(chi, def);
    trace("fresh-predicate", to_string(def));
  }
  std::vector<Term> param_terms;
  for (const auto& x : params) param_terms.push_back(Term::var(x));
  const Question q1{Formula::pred(pred, param_terms)};

  // (2) Translation.
  const FOSequent translated = translate_entailment({q1}, chi1, Question{psi}, s1);
  trace("translate", to_string(translated.premises.front()) + " ... |= " + to_string(translated.conclusion));

  // (3) Free variables of the answer become fresh rigid constants.
  const std::vector<std::string> ys = free_variables(psi);
  std::vector<Term> cs;
  Substitution to_constants;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const std::string c = "__c" + std::to_string(i);
    s1.add_constant(c, true);
    cs.push_back(Term::app(c));
    to_constants.emplace(ys[i], cs.back());
  }
  const Formula psi_c = substitute(psi, to_constants);
  {
    std::string d;
    for (std::size_t i = 0; i < ys.size(); ++i) d += (i ? ", " : "") + ys[i] + " := " + to_string(cs[i]);
    trace("fresh-constants", d.empty() ? "none" : d);
  }

  // (4) Interpolation sequent: primed side on the left, chi -> psi(c) on the right.
  const Signature primed_sig = primed_signature(s1);
  const std::vector<Formula> left{sharp(q1, s1), prime(chi1, s1), prime(psi_c, s1)};
  const FOSequent s8{left, Formula::imp(chi1, psi_c), primed_sig};
  trace("interpolation-sequent", to_string(left[0]) + ", " + to_string(left[1]) + ", " + to_string(left[2]) + " |= " +
                                     to_string(s8.conclusion));

  // (5) Skolemize each side separately so that every Skolem symbol is known to
  // be private to one side, then ground and refute, deepening the term pool on
  // failure.
  Grounder sk;
  std::vector<Formula> left_sk, right_sk;
  for (const auto& f : left) left_sk.push_back(sk.skolemize(f, true));
  const Formula conclusion_sk = sk.skolemize(s8.conclusion, false);
  right_sk.push_back(Formula::neg(conclusion_sk));
  Signature lift_sig = primed_sig;
  for (const auto& [name, info] : sk.introduced().functions()) lift_sig.add_function(name, info.arity, false);
  const FOSequent skolemized{left_sk, conclusion_sk, lift_sig};
  std::optional<Proof> refutation;
  for (int depth = cfg.grounding_depth; depth <= cfg.grounding_depth + cfg.grounding_retries && !refutation; ++depth) {
    std::vector<Term> pool = rigid_ground_terms(s1, depth);
    if (pool.empty()) {
      pool.push_back(Term::app("__u0"));
      if (!lift_sig.has_symbol("__u0")) lift_sig.add_constant("__u0", true);
    }
    const FOSequent ground = herbrand_ground(skolemized, pool, depth);
    Clausifier cl;
    std::vector<InputClause> input;
    std::vector<Clause> lc, rc;
    for (const auto& f : ground.premises) {
      for (auto& c : cl.clausify(f)) lc.push_back(std::move(c));
    }
    for (auto& c : cl.clausify(Formula::neg(ground.conclusion))) rc.push_back(std::move(c));
    for (const auto& c : lc) input.push_back({c, ProofRule::kInput, Side::kLeft});
    for (const auto& c : rc) input.push_back({c, ProofRule::kInput, Side::kRight});
    for (auto& e : ground_equality_instances(lc, rc)) input.push_back(std::move(e));
    RefutationResult r = ground_refute(input);
    trace("ground", "depth " + std::to_string(depth) + ", " + std::to_string(input.size()) + " clauses, " +
                        (r.status == RefutationStatus::kRefuted ? "refuted" : "not refuted"));
    if (r.status == RefutationStatus::kRefuted) refutation = std::move(r.proof);
  }
  if (!refutation) throw ExtractionFailure("ground", "no ground refutation within the grounding depth limit");

  // (6) Interpolant of the ground refutation, then lifted over private terms.
  const Formula ground_theta = ground_interpolate(*refutation);
  trace("ground-interpolant", to_string(ground_theta));
  std::set<std::string> rigid_names;
  for (const auto& [name, info] : s1.functions()) {
    if (info.rigid) rigid_names.insert(name);
  }
  const std::optional<Formula> lifted =
      lift_interpolant(ground_theta, left_sk, right_sk, lift_sig, detail::verification_options(cfg), rigid_names);
  if (!lifted) throw ExtractionFailure("lift", "could not confirm a lifted interpolant for " + to_string(ground_theta));
  trace("lifted-interpolant", to_string(*lifted));

  // (7) Unprime.
  Formula theta = unprime(*lifted);
  trace("unprimed", to_string(theta));

  // (8) Truth constants.
  const Formula guard = Formula::forall_all(params, q1.body);
  theta = detail::replace_truth_constants(theta, guard);
  trace("truth-constants", to_string(theta));

  // (9) Expand the fresh predicate back into phi.
  if (pred == "__Q") {
    theta = detail::expand_predicate(theta, pred, params, phi);
    trace("expand-predicate", to_string(theta));
  }

  // (10) Constants back to the answer's free variables.
  for (std::size_t i = 0; i < ys.size(); ++i) theta = replace_term(theta, cs[i], Term::var(ys[i]));
  trace("regeneralize", to_string(theta));

  const Formula simplified = simplify(theta);
  if (simplified != theta && check_development(simplified, {phi}, sig, cfg.variant)) {
    theta = simplified;
    trace("simplify", to_string(theta));
  }

  auto tree = check_development(theta, {phi}, sig, cfg.variant);
  if (!tree) {
    if (cfg.variant != DevelopmentVariant{} && check_development(theta, {phi}, sig)) {
      throw ExtractionFailure("development-check", to_string(theta) + " is outside the selected variant");
    }
    throw InternalError("extraction produced a non-development: " + to_string(theta));
  }
  ProofResult fwd = detail::prove_implication(chi, ys, psi, theta, sig, cfg);
  ProofResult bwd = detail::prove_implication(chi, ys, theta, psi, sig, cfg);
  for (const ProofResult* r : {&fwd, &bwd}) {
    if (r->status == ProofStatus::kCounterexampleFound) {
      throw InternalError("extraction produced a non-equivalent formula: " + to_string(theta));
    }
    if (r->status != ProofStatus::kProved) {
      throw ExtractionFailure("verify", "prover budget exhausted on the equivalence with " + to_string(theta));
    }
  }
  out.development = theta;
  out.tree = std::move(*tree);
  out.forward = std::move(*fwd.proof);
  out.backward = std::move(*bwd.proof);
  trace("verify", "development and equivalence proved");
  return out;
}

/// A development of q.body, and equivalent to psi under chi in both directions.
inline bool verify_extraction(const ExtractionResult& r, const Formula& psi, const Question& q, const Formula& chi,
                              const Signature& sig, const EngineConfig& cfg = {}) {
  if (!check_development(r.development, {q.body}, sig, cfg.variant)) return false;
  const std::vector<std::string> ys = free_variables(psi);
  for (const auto& v : free_variables(r.development)) {
    if (std::find(ys.begin(), ys.end(), v) == ys.end()) return false;
  }
  return detail::prove_implication(chi, ys, psi, r.development, sig, cfg).status == ProofStatus::kProved &&
         detail::prove_implication(chi, ys, r.development, psi, sig, cfg).status == ProofStatus::kProved;
}

}  // namespace qa

#endif  // QA_ANSWERHOOD_EXTRACT_HPP
