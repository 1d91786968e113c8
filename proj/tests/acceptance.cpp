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

// Acceptance gate. One PASS/FAIL line per criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "qa/answerhood.hpp"
#include "qa/development.hpp"
#include "qa/semantics.hpp"
#include "qa/syntax.hpp"
#include "test_support.hpp"

namespace {

using namespace qa;
using testing::F;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Criterion 6 tallies every engine query the gate runs with cross-checking on.
struct Consistency {
  int queries = 0;
  int violations = 0;
  std::vector<std::string> examples;
} consistency;

Verdict checked_decide(const QuestionSet& qs, const Formula& chi, const Question& q, const Signature& sig,
                       EngineConfig cfg = {}) {
  cfg.cross_check = true;
  ++consistency.queries;
  try {
    return decide_entailment(qs, chi, q, sig, cfg);
  } catch (const InternalError& e) {
    ++consistency.violations;
    if (consistency.examples.size() < 3) consistency.examples.push_back(e.what());
    return Verdict{};
  }
}

Signature story_sig() {
  Signature s;
  s.add_predicate("P", 1).add_predicate("I", 1).add_predicate("L", 1).add_predicate("F", 1).add_predicate("R", 0);
  s.add_constant("j", true).add_constant("mary", true).add_constant("s", true).add_constant("c", true);
  s.add_constant("d", true).add_function("m", 1, false);
  return s;
}

Question Q(const std::string& text, const Signature& s) { return Question{F(text, s)}; }

// --- 1: worked examples ----------------------------------------------------

Outcome worked_examples() {
  Outcome out;
  std::ostringstream notes;
  auto item = [&](const char* name, const std::function<bool()>& body) {
    const auto t0 = Clock::now();
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      notes << " [" << name << " threw: " << e.what() << "]";
    }
    const double dt = seconds_since(t0);
    if (!ok || dt >= 1.0) {
      out.pass = false;
      notes << " " << name << (ok ? "" : " wrong") << (dt >= 1.0 ? " slow" : "");
    }
    notes << " " << name << "=" << static_cast<int>(dt * 1000) << "ms";
  };
  const Signature s = story_sig();
  const Formula top = Formula::top();
  const Formula iff = F("forall x. (I(x) <-> P(x))", s);

  item("a", [&] { return checked_decide({Q("P(x)", s)}, top, Q("forall x. P(x)", s), s).kind == VerdictKind::kEntailed; });
  item("b", [&] {
    return checked_decide({Q("I(x)", s)}, iff, Q("P(x)", s), s).kind == VerdictKind::kEntailed &&
           checked_decide({Q("P(x)", s)}, iff, Q("I(x)", s), s).kind == VerdictKind::kEntailed;
  });
  item("c", [&] {
    return checked_decide({Q("L(m(j))", s)}, F("s = m(j)", s), Q("L(s)", s), s).kind == VerdictKind::kEntailed;
  });
  item("d", [&] {
    const Formula psi = F("I(j)", s);
    const Question q = Q("P(x)", s);
    if (checked_decide({q}, iff, Question{psi}, s).kind != VerdictKind::kEntailed) return false;
    const ExtractionResult r = extract_development(psi, q, iff, s);
    if (!verify_extraction(r, psi, q, iff, s)) return false;
    ExtractionResult manual;
    manual.development = F("P(j)", s);
    manual.tree = *check_development(manual.development, {q.body}, s);
    return verify_extraction(manual, psi, q, iff, s);
  });
  item("e", [&] {
    const std::vector<Formula> phis{F("P(x)", s)};
    return check_development(F("P(c) & P(d)", s), phis, s).has_value() &&
           check_development(F("exists x. (P(x) & ~(x = c))", s), phis, s).has_value();
  });
  item("f", [&] {
    Signature r;
    r.add_predicate("R", 2).add_constant("c", true).add_constant("d", false);
    const auto t = check_development(F("R(c, d)", r), {F("R(x, d)", r)}, r);
    return t && t->kind == DevelopmentNodeKind::kInstance && !check_development(F("R(c, d)", r), {F("R(x, y)", r)}, r);
  });
  item("g", [&] {
    const Question q = Q("F(j)", s);
    const Verdict v = checked_decide({q}, top, Q("R", s), s);
    if (v.kind != VerdictKind::kNotEntailed || !v.countermodel) return false;
    const Countermodel& cm = *v.countermodel;
    const testing::NaiveEvaluator oracle(cm.model);
    return cm.model.world_count() == 2 && oracle.agree(cm.w, cm.v, q.body) && !oracle.agree(cm.w, cm.v, F("R", s));
  });
  item("h", [&] {
    const std::vector<std::string> corpus = {"P(x)", "I(x)", "L(x)", "F(j)", "L(m(j))", "P(x) & I(x)", "R"};
    for (const auto& text : corpus) {
      for (const char* answer : {"R | ~R", "R & ~R", "forall y. (L(y) | ~L(y))", "exists y. (I(y) & ~I(y))"}) {
        if (checked_decide({Q(text, s)}, top, Q(answer, s), s).kind != VerdictKind::kEntailed) return false;
      }
    }
    return true;
  });
  out.detail = notes.str();
  return out;
}

// --- 2: developments are answers --------------------------------------------

// Grammar-directed generator honouring a variant; sizes are node counts.
class VariantDevelopments {
 public:
  VariantDevelopments(const Signature& sig, Formula phi, DevelopmentVariant v, unsigned seed)
      : phi_(std::move(phi)), v_(v), rng_(seed) {
    for (const auto& [name, info] : sig.functions()) {
      if (info.rigid && info.arity == 0) rigid_.push_back(Term::app(name));
    }
  }

  Formula any(int depth, std::vector<std::string> scope) {
    if (depth <= 0) return leaf(scope);
    switch (pick(8)) {
      case 0:
        return leaf(scope);
      case 1:
        return Formula::neg(negatable(depth - 1, scope));
      case 2:
        return Formula::conj(any(depth - 1, scope), any(depth - 1, scope));
      case 3:
        return Formula::disj(any(depth - 1, scope), any(depth - 1, scope));
      case 4:
        return Formula::imp(negatable(depth - 1, scope), any(depth - 1, scope));
      case 5:
        return Formula::iff(negatable(depth - 1, scope), negatable(depth - 1, scope));
      default: {
        const std::string x = "v" + std::to_string(pick(2));
        if (std::find(scope.begin(), scope.end(), x) == scope.end()) scope.push_back(x);
        const bool exists = v_.allow_existential && pick(2) == 0;
        Formula body = any(depth - 1, scope);
        return exists ? Formula::exists(x, body) : Formula::forall(x, body);
      }
    }
  }

 private:
  Formula negatable(int depth, const std::vector<std::string>& scope) {
    return v_.allow_existential ? any(depth, scope) : leaf(scope);
  }

  Formula leaf(const std::vector<std::string>& scope) {
    std::vector<Term> pool = rigid_;
    for (const auto& x : scope) pool.push_back(Term::var(x));
    if (v_.allow_equality && pick(3) == 0) {
      const Term a = pool[pick(pool.size())], b = pool[pick(pool.size())];
      if (v_.allow_var_var_identity || !(a.is_var() && b.is_var())) return Formula::eq(a, b);
    }
    Substitution s;
    for (const auto& x : free_variables(phi_)) s.emplace(x, pool[pick(pool.size())]);
    return substitute(phi_, s);
  }

  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Formula phi_;
  DevelopmentVariant v_;
  std::vector<Term> rigid_;
  std::mt19937 rng_;
};

std::vector<DevelopmentVariant> all_variants() {
  std::vector<DevelopmentVariant> out;
  for (int bits = 0; bits < 8; ++bits) {
    DevelopmentVariant v;
    v.allow_var_var_identity = !(bits & 1);
    v.allow_existential = !(bits & 2);
    v.allow_equality = !(bits & 4);
    out.push_back(v);
  }
  return out;
}

struct Pair {
  Formula phi;
  Formula psi;
  DevelopmentVariant variant;
};

std::vector<Pair> development_pairs(const Signature& s, std::string* problem) {
  const std::vector<Formula> phis = {F("P(x)", s), F("~P(x)", s), F("P(d)", s), F("P(x) & ~P(d)", s),
                                     F("P(x) -> P(y)", s)};
  std::vector<Pair> out;
  std::set<std::pair<Formula, Formula>> seen;
  unsigned seed = 1;
  for (const auto& v : all_variants()) {
    for (const auto& phi : phis) {
      VariantDevelopments gen(s, phi, v, seed++);
      int kept = 0;
      for (int tries = 0; tries < 400 && kept < 6; ++tries) {
        const Formula psi = gen.any(3, {});
        if (psi.size() > 7 || !seen.insert({phi, psi}).second) continue;
        if (!check_development(psi, {phi}, s, v)) {
          *problem = "generator produced a non-development " + to_string(psi);
          return {};
        }
        out.push_back({phi, psi, v});
        ++kept;
      }
    }
  }
  return out;
}

std::vector<Pair> pairs_for_consistency;

Outcome development_entailment_suite() {
  const auto t0 = Clock::now();
  const Signature s = testing::monadic_sig();
  std::string problem;
  const auto pairs = development_pairs(s, &problem);
  if (!problem.empty()) return {false, problem};
  std::set<DevelopmentVariant> variants;
  int countermodels = 0;
  std::string first;
  for (const auto& p : pairs) {
    variants.insert(p.variant);
    if (!check_development_entails(p.phi, p.psi, s, Bounds(2, 3), p.variant).passed) {
      if (!countermodels++) first = to_string(p.phi) + " / " + to_string(p.psi);
    }
  }
  pairs_for_consistency = pairs;
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << pairs.size() << " pairs, " << variants.size() << " variants, " << countermodels << " countermodels, " << dt
    << " s";
  if (!first.empty()) d << "; first: " << first;
  return {pairs.size() >= 200 && variants.size() == 8 && countermodels == 0 && dt <= 60.0, d.str()};
}

// --- 3: propositional answers to ?p -----------------------------------------------

Outcome propositional_answers() {
  const auto t0 = Clock::now();
  const Signature s = testing::prop_sig();
  const Formula p = F("p", s), q = F("q", s);
  // Row r of the truth table is (p, q) = (r & 2, r & 1).
  auto row = [&](int r) {
    return Formula::conj((r & 2) ? p : Formula::neg(p), (r & 1) ? q : Formula::neg(q));
  };
  int agree = 0;
  std::set<int> answer_tables;
  for (int table = 0; table < 16; ++table) {
    std::vector<Formula> rows;
    for (int r = 0; r < 4; ++r) {
      if (table & (1 << r)) rows.push_back(row(r));
    }
    const Formula f = rows.empty() ? Formula::bottom() : Formula::disj_all(rows);
    // Finite oracle: two worlds with valuations r1, r2 that agree on p must agree on f.
    bool oracle = true;
    for (int r1 = 0; r1 < 4; ++r1) {
      for (int r2 = 0; r2 < 4; ++r2) {
        const bool same_p = ((r1 & 2) != 0) == ((r2 & 2) != 0);
        const bool same_f = ((table >> r1) & 1) == ((table >> r2) & 1);
        if (same_p && !same_f) oracle = false;
      }
    }
    const Verdict v = checked_decide({Question{p}}, Formula::top(), Question{f}, s);
    const bool engine = v.kind == VerdictKind::kEntailed;
    if (v.kind != VerdictKind::kUnknown && engine == oracle) ++agree;
    if (oracle) answer_tables.insert(table);
  }
  // Equivalents of true, false, p, ~p: tables 1111, 0000, rows 2,3 and rows 0,1.
  const std::set<int> expected = {0b1111, 0b0000, 0b1100, 0b0011};
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << agree << "/16 agree, " << answer_tables.size() << " answers, " << dt << " s";
  return {agree == 16 && answer_tables == expected && dt <= 1.0, d.str()};
}

// --- 4: translation correspondence ---------------------------------------------

std::vector<Formula> formula_pool(const Signature& s, const std::vector<std::string>& vars, unsigned seed,
                                  std::size_t n, std::vector<Formula> fixed) {
  testing::RandomFormulas gen(s, vars, seed);
  std::set<Formula> seen(fixed.begin(), fixed.end());
  while (fixed.size() < n) {
    const Formula f = gen.formula(3);
    if (seen.insert(f).second) fixed.push_back(f);
  }
  return fixed;
}

Outcome translation_correspondence() {
  const auto t0 = Clock::now();
  const Signature prop = testing::prop_sig(), mono = testing::monadic_sig();
  struct Load {
    const Signature* sig;
    std::vector<Formula> pool;
  };
  const std::vector<Load> loads = {
      {&prop, formula_pool(prop, {"x"}, 17, 20, {F("p", prop), F("~q", prop), F("p & q", prop), F("p -> q", prop)})},
      {&mono, formula_pool(mono, {"x", "y"}, 29, 30,
                           {F("P(x)", mono), F("forall x. P(x)", mono), F("P(d)", mono), F("x = d", mono),
                            F("exists y. (P(y) & ~(y = x))", mono)})},
  };
  std::size_t checks = 0, agree = 0, formulas = 0;
  for (const auto& load : loads) {
    formulas += load.pool.size();
    std::vector<Formula> sharps;
    for (const auto& f : load.pool) sharps.push_back(sharp(Question{f}, *load.sig));
    for (const auto& m : enumerate_structures(*load.sig, Bounds(2, 2))) {
      if (m.world_count() != 2) continue;
      const testing::NaiveEvaluator oracle(m);
      for (std::size_t i = 0; i < load.pool.size(); ++i) {
        const Partition part = question_partition(m, Question{load.pool[i]});
        for (int w = 0; w < 2; ++w) {
          for (int v = 0; v < 2; ++v) {
            const ModalStructure doubled = two_world_correspondence(m, w, v);
            const bool related = part.related(w, v);
            ++checks;
            agree += related == oracle.agree(w, v, load.pool[i]) && related == holds_globally(doubled, sharps[i]) &&
                     related == testing::NaiveEvaluator(doubled).eval(0, sharps[i], {});
          }
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  std::ostringstream d;
  d << formulas << " formulas, " << agree << "/" << checks << " agree, " << dt << " s";
  return {formulas == 50 && checks > 0 && agree == checks && dt <= 30.0, d.str()};
}

// --- 5: extraction round trip ---------------------------------------------------

Outcome extraction_round_trip() {
  const Signature s = story_sig();
  struct Triple {
    const char* answer;
    const char* question;
    const char* context;
  };
  const std::vector<Triple> corpus = {
      {"I(j)", "P(x)", "forall x. (I(x) <-> P(x))"},
      {"L(s)", "L(m(j))", "s = m(j)"},
      {"forall x. P(x)", "P(x)", "true"},
      {"L(j)", "L(x)", "true"},
      {"~L(j)", "L(x)", "true"},
      {"L(j) | L(mary)", "L(x)", "true"},
      {"L(j) & L(mary)", "L(x)", "true"},
      {"forall x. (L(x) -> x = j)", "L(x)", "true"},
      {"forall x. (L(x) <-> x = j)", "L(x)", "true"},
      {"exists x. L(x)", "L(x)", "true"},
      {"~exists x. L(x)", "L(x)", "true"},
      {"exists x. (L(x) & ~(x = j))", "L(x)", "true"},
      {"R | ~R", "F(j)", "true"},
      {"~exists x. (I(x) & F(x))", "I(x) & F(x)", "true"},
  };
  int ok = 0;
  std::ostringstream d;
  for (const auto& t : corpus) {
    const Formula psi = F(t.answer, s), chi = F(t.context, s);
    const Question q = Q(t.question, s);
    try {
      if (checked_decide({q}, chi, Question{psi}, s).kind != VerdictKind::kEntailed) {
        d << " [not entailed: " << t.answer << "]";
        continue;
      }
      const ExtractionResult r = extract_development(psi, q, chi, s);
      // Symbol condition: only the question's own symbols and rigid symbols survive.
      std::set<std::string> allowed = symbol_names(q.body);
      for (const auto& [name, info] : s.functions()) {
        if (info.rigid) allowed.insert(name);
      }
      bool symbols_ok = true;
      for (const auto& n : symbol_names(r.development)) symbols_ok &= allowed.count(n) > 0;
      if (!symbols_ok) d << " [symbols: " << to_string(r.development) << "]";
      if (symbols_ok && verify_extraction(r, psi, q, chi, s)) ++ok;
    } catch (const Error& e) {
      d << " [" << t.answer << ": " << e.what() << "]";
    }
  }
  return {ok == static_cast<int>(corpus.size()) && corpus.size() >= 10,
          std::to_string(ok) + "/" + std::to_string(corpus.size()) + " triples extracted and verified" + d.str()};
}

// --- 6: engine consistency -------------------------------------------------------

Outcome engine_consistency() {
  const Signature mono = testing::monadic_sig(), prop = testing::prop_sig();
  EngineConfig cfg;
  cfg.prover_budget = 3000;
  for (const auto& p : pairs_for_consistency) checked_decide({Question{p.phi}}, Formula::top(), Question{p.psi}, mono, cfg);
  for (const auto* sig : {&prop, &mono}) {
    testing::RandomFormulas gen(*sig, {"x"}, 41);
    for (int i = 0; i < 100; ++i) {
      const Formula a = gen.formula(2), b = gen.formula(2);
      checked_decide({Question{a}}, Formula::top(), Question{b}, *sig, cfg);
    }
  }
  std::string d = std::to_string(consistency.violations) + " violations in " + std::to_string(consistency.queries) +
                  " cross-checked queries";
  for (const auto& e : consistency.examples) d += "; " + e;
  return {consistency.violations == 0, d};
}

// --- 7: determinism ---------------------------------------------------------------

Outcome determinism() {
  const auto cases = testing::golden_cases();
  auto suite = [&] {
    std::string all;
    for (const auto& c : cases) {
      const cli::RunResult r = testing::run_case(c.args, true);
      all += "== " + c.name + " " + std::to_string(r.exit_code) + "\n" + testing::render(r);
    }
    return all;
  };
  const std::string first = suite(), second = suite();
  int golden_mismatch = 0, tptp = 0;
  for (const auto& c : cases) {
    tptp += std::find(c.args.begin(), c.args.end(), "--tptp") != c.args.end();
    const cli::RunResult r = testing::run_case(c.args, true);
    golden_mismatch += testing::render(r) != testing::read_text(testing::golden_path(c)) || r.exit_code != c.exit_code;
  }
  std::ostringstream d;
  d << cases.size() << " golden cases (" << tptp << " TPTP), runs " << (first == second ? "identical" : "differ")
    << ", " << golden_mismatch << " golden mismatches";
  return {first == second && golden_mismatch == 0 && tptp > 0, d.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  // 6 runs last: it sums the cross-checked queries of every other criterion.
  const std::vector<Criterion> criteria = {
      {1, "worked examples", worked_examples},
      {2, "development entails question (generated pairs)", development_entailment_suite},
      {3, "propositional answers to ?p", propositional_answers},
      {4, "translation correspondence", translation_correspondence},
      {5, "extraction round trip", extraction_round_trip},
      {7, "deterministic CLI golden suite", determinism},
      {6, "engine consistency", engine_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail
              << std::endl;
  }
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
