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

#include <gtest/gtest.h>

#include <array>
#include <string>
#include <vector>

#include "qa/answerhood.hpp"
#include "test_support.hpp"

namespace qa {
namespace {

using testing::F;

Signature story_sig() {
  Signature s;
  s.add_predicate("P", 1).add_predicate("I", 1).add_predicate("L", 1).add_predicate("F", 1).add_predicate("R", 0);
  s.add_constant("j", true).add_constant("mary", true).add_constant("s", true).add_constant("c", true);
  s.add_constant("d", false).add_function("m", 1, false);
  return s;
}

// Checks a countermodel with the naive evaluator: chi holds everywhere, w and v
// agree on every question in qs under every assignment, and disagree on q.
bool witnesses(const Countermodel& cm, const QuestionSet& qs, const Formula& chi, const Question& q) {
  const ModalStructure& m = cm.model;
  testing::NaiveEvaluator n(m);
  for (int w = 0; w < m.world_count(); ++w) {
    if (!n.eval(w, chi, {})) return false;
  }
  auto agree = [&](const Formula& f) {
    const auto xs = free_variables(f);
    std::vector<int> idx(xs.size(), 0);
    while (true) {
      Assignment g;
      for (std::size_t i = 0; i < xs.size(); ++i) g[xs[i]] = idx[i];
      if (n.eval(cm.w, f, g) != n.eval(cm.v, f, g)) return false;
      std::size_t k = idx.size();
      for (; k > 0; --k) {
        if (++idx[k - 1] < m.domain_size()) break;
        idx[k - 1] = 0;
      }
      if (k == 0) return true;
    }
  };
  for (const auto& p : qs) {
    if (!agree(p.body)) return false;
  }
  return !agree(q.body);
}

TEST(TranslateTest, Examples) {
  Signature s = story_sig();
  FOSequent t = translate_entailment({Question{F("P(x)", s)}}, Formula::top(), Question{F("L(j)", s)}, s);
  ASSERT_EQ(t.premises.size(), 3u);
  EXPECT_EQ(to_string(t.premises[0]), "forall x. (P(x) <-> P'(x))");
  EXPECT_EQ(to_string(t.premises[1]), "true");
  EXPECT_EQ(to_string(t.conclusion), "L(j) <-> L'(j)");

  t = translate_entailment({Question{F("I(x)", s)}}, F("forall x. (I(x) <-> P(x))", s), Question{F("P(x)", s)}, s);
  EXPECT_EQ(to_string(t.premises[2]), "forall x. (I'(x) <-> P'(x))");
  EXPECT_EQ(to_string(t.conclusion), "forall x. (P(x) <-> P'(x))");

  t = translate_entailment({Question{F("L(m(j))", s)}}, F("s = m(j)", s), Question{F("L(s)", s)}, s);
  EXPECT_EQ(to_string(t.premises[0]), "L(m(j)) <-> L'(m'(j))");
  EXPECT_EQ(to_string(t.premises[1]), "s = m(j)");
  EXPECT_EQ(to_string(t.premises[2]), "s = m'(j)");
  EXPECT_EQ(to_string(t.conclusion), "L(s) <-> L'(s)");
  EXPECT_TRUE(t.signature.has_symbol("m'"));
  EXPECT_FALSE(t.signature.has_symbol("j'"));

  EXPECT_THROW(translate_entailment({}, F("P(x)", s), Question{F("L(j)", s)}, s), InputError);
}

TEST(DecideEntailmentTest, Examples) {
  Signature s = story_sig();
  auto decide = [&](const char* phi, const char* chi, const char* psi) {
    return decide_entailment({Question{F(phi, s)}}, F(chi, s), Question{F(psi, s)}, s);
  };
  Verdict v = decide("P(x)", "true", "forall x. P(x)");
  ASSERT_EQ(v.kind, VerdictKind::kEntailed);
  EXPECT_TRUE(check_proof(*v.proof));
  EXPECT_EQ(decide("I(x)", "forall x. (I(x) <-> P(x))", "P(x)").kind, VerdictKind::kEntailed);
  EXPECT_EQ(decide("P(x)", "forall x. (I(x) <-> P(x))", "I(x)").kind, VerdictKind::kEntailed);
  EXPECT_EQ(decide("L(m(j))", "s = m(j)", "L(s)").kind, VerdictKind::kEntailed);
  EXPECT_EQ(decide("P(x)", "true", "I(x)").kind, VerdictKind::kNotEntailed);

  v = decide("F(j)", "true", "R");
  ASSERT_EQ(v.kind, VerdictKind::kNotEntailed);
  EXPECT_EQ(v.countermodel->model.world_count(), 2);
  EXPECT_TRUE(witnesses(*v.countermodel, {Question{F("F(j)", s)}}, Formula::top(), Question{F("R", s)}));
}

TEST(DecideEntailmentTest, NonRigidNamesAreNotAnswers) {
  Signature s = story_sig();
  // d is non-rigid: "P(d)" does not answer ?P(x).
  Verdict v = is_answer(F("P(d)", s), Question{F("P(x)", s)}, Formula::top(), s);
  ASSERT_EQ(v.kind, VerdictKind::kNotEntailed);
  EXPECT_TRUE(witnesses(*v.countermodel, {Question{F("P(x)", s)}}, Formula::top(), Question{F("P(d)", s)}));
}

TEST(DecideEntailmentTest, UnknownWhenBothGiveUp) {
  Signature s = story_sig();
  EngineConfig cfg;
  cfg.bounds = Bounds(2, 1);
  cfg.prover_budget = 1;
  // Valid, but a single clause of budget cannot show it.
  Verdict v = decide_entailment({Question{F("P(x)", s)}, Question{F("I(x)", s)}}, F("forall x. (L(x) <-> (P(x) & I(x)))", s),
                                Question{F("exists x. L(x)", s)}, s, cfg);
  EXPECT_EQ(v.kind, VerdictKind::kUnknown);
  EXPECT_FALSE(v.proof);
  EXPECT_FALSE(v.countermodel);
}

TEST(DecideEntailmentTest, CrossCheckAgrees) {
  Signature s = story_sig();
  EngineConfig cfg;
  cfg.cross_check = true;
  for (const auto& [phi, psi] : std::vector<std::pair<const char*, const char*>>{
           {"P(x)", "I(x)"}, {"F(j)", "R"}, {"P(x)", "P(d)"}, {"P(x)", "exists x. P(x)"}}) {
    const Verdict v = decide_entailment({Question{F(phi, s)}}, Formula::top(), Question{F(psi, s)}, s, cfg);
    EXPECT_NE(v.kind, VerdictKind::kUnknown) << phi << " / " << psi;
  }
}

TEST(IsAnswerTest, Examples) {
  Signature s = story_sig();
  const Question px{F("P(x)", s)};
  EXPECT_EQ(is_answer(F("forall x. P(x)", s), px, Formula::top(), s).kind, VerdictKind::kEntailed);
  EXPECT_EQ(is_answer(F("I(j)", s), px, F("forall x. (I(x) <-> P(x))", s), s).kind, VerdictKind::kEntailed);
  EXPECT_EQ(is_answer(F("R | ~R", s), Question{F("F(j)", s)}, Formula::top(), s).kind, VerdictKind::kEntailed);
  EXPECT_EQ(is_answer(F("R & ~R", s), Question{F("F(j)", s)}, Formula::top(), s).kind, VerdictKind::kEntailed);
  EXPECT_THROW(is_answer(F("P(y)", s), px, Formula::top(), s), InputError);
}

// Over {p, q} with ?p, the answers are exactly the formulas equivalent to true,
// false, p or not p. The expectation is computed from truth tables: psi answers
// ?p iff any two valuations that agree on p agree on psi.
TEST(IsAnswerTest, PropositionalAnswersAreExactlyTheCellsOfP) {
  Signature s = testing::prop_sig();
  const Formula p = F("p", s), q = F("q", s);
  for (int table = 0; table < 16; ++table) {
    // Bit (2*pv + qv) of `table` is the value at p = pv, q = qv.
    std::vector<Formula> disjuncts;
    for (int pv = 0; pv < 2; ++pv) {
      for (int qv = 0; qv < 2; ++qv) {
        if (!(table >> (2 * pv + qv) & 1)) continue;
        disjuncts.push_back(Formula::conj(pv ? p : Formula::neg(p), qv ? q : Formula::neg(q)));
      }
    }
    const Formula psi = disjuncts.empty() ? Formula::conj(p, Formula::neg(p)) : Formula::disj_all(disjuncts);
    bool expected = true;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if ((a >> 1) == (b >> 1) && ((table >> a) & 1) != ((table >> b) & 1)) expected = false;
      }
    }
    const bool cell = table == 0 || table == 15 || table == 0b1100 || table == 0b0011;
    ASSERT_EQ(expected, cell) << table;
    const Verdict v = is_answer(psi, Question{p}, Formula::top(), s);
    EXPECT_EQ(v.kind, expected ? VerdictKind::kEntailed : VerdictKind::kNotEntailed) << to_string(psi);
  }
}

TEST(DecideEntailmentTest, ReflexivityAndContextMonotonicity) {
  Signature s = story_sig();
  const std::vector<const char*> corpus{"P(x)", "L(m(j))", "exists x. (P(x) & ~(x = c))", "forall x. (L(x) -> x = j)",
                                        "R", "I(x) & F(x)"};
  for (const char* text : corpus) {
    const Question q{F(text, s)};
    EXPECT_EQ(decide_entailment({q}, Formula::top(), q, s).kind, VerdictKind::kEntailed) << text;
  }
  const Formula chi = F("forall x. (I(x) <-> P(x))", s);
  const Formula stronger = Formula::conj(chi, F("L(j)", s));
  for (const char* psi : {"I(j)", "forall x. I(x)", "exists x. (I(x) & ~(x = c))"}) {
    ASSERT_EQ(is_answer(F(psi, s), Question{F("P(x)", s)}, chi, s).kind, VerdictKind::kEntailed) << psi;
    EXPECT_EQ(is_answer(F(psi, s), Question{F("P(x)", s)}, stronger, s).kind, VerdictKind::kEntailed) << psi;
  }
}

struct Triple {
  const char* psi;
  const char* phi;
  const char* chi;
};

std::vector<Triple> extraction_corpus() {
  return {
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
      {"I(x)", "P(x)", "forall x. (I(x) <-> P(x))"},
      {"~exists x. (I(x) & F(x))", "I(x) & F(x)", "true"},
      {"forall y. (I(y) & F(y))", "I(x) & F(x)", "true"},
  };
}

TEST(ExtractDevelopmentTest, CorpusRoundTrip) {
  Signature s = story_sig();
  for (const auto& t : extraction_corpus()) {
    const Formula psi = F(t.psi, s), chi = F(t.chi, s);
    const Question q{F(t.phi, s)};
    ASSERT_EQ(decide_entailment({q}, chi, Question{psi}, s).kind, VerdictKind::kEntailed) << t.psi;
    const ExtractionResult r = extract_development(psi, q, chi, s);
    EXPECT_TRUE(verify_extraction(r, psi, q, chi, s)) << t.psi << " -> " << to_string(r.development);
    EXPECT_TRUE(alpha_equivalent(replay(r.tree), r.development));
    EXPECT_TRUE(check_proof(r.forward));
    EXPECT_TRUE(check_proof(r.backward));
    EXPECT_EQ(r.trace.back().step, "verify");
    for (const auto& name : symbol_names(r.development)) EXPECT_FALSE(is_reserved_name(name)) << name;
  }
}

TEST(ExtractDevelopmentTest, WorkedExamples) {
  Signature s = story_sig();
  ExtractionResult r = extract_development(F("I(j)", s), Question{F("P(x)", s)}, F("forall x. (I(x) <-> P(x))", s), s);
  EXPECT_EQ(to_string(r.development), "P(j)");
  r = extract_development(F("L(s)", s), Question{F("L(m(j))", s)}, F("s = m(j)", s), s);
  EXPECT_EQ(to_string(r.development), "L(m(j))");
  r = extract_development(F("forall x. P(x)", s), Question{F("P(x)", s)}, Formula::top(), s);
  EXPECT_TRUE(alpha_equivalent(r.development, F("forall x. P(x)", s)));
}

TEST(ExtractDevelopmentTest, OpenAnswerKeepsItsVariables) {
  Signature s = story_sig();
  const Formula psi = F("I(x)", s), chi = F("forall x. (I(x) <-> P(x))", s);
  const ExtractionResult r = extract_development(psi, Question{F("P(x)", s)}, chi, s);
  EXPECT_EQ(to_string(r.development), "P(x)");
  bool saw_constants = false;
  for (const auto& step : r.trace) saw_constants = saw_constants || (step.step == "fresh-constants" && step.detail != "none");
  EXPECT_TRUE(saw_constants);
}

TEST(ExtractDevelopmentTest, NonAnswerFails) {
  Signature s = story_sig();
  EXPECT_THROW(extract_development(F("R", s), Question{F("F(j)", s)}, Formula::top(), s), ExtractionFailure);
}

TEST(VerifyExtractionTest, ManualCandidates) {
  Signature s = story_sig();
  const Formula chi = F("forall x. (I(x) <-> P(x))", s);
  ExtractionResult r;
  r.development = F("P(j)", s);
  EXPECT_TRUE(verify_extraction(r, F("I(j)", s), Question{F("P(x)", s)}, chi, s));
  r.development = F("forall x. (x = j -> P(x))", s);
  EXPECT_TRUE(verify_extraction(r, F("I(j)", s), Question{F("P(x)", s)}, chi, s));
  // Equivalent but d is not rigid.
  r.development = F("P(d)", s);
  EXPECT_FALSE(verify_extraction(r, F("P(d)", s), Question{F("P(x)", s)}, Formula::top(), s));
  // A development, not equivalent.
  r.development = F("P(c)", s);
  EXPECT_FALSE(verify_extraction(r, F("I(j)", s), Question{F("P(x)", s)}, chi, s));
}

}  // namespace
}  // namespace qa
