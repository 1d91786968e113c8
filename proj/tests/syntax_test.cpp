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

#include <set>

#include "qa/syntax.hpp"
#include "test_support.hpp"

namespace qa {
namespace {

using testing::F;

Signature example_sig() {
  // P/2 for the priming example, plus the party vocabulary.
  Signature s;
  s.add_predicate("P", 2).add_predicate("Q", 1).add_predicate("R", 2);
  s.add_constant("c", true).add_constant("d", false).add_constant("j", true);
  s.add_function("f", 1, true).add_function("m", 1, false);
  return s;
}

TEST(ParserTest, PredicateApplication) {
  const Signature sig = testing::party_sig();
  const Formula f = F("P(x)", sig);
  EXPECT_EQ(f, Formula::pred("P", {Term::var("x")}));
}

TEST(ParserTest, ExistentialConjunction) {
  const Signature sig = example_sig();
  const Formula f = F("exists x. (P(x,c) & ~P(y,d))", sig);
  const Term x = Term::var("x"), y = Term::var("y"), c = Term::app("c"), d = Term::app("d");
  EXPECT_EQ(f, Formula::exists("x", Formula::conj(Formula::pred("P", {x, c}), Formula::neg(Formula::pred("P", {y, d})))));
}

TEST(ParserTest, OnlyJohn) {
  const Signature sig = testing::party_sig();
  const Formula f = F("forall x. (P(x) -> x = j)", sig);
  const Term x = Term::var("x");
  EXPECT_EQ(f, Formula::forall("x", Formula::imp(Formula::pred("P", {x}), Formula::eq(x, Term::app("j")))));
}

TEST(ParserTest, PrecedenceAndAssociativity) {
  const Signature sig = testing::prop_sig();
  const Formula p = Formula::pred("p"), q = Formula::pred("q");
  EXPECT_EQ(F("p -> q -> p", sig), Formula::imp(p, Formula::imp(q, p)));
  EXPECT_EQ(F("p <-> q <-> p", sig), Formula::iff(Formula::iff(p, q), p));
  EXPECT_EQ(F("p | q & p", sig), Formula::disj(p, Formula::conj(q, p)));
  EXPECT_EQ(F("~p & q", sig), Formula::conj(Formula::neg(p), q));
  EXPECT_EQ(F("true | false", sig), Formula::disj(Formula::top(), Formula::bottom()));
}

TEST(ParserTest, ErrorsCarryPositions) {
  const Signature sig = testing::party_sig();
  try {
    F("P(x) & R(x)", sig);
    FAIL() << "arity mismatch accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 8u);
  }
  EXPECT_THROW(F("P(x) $ P(y)", sig), ParseError);
  EXPECT_THROW(F("g(x) = c", sig), ParseError);        // undeclared function with arguments
  EXPECT_THROW(F("P(x) &", sig), ParseError);
  EXPECT_THROW(F("x", sig), ParseError);               // a variable is not a formula
  EXPECT_THROW(F("P(x')", sig), ParseError);           // primes are reserved
  EXPECT_THROW(F("P(__c0)", sig), ParseError);         // so is the double underscore
  EXPECT_THROW(F("forall c. P(c)", sig), ParseError);  // constants cannot be bound
  EXPECT_THROW(F("P(m)", sig), ParseError);            // m is unary
}

TEST(PrinterTest, RoundTripsRandomFormulas) {
  const Signature sig = example_sig();
  testing::RandomFormulas gen(sig, {"x", "y", "z"}, 7);
  for (int i = 0; i < 500; ++i) {
    const Formula f = gen.formula(5);
    const std::string text = to_string(f);
    EXPECT_EQ(F(text, sig), f) << text;
  }
}

TEST(PrinterTest, MinimalParentheses) {
  const Signature sig = testing::party_sig();
  EXPECT_EQ(to_string(F("forall x. (P(x) -> x = j)", sig)), "forall x. (P(x) -> x = j)");
  EXPECT_EQ(to_string(F("~(x = c)", sig)), "~(x = c)");
  EXPECT_EQ(to_string(F("(P(c) & P(j)) & P(x)", sig)), "P(c) & P(j) & P(x)");
  EXPECT_EQ(to_string(F("P(c) & (P(j) & P(x))", sig)), "P(c) & (P(j) & P(x))");
}

TEST(FreeVariablesTest, Examples) {
  const Signature sig = example_sig();
  EXPECT_TRUE(free_variables(F("forall x. Q(x)", sig)).empty());
  EXPECT_EQ(free_variables(F("exists x. (P(x,c) & ~P(y,d))", sig)), std::vector<std::string>{"y"});
  EXPECT_EQ(free_variables(F("x = j", sig)), std::vector<std::string>{"x"});
  EXPECT_EQ(free_variables(F("R(y,x) & exists y. R(y,z)", sig)), (std::vector<std::string>{"y", "x", "z"}));
}

TEST(SubstituteTest, Examples) {
  const Signature sig = example_sig();
  EXPECT_EQ(substitute(F("Q(x)", sig), {{"x", Term::app("c")}}), F("Q(c)", sig));
  EXPECT_EQ(substitute(F("R(x,d)", sig), {{"x", Term::app("c")}}), F("R(c,d)", sig));
  // Capture: the binder y is renamed to y0.
  const Term fy = Term::app("f", {Term::var("y")});
  EXPECT_EQ(substitute(F("forall y. R(x,y)", sig), {{"x", fy}}), F("forall y0. R(f(y),y0)", sig));
  // Bound occurrences are not substituted.
  EXPECT_EQ(substitute(F("forall x. Q(x)", sig), {{"x", Term::app("c")}}), F("forall x. Q(x)", sig));
  // Simultaneous, not sequential.
  EXPECT_EQ(substitute(F("R(x,y)", sig), {{"x", Term::var("y")}, {"y", Term::var("x")}}), F("R(y,x)", sig));
}

TEST(SubstituteTest, FreeVariablesProperty) {
  const Signature sig = example_sig();
  testing::RandomFormulas gen(sig, {"x", "y", "z"}, 11);
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(4);
    Substitution s{{"x", gen.term(1)}, {"z", gen.term(1)}};
    std::set<std::string> expected;
    for (const auto& v : free_variables(f)) {
      auto it = s.find(v);
      if (it == s.end()) {
        expected.insert(v);
      } else {
        for (const auto& tv : term_variables(it->second)) expected.insert(tv);
      }
    }
    const auto got = free_variables(substitute(f, s));
    EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected) << to_string(f);
  }
}

TEST(RigidityTest, Terms) {
  const Signature sig = example_sig();
  EXPECT_TRUE(is_rigid_term(Term::var("x"), sig));
  EXPECT_TRUE(is_rigid_term(Term::app("c"), sig));
  EXPECT_FALSE(is_rigid_term(Term::app("d"), sig));
  EXPECT_FALSE(is_rigid_term(Term::app("m", {Term::app("j")}), sig));
  EXPECT_TRUE(is_rigid_term(Term::app("f", {Term::var("x")}), sig));
}

TEST(RigidityTest, InstanceMatching) {
  const Signature sig = example_sig();
  auto sigma = match_rigid_instance(F("R(c,d)", sig), F("R(x,d)", sig), sig);
  ASSERT_TRUE(sigma.has_value());
  EXPECT_EQ(*sigma, (Substitution{{"x", Term::app("c")}}));

  EXPECT_FALSE(match_rigid_instance(F("Q(d)", sig), F("Q(x)", sig), sig).has_value());

  sigma = match_rigid_instance(F("Q(x)", sig), F("Q(x)", sig), sig);
  ASSERT_TRUE(sigma.has_value());
  EXPECT_EQ(*sigma, (Substitution{{"x", Term::var("x")}}));

  // Uniformity: both occurrences of x must receive the same term.
  EXPECT_FALSE(match_rigid_instance(F("R(c,j)", sig), F("R(x,x)", sig), sig).has_value());
  // Bound-variable spelling does not matter.
  EXPECT_TRUE(match_rigid_instance(F("exists z. R(z,c)", sig), F("exists y. R(y,x)", sig), sig).has_value());
  // Capture is not an instance: forall y R(y,y) is not (forall y R(x,y))[x:=y].
  EXPECT_FALSE(match_rigid_instance(F("forall y. R(y,y)", sig), F("forall y. R(x,y)", sig), sig).has_value());
}

TEST(RigidityTest, MatchProperty) {
  const Signature sig = example_sig();
  testing::RandomFormulas gen(sig, {"x", "y", "z"}, 23);
  Signature rigid_only;
  rigid_only.add_constant("c", true).add_constant("j", true).add_function("f", 1, true);
  testing::RandomFormulas rigid_terms(rigid_only, {"x", "y", "w"}, 29);
  int matched = 0;
  for (int i = 0; i < 300; ++i) {
    const Formula pattern = gen.formula(3);
    Substitution s;
    for (const auto& v : free_variables(pattern)) s[v] = rigid_terms.term(1);
    const Formula candidate = substitute(pattern, s);
    auto sigma = match_rigid_instance(candidate, pattern, sig);
    ASSERT_TRUE(sigma.has_value()) << to_string(candidate) << " vs " << to_string(pattern);
    EXPECT_TRUE(alpha_equivalent(substitute(pattern, *sigma), candidate));
    for (const auto& [v, t] : *sigma) EXPECT_TRUE(is_rigid_term(t, sig));
    ++matched;
  }
  EXPECT_EQ(matched, 300);
}

TEST(PrimingTest, Examples) {
  const Signature sig = example_sig();
  const Signature ext = primed_signature(sig);
  EXPECT_EQ(prime(F("exists x. (P(x,c) & ~P(y,d))", sig), sig), F("exists x. (P'(x,c) & ~P'(y,d'))", ext));
  EXPECT_EQ(prime(F("x = c", sig), sig), F("x = c", sig));
  EXPECT_EQ(prime(F("Q(j)", sig), sig), F("Q'(j)", ext));
  EXPECT_EQ(prime(F("Q(m(j))", sig), sig), F("Q'(m'(j))", ext));
  EXPECT_THROW(prime(F("Q'(j)", ext), sig), InputError);
}

TEST(PrimingTest, UnprimeIsLeftInverseAndNoUnprimedNonRigidSurvives) {
  const Signature sig = example_sig();
  testing::RandomFormulas gen(sig, {"x", "y"}, 31);
  std::set<Formula> seen_primed;
  std::set<Formula> seen;
  for (int i = 0; i < 300; ++i) {
    const Formula f = gen.formula(4);
    const Formula p = prime(f, sig);
    EXPECT_EQ(unprime(p), f);
    for (const auto& name : symbol_names(p)) {
      EXPECT_TRUE(is_primed_name(name) || sig.is_rigid_function(name)) << name;
    }
    // Injectivity on the sample.
    EXPECT_EQ(seen.insert(f).second, seen_primed.insert(p).second);
  }
}

TEST(SharpTest, Examples) {
  const Signature sig = example_sig();
  const Signature ext = primed_signature(sig);
  EXPECT_EQ(sharp(Question{F("exists x. (P(x,c) & ~P(y,d))", sig)}, sig),
            F("forall y. (exists x. (P(x,c) & ~P(y,d)) <-> exists x. (P'(x,c) & ~P'(y,d')))", ext));
  EXPECT_EQ(sharp(Question{F("Q(x)", sig)}, sig), F("forall x. (Q(x) <-> Q'(x))", ext));
  const Formula rigid = F("f(c) = j", sig);
  EXPECT_EQ(sharp(Question{rigid}, sig), Formula::iff(rigid, rigid));
}

TEST(SharpTest, AlwaysClosed) {
  const Signature sig = example_sig();
  testing::RandomFormulas gen(sig, {"x", "y", "z"}, 37);
  for (int i = 0; i < 300; ++i) {
    EXPECT_TRUE(is_closed(sharp(Question{gen.formula(4)}, sig)));
  }
}

TEST(SignatureTest, JsonLoading) {
  const auto j = nlohmann::json::parse(
      R"({"predicates": {"P": 1, "R": 0}, "functions": {"c": {"arity": 0, "rigid": true}, "m": {"arity": 1, "rigid": false}}})");
  const Signature sig = signature_from_json(j);
  EXPECT_EQ(sig.predicate_arity("P"), 1);
  EXPECT_TRUE(sig.is_rigid_function("c"));
  EXPECT_FALSE(sig.is_rigid_function("m"));
  EXPECT_EQ(signature_from_json(signature_to_json(sig)), sig);
  EXPECT_THROW(signature_from_json(nlohmann::json::parse(R"({"predicates": {"P'": 1}})")), InputError);
  EXPECT_THROW(signature_from_json(nlohmann::json::parse(R"({"predicates": {"__Q": 1}})")), InputError);
  EXPECT_THROW(signature_from_json(nlohmann::json::parse(R"({"predicates": {"P": 1}, "functions": {"P": {"arity": 0}}})")),
               InputError);
  EXPECT_THROW(signature_from_json(nlohmann::json::parse(R"({"predicates": {"forall": 1}})")), InputError);
}

}  // namespace
}  // namespace qa
