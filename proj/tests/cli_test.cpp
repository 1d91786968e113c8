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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "golden.hpp"
#include "qa/cli/cli.hpp"

namespace qa {
namespace {

using testing::GoldenCase;
using testing::run_case;

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

bool has_flag(const GoldenCase& c, const std::string& flag) {
  return std::find(c.args.begin(), c.args.end(), flag) != c.args.end();
}

class GoldenCorpus : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(GoldenCorpus, MatchesGoldenOutputAndExitCode) {
  const GoldenCase& c = GetParam();
  const cli::RunResult r = run_case(c.args);
  EXPECT_EQ(r.exit_code, c.exit_code) << testing::render(r);
  const std::string got = testing::render(r);
  if (std::getenv("QA_UPDATE_GOLDENS")) {
    std::ofstream(testing::golden_path(c), std::ios::binary) << got;
    GTEST_SKIP() << "golden rewritten";
  }
  EXPECT_EQ(got, testing::read_text(testing::golden_path(c)));
}

TEST_P(GoldenCorpus, DeterministicFlagChangesNothing) {
  const GoldenCase& c = GetParam();
  const cli::RunResult a = run_case(c.args, true);
  const cli::RunResult b = run_case(c.args, true);
  EXPECT_EQ(testing::render(a), testing::render(b));
  EXPECT_EQ(a.exit_code, b.exit_code);
  if (c.exit_code < cli::kUsage) {
    EXPECT_EQ(testing::render(a), testing::render(run_case(c.args)));
  }
}

// Keys every JSON document of a command carries, as listed in docs/json-output.md.
const std::map<std::string, std::vector<std::string>>& schema() {
  static const std::map<std::string, std::vector<std::string>> s = {
      {"check-entailment",
       {"command", "verdict", "questions", "target", "context", "bounds", "budget_used", "proof_steps", "countermodel"}},
      {"check-answer",
       {"command", "verdict", "question", "answer", "context", "bounds", "budget_used", "proof_steps", "countermodel"}},
      {"check-development", {"command", "of", "candidate", "variant", "development", "tree", "classification"}},
      {"extract",
       {"command", "verdict", "question", "answer", "context", "bounds", "budget_used", "countermodel", "development",
        "failed_step"}},
      {"partition", {"command", "questions", "blocks"}},
      {"enumerate-answers", {"command", "of", "max_size", "variant", "answers"}},
      {"translate", {"command", "premises", "conclusion", "signature"}},
  };
  return s;
}

std::string case_name(const ::testing::TestParamInfo<GoldenCase>& info) { return info.param.name; }

INSTANTIATE_TEST_SUITE_P(Cli, GoldenCorpus, ::testing::ValuesIn(testing::golden_cases()), case_name);

TEST(Cli, JsonRoundTripsThroughSchema) {
  for (const auto& c : testing::golden_cases()) {
    if (!has_flag(c, "--json") || c.exit_code >= cli::kUsage) continue;
    SCOPED_TRACE(c.name);
    const cli::RunResult r = run_case(c.args);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.dump(2) + "\n", r.out);
    ASSERT_TRUE(j.is_object());
    EXPECT_EQ(j.at("command"), c.args[0]);
    for (const auto& key : schema().at(c.args[0])) EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, EveryJsonCommandIsCovered) {
  std::set<std::string> seen;
  for (const auto& c : testing::golden_cases()) {
    if (has_flag(c, "--json") && c.exit_code < cli::kUsage) seen.insert(c.args[0]);
  }
  for (const auto& [cmd, keys] : schema()) EXPECT_TRUE(seen.count(cmd)) << cmd;
}

TEST(Cli, PartitionAgreesWithLibrary) {
  const Signature sig = signature_from_json(nlohmann::json::parse(testing::read_text(testing::data_dir() / "s.json")));
  const ModalStructure m =
      model_from_json(nlohmann::json::parse(testing::read_text(testing::data_dir() / "m.json")), sig);
  using namespace std::string_literals;
  const std::vector<std::vector<std::string>> question_sets = {
      {}, {"P(x)"s}, {"P(c)"s}, {"P(d)"s}, {"P(c)"s, "P(d)"s}, {"forall x. P(x)"s}, {"P(x)"s, "P(c)"s}, {"exists x. ~P(x)"s}};
  for (const auto& qs : question_sets) {
    std::vector<std::string> args = {"partition", "--sig", "s.json", "--model", "m.json", "--json"};
    QuestionSet parsed;
    for (const auto& q : qs) {
      args.push_back("--question");
      args.push_back(q);
      parsed.push_back(Question{parse_formula(q, sig)});
    }
    const cli::RunResult r = run_case(args);
    ASSERT_EQ(r.exit_code, 0) << r.err;
    std::vector<std::vector<std::string>> expected;
    const Partition part = questions_partition(m, parsed);
    for (const auto& b : part.blocks()) {
      expected.emplace_back();
      for (int w : b) expected.back().push_back(m.world_names()[static_cast<std::size_t>(w)]);
    }
    EXPECT_EQ(nlohmann::json::parse(r.out).at("blocks").get<std::vector<std::vector<std::string>>>(), expected);
  }
}

TEST(Cli, TextPartitionIsSortedBlockListing) {
  const cli::RunResult r = run_case({"partition", "--sig", "s.json", "--model", "m.json", "--question", "P(x)"});
  EXPECT_EQ(r.out, "{w1, w3}\n{w2}\n{w4}\n");
}

TEST(Cli, FileIndirectionMatchesInline) {
  const auto inline_run = run_case({"check-entailment", "--sig", "story.json", "--context",
                                    "forall x. (I(x) <-> P(x))", "--question", "P(x)", "--target", "I(x)", "--json"});
  const auto file_run = run_case({"check-entailment", "--sig", "story.json", "--context", "@ctx_iff.txt",
                                  "--question", "P(x)", "--target", "I(x)", "--json"});
  EXPECT_EQ(inline_run.out, file_run.out);
  EXPECT_EQ(inline_run.exit_code, 0);
}

bool lists_equivalent(const std::string& out, const std::string& formula, const Signature& sig) {
  const Formula f = parse_formula(formula, sig);
  for (const auto& l : lines(out)) {
    if (alpha_equivalent(parse_formula(l.substr(0, l.find('\t')), sig), f)) return true;
  }
  return false;
}

TEST(Cli, EnumerateAnswersSmallListing) {
  const Signature sig = signature_from_json(nlohmann::json::parse(testing::read_text(testing::data_dir() / "s.json")));
  const auto r = run_case({"enumerate-answers", "--sig", "s.json", "--of", "P(x)", "--max-size", "3"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(lists_equivalent(r.out, "P(c)", sig));
  EXPECT_TRUE(lists_equivalent(r.out, "forall x. P(x)", sig));
  EXPECT_TRUE(lists_equivalent(r.out, "~P(c)", sig));
  EXPECT_TRUE(lists_equivalent(r.out, "exists x. P(x)", sig));
  for (const auto& l : lines(r.out)) EXPECT_TRUE(is_closed(parse_formula(l, sig))) << l;
}

TEST(Cli, EnumerateVariantsExcludeTheirForms) {
  const Signature s = signature_from_json(nlohmann::json::parse(testing::read_text(testing::data_dir() / "s.json")));
  const auto no_ex = run_case(
      {"enumerate-answers", "--sig", "s.json", "--of", "P(x)", "--max-size", "3", "--variant", "no-existential"});
  EXPECT_FALSE(lists_equivalent(no_ex.out, "exists x. P(x)", s));
  EXPECT_TRUE(lists_equivalent(no_ex.out, "forall x. P(x)", s));

  const Signature p = signature_from_json(nlohmann::json::parse(testing::read_text(testing::data_dir() / "p.json")));
  const std::vector<std::string> base = {"enumerate-answers", "--sig", "p.json", "--of", "P(x)", "--max-size", "4"};
  auto no_vv = base;
  no_vv.insert(no_vv.end(), {"--variant", "no-varvar-identity"});
  EXPECT_TRUE(lists_equivalent(run_case(base).out, "exists x. exists y. ~(x = y)", p));
  EXPECT_FALSE(lists_equivalent(run_case(no_vv).out, "exists x. exists y. ~(x = y)", p));
}

TEST(Cli, VerifiedEnumerationIsAllEntailed) {
  const auto r = run_case({"enumerate-answers", "--sig", "s.json", "--of", "P(x)", "--max-size", "3", "--verify"});
  ASSERT_EQ(r.exit_code, 0) << r.err;
  for (const auto& l : lines(r.out)) EXPECT_NE(l.find("\tEntailed"), std::string::npos) << l;
}

TEST(Cli, ParseErrorsCarryPositions) {
  auto r = run_case({"check-entailment", "--sig", "story.json", "--context", "@bad_formula.txt", "--target", "P(c)"});
  EXPECT_EQ(r.exit_code, cli::kInput);
  EXPECT_NE(r.err.find("bad_formula.txt:3:1:"), std::string::npos) << r.err;
  r = run_case({"check-entailment", "--sig", "bad_sig.json", "--target", "P(c)"});
  EXPECT_EQ(r.exit_code, cli::kInput);
  EXPECT_NE(r.err.find("line 2, column 25"), std::string::npos) << r.err;
}

TEST(Cli, HelpExitsZero) {
  const auto r = cli::run({"qa", "--help"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("check-entailment"), std::string::npos);
  EXPECT_EQ(cli::run({"qa", "extract", "--help"}).exit_code, 0);
}

TEST(Cli, CrossCheckAgreesWithPlainRun) {
  const std::vector<std::string> args = {"check-answer", "--sig", "story.json", "--question", "F(j)", "--answer", "R"};
  auto with = args;
  with.push_back("--cross-check");
  EXPECT_EQ(run_case(with).exit_code, cli::kNegative);
  EXPECT_EQ(run_case(with).out, run_case(args).out);
}

}  // namespace
}  // namespace qa
