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

// CLI golden corpus: tests/data/cli/cases.json lists argument vectors, run with
// tests/data as the working directory; <name>.golden holds the expected output.

#ifndef QA_TESTS_GOLDEN_HPP
#define QA_TESTS_GOLDEN_HPP

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "qa/cli/cli.hpp"

namespace qa::testing {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code = 0;
};

inline void PrintTo(const GoldenCase& c, std::ostream* os) { *os << c.name; }

inline std::filesystem::path data_dir() { return QA_TEST_DATA; }
inline std::filesystem::path golden_path(const GoldenCase& c) { return data_dir() / "cli" / (c.name + ".golden"); }

inline std::vector<GoldenCase> golden_cases() {
  std::ifstream in(data_dir() / "cli" / "cases.json");
  const nlohmann::json j = nlohmann::json::parse(in);
  std::vector<GoldenCase> out;
  for (const auto& c : j) {
    out.push_back({c.at("name").get<std::string>(), c.at("args").get<std::vector<std::string>>(),
                   c.at("exit").get<int>()});
  }
  return out;
}

/// stdout, then stderr under a separator when there is any.
inline std::string render(const cli::RunResult& r) {
  std::string s = r.out;
  if (!r.err.empty()) s += "--- stderr\n" + r.err;
  return s;
}

/// Runs `qa args...` from the data directory.
inline cli::RunResult run_case(std::vector<std::string> args, bool deterministic = false) {
  if (deterministic && !args.empty()) args.insert(args.begin() + 1, "--deterministic");
  args.insert(args.begin(), "qa");
  const auto saved = std::filesystem::current_path();
  std::filesystem::current_path(data_dir());
  cli::RunResult r = cli::run(args);
  std::filesystem::current_path(saved);
  return r;
}

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qa::testing

#endif  // QA_TESTS_GOLDEN_HPP
