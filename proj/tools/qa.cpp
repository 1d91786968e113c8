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

#include <iostream>
#include <string>
#include <vector>

#include "qa/cli/cli.hpp"

int main(int argc, char** argv) {
  const qa::cli::RunResult r = qa::cli::run(std::vector<std::string>(argv, argv + argc));
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
