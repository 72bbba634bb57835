// Copyright 2026 The sicdesign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <iostream>

#include "CLI11.hpp"

#include "sicd/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"sicd acceptance suite"};
  sicd::VerifyOptions options;
  app.add_option("-j,--jobs", options.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", options.seed, "seed for random states");
  CLI11_PARSE(app, argc, argv);

  sicd::VerifyContext ctx(options);
  int failed = 0;
  for (int id = 1; id <= sicd::kCriterionCount; ++id) {
    const sicd::CriterionResult r = sicd::run_criterion(id, ctx);
    std::cout << (r.pass ? "PASS" : "FAIL") << "  [" << id << "] " << r.name << "  (" << r.seconds << " s)\n";
    if (!r.pass) {
      ++failed;
      std::cout << "      expected: " << r.expected << "\n      computed: " << r.computed << '\n';
      for (const auto& f : r.failures) std::cout << "      - " << f << '\n';
    }
  }
  std::cout << (sicd::kCriterionCount - failed) << "/" << sicd::kCriterionCount << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
