// Copyright 2026 The rainbowflip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Runs the acceptance criteria and prints one PASS/FAIL line each. Exit
// status 0 iff every selected criterion passes.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/acceptance.hpp"
#include "rainbow/io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"rainbowflip acceptance suite"};
  rainbow::AcceptanceOptions options;
  std::vector<int> only;
  std::string out_dir;
  app.add_option("--seed", options.seed, "seed for random instances");
  app.add_option("--m10-budget-seconds", options.m10_budget_seconds,
                 "search budget for the m = 10 matching proof");
  app.add_option("--only", only, "criterion ids to run")->check(CLI::Range(1, 7));
  app.add_option("--out", out_dir, "directory for manifests and timings");
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  nlohmann::json timings = nlohmann::json::object();
  for (const auto& info : rainbow::acceptance_criteria()) {
    if (!only.empty() && std::find(only.begin(), only.end(), info.id) == only.end()) continue;
    rainbow::CriterionResult result;
    try {
      result = rainbow::run_criterion(info.id, options);
    } catch (const std::exception& e) {
      result.id = info.id;
      result.name = info.name;
      result.summary = std::string("aborted: ") + e.what();
    }
    std::cout << rainbow::format_result_line(result) << std::endl;
    all_pass = all_pass && result.pass;
    timings[std::to_string(info.id)] = result.timings;
    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      rainbow::write_text_file(out_dir + "/criterion_" + std::to_string(info.id) + ".json",
                               result.manifest.dump(2) + "\n");
    }
  }
  if (!out_dir.empty()) rainbow::write_text_file(out_dir + "/timings.json", timings.dump(2) + "\n");
  return all_pass ? EXIT_SUCCESS : EXIT_FAILURE;
}
