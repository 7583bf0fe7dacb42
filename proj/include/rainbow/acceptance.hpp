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


#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace rainbow {

struct AcceptanceOptions {
  std::uint64_t seed = 20261019;
  // Search budget for the m = 10 matching proof.
  double m10_budget_seconds = 1800;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string summary;
  // Command, parameters, seed, budgets and per-check verdicts. No timings,
  // so it is byte-stable for fixed options.
  nlohmann::json manifest;
  // Wall-clock seconds per timed step, and the total.
  nlohmann::json timings;
  double seconds = 0;
};

struct CriterionInfo {
  int id;
  const char* name;
};

// Criteria 1..7 in order.
const std::vector<CriterionInfo>& acceptance_criteria();

// Throws DomainError for an unknown id.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

// "[PASS] 3 matching structure: ..." (one line, no newline).
std::string format_result_line(const CriterionResult& result);

}  // namespace rainbow
