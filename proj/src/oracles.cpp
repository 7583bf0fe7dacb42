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

#include <memory>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/flip_graph.hpp"
#include "rainbow/matchings.hpp"
#include "rainbow/permutations.hpp"
#include "rainbow/spanning_trees.hpp"
#include "rainbow/subsets.hpp"
#include "rainbow/triangulations.hpp"

namespace rainbow {

std::unique_ptr<FlipGraphOracle> make_oracle(std::string_view family,
                                             const CycleParams& params) {
  if (family == kTriangulationFamily) {
    return std::make_unique<TriangulationOracle>(params.n);
  }
  if (family == kSpanningTreeFamily) {
    return std::make_unique<TreeOracle>(canonical_label(params.points));
  }
  if (family == kMatchingFamily) {
    return std::make_unique<MatchingOracle>(params.n, params.centered_only);
  }
  if (family == kPermutationFamily) {
    return std::make_unique<PermutationOracle>(params.n);
  }
  if (family == kSubsetFamily) {
    return std::make_unique<SubsetOracle>(params.n, params.k);
  }
  throw DomainError("unknown family '" + std::string(family) + "'");
}

}  // namespace rainbow
