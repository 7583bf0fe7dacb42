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

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rainbow/cycle.hpp"
#include "rainbow/flip_graph.hpp"

namespace rainbow {

struct Violation {
  enum class Kind {
    kEmpty,
    kInvalidState,
    kIllegalFlip,
    kLabelMismatch,
    kRepeatedState,
    kForeignLabel,
    kLabelCount,
    kWrongLength,
  };
  Kind kind;
  std::size_t step = 0;
  Label label;
  int count = 0;
  std::string detail;
};

std::string to_string(Violation::Kind kind);

struct RainbowReport {
  std::map<Label, int> multiplicity_by_label;
  bool is_rainbow_r = false;
  std::vector<Violation> violations;

  bool has(Violation::Kind kind) const;
  std::string summary() const;
};

// Checks that `cycle` is an r-rainbow cycle of the flip graph described
// by `oracle`: every step is a legal flip whose entering labels match the
// declared ones, states are pairwise distinct, every label of `universe`
// enters exactly r times and the length is r |U| / labels_per_step.
RainbowReport verify_rainbow(const LabeledFlipCycle& cycle,
                             std::span<const Label> universe, int r,
                             const FlipGraphOracle& oracle);

// Same, with the oracle's own universe.
RainbowReport verify_rainbow(const LabeledFlipCycle& cycle, int r,
                             const FlipGraphOracle& oracle);

// Rebuilds the oracle from the cycle's family and parameters and checks
// against the cycle's declared r.
RainbowReport verify_rainbow(const LabeledFlipCycle& cycle);

// Fills step_labels from consecutive states using the oracle. Throws
// IllegalFlip if some step is not an arc.
void derive_step_labels(LabeledFlipCycle& cycle,
                        const FlipGraphOracle& oracle);

}  // namespace rainbow
