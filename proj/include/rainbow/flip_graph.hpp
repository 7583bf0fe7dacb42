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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/cycle.hpp"
#include "rainbow/label.hpp"

namespace rainbow {

struct Neighbor {
  State state;
  LabelSet labels;  // entering labels, sorted
};

// A flip graph given implicitly: legality of a single flip, neighbour
// generation, and the label universe.
class FlipGraphOracle {
 public:
  virtual ~FlipGraphOracle() = default;

  virtual std::string_view family() const = 0;
  virtual CycleParams params() const = 0;
  virtual int labels_per_step() const = 0;
  virtual std::vector<Label> universe() const = 0;

  // Empty if `s` is a vertex of the graph, otherwise a reason.
  virtual std::optional<std::string> invalid_reason(const State& s) const = 0;

  // Entering labels if from -> to is an arc, otherwise nullopt. Both
  // states are assumed valid.
  virtual std::optional<LabelSet> flip_labels(const State& from,
                                              const State& to) const = 0;

  // Sorted by entering labels, then by state.
  virtual std::vector<Neighbor> neighbors(const State& s) const = 0;

  // For families whose states are sets of labels (edges, diagonals):
  // the labels present in `s`. Enables closure pruning in the search.
  virtual std::optional<LabelSet> present_labels(const State&) const {
    return std::nullopt;
  }
};

// Sorts neighbours into the canonical order used by every oracle.
void sort_neighbors(std::vector<Neighbor>& out);

// Rebuilds the oracle matching a cycle's family and parameters.
std::unique_ptr<FlipGraphOracle> make_oracle(std::string_view family,
                                             const CycleParams& params);

}  // namespace rainbow
