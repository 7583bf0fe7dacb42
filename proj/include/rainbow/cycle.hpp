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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rainbow/label.hpp"

namespace rainbow {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  auto operator<=>(const Point&) const = default;
};

// Canonical encoding of a flip-graph vertex. Edge-set families store
// their sorted edges flattened as lo0, hi0, lo1, hi1, ...; subsets store
// sorted elements; permutations store one-line notation.
using State = std::vector<int>;

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (int v : s) {
      h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(v));
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

State encode_edges(const std::vector<Label>& edges);
std::vector<Label> decode_edges(const State& s);

// Parameters identifying a flip graph. `n` is the family size parameter
// (polygon size, point count, m for matchings); `k` is the subset size.
struct CycleParams {
  int n = 0;
  int k = 0;
  std::vector<Point> points;
  bool centered_only = false;
  bool operator==(const CycleParams&) const = default;
};

// A closed walk in a flip graph. step_labels[i] holds the labels entering
// on the flip from states[i] to states[(i + 1) % size()].
struct LabeledFlipCycle {
  std::string family;
  CycleParams params;
  std::vector<State> states;
  std::vector<LabelSet> step_labels;
  int r = 1;

  std::size_t size() const { return states.size(); }
  bool operator==(const LabeledFlipCycle&) const = default;
};

}  // namespace rainbow
