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

#include <optional>
#include <string>
#include <vector>

#include "rainbow/cycle.hpp"
#include "rainbow/flip_graph.hpp"
#include "rainbow/label.hpp"

namespace rainbow {

inline constexpr const char* kPermutationFamily = "permutation";

// One-line notation over 1..n. A transposition {i, j} swaps the entries
// at positions i and j.
using Permutation = std::vector<int>;

Permutation identity_permutation(int n);
Permutation apply_transposition(Permutation p, Label t);

// R_4 = ({1,2},{3,4},{2,3},{1,4},{2,4},{1,3}).
std::vector<Label> base_sequence_r4();

// Replaces each t_i = {2i-1, 2i} of R_n by ({2i-1,n+1},{2i-1,2i},{2i,n+1}).
std::vector<Label> extend_plus1(const std::vector<Label>& r, int n);

// R_{n+4} from R_n, for n divisible by 4.
std::vector<Label> extend_plus4(const std::vector<Label>& r, int n);

// Rainbow transposition sequence of length C(n, 2). Requires floor(n/2)
// even; throws a parity refusal otherwise. Every intermediate sequence is
// checked.
std::vector<Label> permutation_rainbow_sequence(int n);

// The cycle obtained by applying `seq` to `start` (identity by default).
LabeledFlipCycle permutation_cycle(int n, const std::vector<Label>& seq,
                                   std::optional<Permutation> start = {});

class PermutationOracle : public FlipGraphOracle {
 public:
  explicit PermutationOracle(int n);

  std::string_view family() const override { return kPermutationFamily; }
  CycleParams params() const override;
  int labels_per_step() const override { return 1; }
  std::vector<Label> universe() const override;
  std::optional<std::string> invalid_reason(const State& s) const override;
  std::optional<LabelSet> flip_labels(const State& from,
                                      const State& to) const override;
  std::vector<Neighbor> neighbors(const State& s) const override;

 private:
  int n_;
};

}  // namespace rainbow
