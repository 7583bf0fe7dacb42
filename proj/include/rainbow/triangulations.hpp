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
#include <utility>
#include <vector>

#include "rainbow/cycle.hpp"
#include "rainbow/flip_graph.hpp"
#include "rainbow/label.hpp"

namespace rainbow {

inline constexpr const char* kTriangulationFamily = "triangulation";

// Triangulation of the convex n-gon with vertices 1..n in cyclic order,
// given by its n - 3 diagonals.
class Triangulation {
 public:
  Triangulation(int n, std::vector<Label> diagonals);

  static Triangulation star(int n, int i);
  static Triangulation decode(int n, const State& s);

  int n() const { return n_; }
  const std::vector<Label>& diagonals() const { return diagonals_; }
  bool has(Label d) const;
  State encode() const { return encode_edges(diagonals_); }

  // The other diagonal of the quadrilateral formed by the two triangles
  // on either side of `d`.
  Label flip_partner(Label d) const;
  // Removes `remove` and inserts `insert`; throws IllegalFlip unless this
  // is a flip.
  Triangulation apply_flip(Label remove, Label insert) const;

  bool operator==(const Triangulation&) const = default;

 private:
  bool adjacent(int a, int b) const;

  int n_;
  std::vector<Label> diagonals_;
};

// Empty if valid, otherwise the reason.
std::optional<std::string> triangulation_problem(int n,
                                                 const std::vector<Label>& d);

// E_n: all diagonals of the n-gon.
std::vector<Label> diagonal_universe(int n);

bool diagonals_cross(Label a, Label b);

using Flip = std::pair<Label, Label>;  // (removed, inserted)

// F_{i,m}: the m - 3 flips taking star S_i of the m-gon to S_{i+1}.
std::vector<Flip> star_flip_sequence(int i, int m);

// 2-rainbow cycle F_{1,n} ... F_{n,n} from S_1. Requires n >= 7; n = 6
// is produced only with allow_small, and is not rainbow.
LabeledFlipCycle triangulation_rainbow2(int n, bool allow_small = false);

// 1-rainbow cycle (F_{3,4}, F_{4,5}, ..., F_{n-1,n}, F_{n,n}) from S_1.
LabeledFlipCycle triangulation_rainbow1(int n);

// All Catalan(n - 2) triangulations, 3 <= n <= 14.
std::vector<Triangulation> enumerate_triangulations(int n);

class TriangulationOracle : public FlipGraphOracle {
 public:
  explicit TriangulationOracle(int n);

  std::string_view family() const override { return kTriangulationFamily; }
  CycleParams params() const override;
  int labels_per_step() const override { return 1; }
  std::vector<Label> universe() const override { return diagonal_universe(n_); }
  std::optional<std::string> invalid_reason(const State& s) const override;
  std::optional<LabelSet> flip_labels(const State& from,
                                      const State& to) const override;
  std::vector<Neighbor> neighbors(const State& s) const override;
  std::optional<LabelSet> present_labels(const State& s) const override;

 private:
  int n_;
};

}  // namespace rainbow
