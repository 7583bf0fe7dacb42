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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/cycle.hpp"
#include "rainbow/flip_graph.hpp"
#include "rainbow/label.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

inline constexpr const char* kMatchingFamily = "matching";

// Non-crossing perfect matching of 2m points labelled 1..2m clockwise
// around a circle.
class Matching {
 public:
  Matching(int m, std::vector<Label> edges);

  static Matching decode(int m, const State& s);

  int m() const { return m_; }
  const std::vector<Label>& edges() const { return edges_; }
  State encode() const { return encode_edges(edges_); }

  // Label i goes to i + shift (mod 2m); +1 is a rotation by pi/m.
  Matching rotated(int shift) const;

  bool operator==(const Matching&) const = default;

 private:
  int m_;
  std::vector<Label> edges_;
};

std::optional<std::string> matching_problem(int m, const std::vector<Label>& edges);

// E_m: pairs at odd difference, m^2 of them.
std::vector<Label> matching_universe(int m);

// Number of matching edges on the smaller side of e.
int edge_length(int m, Label e);

// +1 if the endpoint from which the centre lies to the right is odd. Even
// m only.
int edge_sign(int m, Label e);

int weight(const Matching& mm);

// Common sign of the edges bounding the face that contains the centre.
int visible_sign(const Matching& mm);

using Quad = std::array<int, 4>;  // corners in increasing order

// Side lengths of the 4-gon, in cyclic order starting at {q0, q1}.
std::array<int, 4> quad_side_lengths(int m, const Quad& q);

// Side lengths sum to m - 2.
bool is_centered(int m, const Quad& q);

// Every arc between consecutive corners spans fewer than m steps, i.e.
// the 4-gon strictly contains the centre.
bool contains_center(int m, const Quad& q);

// Cyclic side lengths, maximised over rotations and reflections; for
// m = 6 the centred types are "2200" (a), "2101" (b) and "2110" (c).
std::string quad_type(int m, const Quad& q);

// The four corners of the flip from -> to.
std::optional<Quad> flip_quad(const Matching& from, const Matching& to);

// All Catalan(m) matchings, sorted. 1 <= m <= 12.
std::vector<Matching> enumerate_matchings(int m);

class MatchingOracle : public FlipGraphOracle {
 public:
  MatchingOracle(int m, bool centered_only);

  std::string_view family() const override { return kMatchingFamily; }
  CycleParams params() const override;
  int labels_per_step() const override { return 2; }
  std::vector<Label> universe() const override { return matching_universe(m_); }
  std::optional<std::string> invalid_reason(const State& s) const override;
  std::optional<LabelSet> flip_labels(const State& from,
                                      const State& to) const override;
  std::vector<Neighbor> neighbors(const State& s) const override;
  std::optional<LabelSet> present_labels(const State& s) const override;

 private:
  int m_;
  bool centered_only_;
};

// The centred-flip graph H_m over all matchings.
FlipGraph centered_flip_graph(int m);

// Class c in 0..m-2 of the partition M+_{m,c} = M_{m,c} u M_{m,c-(m-2)}.
// Weight-0 matchings go to class 0 if their visible edges are positive
// and to class m - 2 otherwise, which makes the classes disjoint.
int weight_class(const Matching& mm);

// N_r(m, k) = (r+1)/(m+1) C(m+1, k) C(m-r-1, k-1).
std::int64_t narayana(int r, int m, int k);

// |M_{m,c}|: 2 for c = 0, otherwise N_1(m, |c|+1) / 2.
std::int64_t predicted_weight_count(int m, int c);

// Rainbow cycles for (m, r) in {(2,1), (4,1), (6,2), (8,2)}.
LabeledFlipCycle explicit_rainbow(int m, int r);

// The hand-built paths whose rotations give the (6,2) and (8,2) cycles.
std::vector<Matching> rotation_path(int m);

struct NoRainbowReport {
  SearchVerdict verdict = SearchVerdict::kNone;
  std::size_t matchings = 0;
  std::vector<ComponentReport> components;
  std::uint64_t nodes = 0;
  std::optional<LabeledFlipCycle> counterexample;
};

// Searches every component of H_m for a 1-rainbow cycle. Odd m is refused
// because m^2 / 2 is not an integer.
NoRainbowReport prove_no_rainbow1(int m, const SearchBudget& budget = {});

}  // namespace rainbow
