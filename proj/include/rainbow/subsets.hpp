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
#include <optional>
#include <string>
#include <vector>

#include "rainbow/cycle.hpp"
#include "rainbow/flip_graph.hpp"
#include "rainbow/label.hpp"

namespace rainbow {

inline constexpr const char* kSubsetFamily = "subset";

// A sorted k-subset of [n].
using KSubset = std::vector<int>;

KSubset symmetric_difference(const KSubset& a, const KSubset& b);
KSubset complement(int n, const KSubset& a);

// B_1, ..., B_l with n = 2l + 1 whose orbit under the cyclic shift is a
// rainbow cycle.
struct RainbowBlock {
  int n = 0;
  int k = 0;
  std::vector<KSubset> sets;

  int ell() const { return static_cast<int>(sets.size()); }
};

// C(B) = (B, sigma^1 B, ..., sigma^{2l} B).
LabeledFlipCycle cycle_from_block(const RainbowBlock& block);

struct BlockCheck {
  bool shape = false;          // (a)
  bool distinct = false;       // (b)
  bool all_lengths = false;    // (c)
  bool cycle_rainbow = false;  // C(B) verified directly
  bool ok() const { return shape && distinct && all_lengths && cycle_rainbow; }
};

// Conditions (a)-(c) for k = 2 ({1, b_i}, distances exactly [l]) or for
// k >= 3 ([k-1] plus b_i, b_i distinct), and the cycle check.
BlockCheck check_block(const RainbowBlock& block);

// Closed-form d_1, ..., d_l for k = 2; d_l is the signed step from b_l to
// 2, reduced into [-l, l].
std::vector<int> closed_form_d(int ell);

// b_1 = n, b_{i+1} = b_i + d_i; the block ({1, b_1}, ..., {1, b_l}).
RainbowBlock block_from_d(int ell, const std::vector<int>& d);

// True if d has length l, its last entry is the signed step from b_l to 2,
// and block_from_d satisfies (a)-(c).
bool is_rainbow_sequence(int ell, const std::vector<int>& d);

// Rainbow block for k = 2, n = 2l + 1, l >= 2.
RainbowBlock hamilton_k2(int ell);

// All rainbow sequences for k = 2, in lexicographic order. l <= 7.
std::vector<std::vector<int>> enumerate_rainbow_sequences(int ell);

struct DisjointFamily {
  std::vector<std::vector<int>> sequences;  // one witness of maximum size
  std::size_t candidates = 0;               // number of rainbow sequences
};

// Largest set of rainbow sequences whose cycles are pairwise
// edge-disjoint. l <= 7.
DisjointFamily max_edge_disjoint(int ell);

// True if `cycles` are pairwise edge-disjoint.
bool edge_disjoint(const std::vector<LabeledFlipCycle>& cycles);

// True if the edges of G_{n,2} not used by `cycles` form a 2-factor.
bool complement_is_two_factor(int n, const std::vector<LabeledFlipCycle>& cycles);

enum class ZigzagEdge { kDiagonal, kLevel, kCycle, kClosing };

struct ZigzagPath {
  int n = 0;
  int k = 0;
  int levels = 0;                  // m = l - ceil(k/2)
  int closing_length = 0;          // S
  std::vector<int> vertices;       // b_1, ..., b_l, k
  std::vector<ZigzagEdge> kinds;   // l entries
};

// Rainbow path on [k, n] for 3 <= k < n/3.
ZigzagPath zigzag_path(int ell, int k);
RainbowBlock zigzag_block(int ell, int k);

// Hand-built blocks for (l, k) = (4, 4) and (8, 8).
RainbowBlock special_block(int ell, int k);

// Dispatches to a construction; k > n/2 uses complementation. Throws a
// parity refusal for even n and OutOfRange where no construction is known.
LabeledFlipCycle subset_rainbow_cycle(int n, int k);

struct WalkReachability {
  bool closed_walk = false;       // some closed walk from the start uses every pair once
  std::uint64_t reachable_sets = 0;  // label sets reachable by a walk from the start
};

// Dynamic programme over sets of used pairs for walks in G_{n,k} that start
// at [k] and use every pair at most once; the current vertex is a function of
// the used set. Relaxes rainbow cycles (vertices may repeat), so a negative
// answer rules them out. C(n,2) <= 28.
WalkReachability rainbow_walk_reachability(int n, int k);

class SubsetOracle : public FlipGraphOracle {
 public:
  SubsetOracle(int n, int k);

  std::string_view family() const override { return kSubsetFamily; }
  CycleParams params() const override;
  int labels_per_step() const override { return 1; }
  std::vector<Label> universe() const override;
  std::optional<std::string> invalid_reason(const State& s) const override;
  std::optional<LabelSet> flip_labels(const State& from,
                                      const State& to) const override;
  std::vector<Neighbor> neighbors(const State& s) const override;

 private:
  int n_;
  int k_;
};

}  // namespace rainbow
