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
#include <utility>
#include <vector>

#include "rainbow/cycle.hpp"
#include "rainbow/flip_graph.hpp"
#include "rainbow/geometry.hpp"
#include "rainbow/label.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

inline constexpr const char* kSpanningTreeFamily = "spanning_tree";

// Empty if `edges` form a plane spanning tree on x, otherwise a reason.
std::optional<std::string> tree_problem(const PointSet& x, const std::vector<Label>& edges);

// Edge set of a spanning tree on points 1..n, kept sorted. Planarity is
// checked against a point set by tree_problem.
class PlaneTree {
 public:
  PlaneTree() = default;
  explicit PlaneTree(std::vector<Label> edges);

  static PlaneTree decode(const State& s) { return PlaneTree(decode_edges(s)); }

  const std::vector<Label>& edges() const { return edges_; }
  State encode() const { return encode_edges(edges_); }
  bool has(Label e) const;
  int degree(int v) const;
  std::vector<int> neighbours(int v) const;

  // Throws IllegalFlip unless `remove` is present and `insert` absent.
  PlaneTree flipped(Label remove, Label insert) const;

  bool operator==(const PlaneTree&) const = default;

 private:
  std::vector<Label> edges_;
};

PlaneTree star_tree(int n, int i);

// S_i, the n - 2 intermediate trees, S_j along the flip sequence F^L or
// F^R from star i to star j.
std::vector<PlaneTree> star_path(const PointSet& x, int i, int j, Side side);

// True if `path` is a central path of `t` with the given degrees: the path
// edges are present, the degrees match and every other vertex is a leaf
// attached to the path.
bool has_central_path(const PlaneTree& t, const std::vector<int>& path,
                      const std::vector<int>& degrees);

// Longest shortest path, in edges.
int tree_diameter(const PlaneTree& t, int n);

// Recovers {i, j} from an intermediate tree of a star-to-star path; n >= 6.
std::optional<Label> intermediate_endpoints(const PlaneTree& t, int n);

// 1-rainbow cycle of length C(n,2), starting at S_1 and ending with the
// intermediate trees of P^L_{n,1}. n >= 3.
LabeledFlipCycle tree_rainbow1(const PointSet& x);

// floor((n-1)/2) edge-disjoint Hamilton cycles of K_n on vertices 1..n,
// each as a vertex sequence starting at n. For even n the unused edges
// form a perfect matching. n >= 3.
std::vector<std::vector<int>> walecki(int n);

// Closed walk using every arc once, starting at the smallest vertex with
// an arc; Hierholzer's algorithm taking unused arcs in ascending order.
// Throws DomainError unless in-degree equals
// out-degree everywhere and the arcs are connected.
std::vector<int> euler_cycle(int n, const std::vector<std::pair<int, int>>& arcs);

// The oriented Hamilton cycles used by the even and odd constructions:
// cycle 0 runs along the hull counter-clockwise; with `odd_form` it also
// contains {n-1,n}, {n,1} and {1,2}.
std::vector<std::vector<int>> mapped_hamilton_cycles(const PointSet& x, int count,
                                                     bool odd_form);

// D_{i,j,k} = T_1 - {j,k} + {k,b}, where T_1 is the last intermediate tree
// of P_{i,j} and {k,b} the first edge added on P_{j,k}. Throws DomainError
// if {j,k} is a hull edge.
PlaneTree detour_tree(const PointSet& x, int i, int j, Side side_ij, int k, Side side_jk);

// 2r-rainbow cycle, n >= 6, 1 <= r <= floor((n-1)/2).
LabeledFlipCycle tree_rainbow_even(const PointSet& x, int r);

// (2r-1)-rainbow cycle, n >= 6, 2 <= r <= floor((n-1)/2).
LabeledFlipCycle tree_rainbow_odd(const PointSet& x, int r);

// r-rainbow cycle by exhaustive search for n = 4 (r = 2) and n = 5
// (r = 2, 3, 4). Throws Unsupported outside that range and Inconclusive
// if the budget ran out.
LabeledFlipCycle tree_rainbow_small(const PointSet& x, int r,
                                                   const SearchBudget& budget = {});

// Largest r covered: n - 1 for odd n, n - 2 for even n, 1 for n = 3.
int max_tree_rainbow(int n);

// Dispatches to the constructions above.
LabeledFlipCycle tree_rainbow(const PointSet& x, int r, const SearchBudget& budget = {});

class TreeOracle : public FlipGraphOracle {
 public:
  explicit TreeOracle(PointSet x);

  std::string_view family() const override { return kSpanningTreeFamily; }
  CycleParams params() const override;
  int labels_per_step() const override { return 1; }
  std::vector<Label> universe() const override;
  std::optional<std::string> invalid_reason(const State& s) const override;
  std::optional<LabelSet> flip_labels(const State& from, const State& to) const override;
  std::vector<Neighbor> neighbors(const State& s) const override;
  std::optional<LabelSet> present_labels(const State& s) const override;

  const PointSet& points() const { return x_; }

 private:
  PointSet x_;
};

}  // namespace rainbow
