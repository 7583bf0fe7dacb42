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
#include <span>
#include <vector>

#include "rainbow/cycle.hpp"
#include "rainbow/label.hpp"

namespace rainbow {

// Coordinates are bounded so that orientation determinants are exact in
// 128-bit arithmetic.
inline constexpr std::int64_t kMaxCoordinate = (std::int64_t{1} << 40);

// +1 if r lies strictly left of the directed line p->q, -1 if strictly
// right, 0 if collinear.
int orientation(const Point& p, const Point& q, const Point& r);

// True if segments ab and cd cross in their relative interiors. Assumes
// general position and four distinct endpoints.
bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d);

// A point set in general position with canonical 1-based labels: point 1
// is the lowest point (ties: leftmost), points 2..n follow in
// counter-clockwise angular order around it, so {1,2} and {1,n} are hull
// edges.
class PointSet {
 public:
  PointSet() = default;

  int size() const { return static_cast<int>(points_.size()); }
  const Point& at(int label) const { return points_.at(label - 1); }
  const std::vector<Point>& points() const { return points_; }

  // Hull labels in counter-clockwise order starting at 1.
  const std::vector<int>& hull() const { return hull_; }
  bool on_hull(int label) const { return on_hull_.at(label - 1); }
  bool is_hull_edge(int a, int b) const;
  bool in_convex_position() const { return hull_.size() == points_.size(); }

  int orient(int a, int b, int c) const {
    return orientation(at(a), at(b), at(c));
  }
  bool crosses(Label e, Label f) const;

  // Points 1..m; again canonically labelled.
  PointSet prefix(int m) const;

  friend PointSet canonical_label(std::vector<Point> points);

 private:
  std::vector<Point> points_;
  std::vector<int> hull_;
  std::vector<char> on_hull_;
};

// Relabels `points` canonically. Throws GeneralPositionError on collinear
// triples, duplicates or out-of-range coordinates.
PointSet canonical_label(std::vector<Point> points);

// Throws GeneralPositionError unless no three points are collinear.
void require_general_position(std::span<const Point> points);

struct HalfPlanes {
  std::vector<int> left;   // strictly left of i->j
  std::vector<int> right;  // strictly right of i->j
};

HalfPlanes half_planes(const PointSet& x, int i, int j);

struct AngularOrders {
  // Left points by decreasing clockwise angle (i, j, k) at j.
  std::vector<int> tau_left;
  // Right points by decreasing counter-clockwise angle (i, j, k) at j.
  std::vector<int> tau_right;
};

AngularOrders angular_orders(const PointSet& x, int i, int j);

enum class Side { kLeft, kRight };

// pi^L = (tau^L, tau^R) and pi^R = (tau^R, tau^L).
std::vector<int> pi_order(const PointSet& x, int i, int j, Side side);

// n points with coordinates in [0, range], no three collinear; rejection
// sampling from a seeded generator.
std::vector<Point> random_general_position(int n, std::uint64_t seed,
                                           std::int64_t range = 1000);

// Convex position: n points on a parabola-like convex arc.
std::vector<Point> convex_points(int n);

}  // namespace rainbow
