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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "rainbow/errors.hpp"
#include "rainbow/geometry.hpp"

namespace rainbow {
namespace {

// Exact pseudo-angle of a direction in [0, 4): monotone in the true
// counter-clockwise angle from the positive x-axis. Returned as a
// fraction num/den with den > 0.
struct Fraction {
  __int128 num;
  __int128 den;
};

Fraction pseudo_angle(std::int64_t dx, std::int64_t dy) {
  const __int128 ax = dx < 0 ? -dx : dx;
  const __int128 ay = dy < 0 ? -dy : dy;
  const __int128 s = ax + ay;
  // p = dy / (|dx| + |dy|) in [-1, 1], then map quadrants into [0, 4).
  if (dy >= 0) {
    if (dx >= 0) return {ay, s};                  // [0, 1)
    return {2 * s - ay, s};                       // [1, 2]
  }
  if (dx < 0) return {2 * s + ay, s};             // (2, 3)
  return {4 * s - ay, s};                         // [3, 4)
}

bool less(Fraction a, Fraction b) { return a.num * b.den < b.num * a.den; }

// Counter-clockwise angle from direction u to direction v, in [0, 4).
Fraction ccw_from(Fraction u, Fraction v) {
  Fraction d{v.num * u.den - u.num * v.den, u.den * v.den};
  if (d.num < 0) d.num += 4 * d.den;
  return d;
}

std::vector<Point> random_points(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coord(-1000, 1000);
  for (;;) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    try {
      require_general_position(pts);
      return pts;
    } catch (const GeneralPositionError&) {
    }
  }
}

TEST_CASE("orientation is exact") {
  CHECK(orientation({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orientation({0, 0}, {1, 0}, {0, -1}) == -1);
  CHECK(orientation({0, 0}, {1, 1}, {2, 2}) == 0);
  const std::int64_t big = kMaxCoordinate;
  CHECK(orientation({-big, -big}, {big, big - 1}, {big - 1, big}) == 1);
  CHECK(orientation({-big, -big}, {big, big}, {big - 1, big - 1}) == 0);
}

TEST_CASE("collinear input is rejected") {
  CHECK_THROWS_AS(canonical_label({{0, 0}, {1, 1}, {2, 2}, {0, 5}}),
                  GeneralPositionError);
  CHECK_THROWS_AS(canonical_label({{0, 0}, {0, 0}}), GeneralPositionError);
  CHECK_THROWS_AS(canonical_label({{0, 0}, {kMaxCoordinate + 1, 0}}),
                  GeneralPositionError);
}

TEST_CASE("canonical labelling") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 8;
    const PointSet x = canonical_label(random_points(rng, n));
    // Point 1 is lowest, then leftmost.
    for (int k = 2; k <= n; ++k) {
      const Point& p = x.at(k);
      CHECK((p.y > x.at(1).y || (p.y == x.at(1).y && p.x > x.at(1).x)));
    }
    // Angular order around point 1 via pseudo-angles.
    for (int k = 2; k < n; ++k) {
      const Fraction a = pseudo_angle(x.at(k).x - x.at(1).x, x.at(k).y - x.at(1).y);
      const Fraction b =
          pseudo_angle(x.at(k + 1).x - x.at(1).x, x.at(k + 1).y - x.at(1).y);
      CHECK(less(a, b));
    }
    CHECK(x.hull().front() == 1);
    CHECK(x.hull()[1] == 2);
    CHECK(x.hull().back() == n);
    CHECK(x.is_hull_edge(1, 2));
    CHECK(x.is_hull_edge(1, n));
    // Hull oracle: a point is on the hull iff some line through it has all
    // other points on one side, tested against every other point.
    for (int k = 1; k <= n; ++k) {
      bool extreme = false;
      for (int j = 1; j <= n && !extreme; ++j) {
        if (j == k) continue;
        bool all_left = true;
        for (int m = 1; m <= n; ++m) {
          if (m != k && m != j && x.orient(k, j, m) < 0) all_left = false;
        }
        extreme = all_left;
      }
      CHECK(x.on_hull(k) == extreme);
    }
  }
}

TEST_CASE("half planes partition the rest") {
  std::mt19937_64 rng(11);
  const PointSet x = canonical_label(random_points(rng, 9));
  for (int i = 1; i <= 9; ++i) {
    for (int j = 1; j <= 9; ++j) {
      if (i == j) continue;
      const HalfPlanes hp = half_planes(x, i, j);
      CHECK(hp.left.size() + hp.right.size() == 7);
      const HalfPlanes back = half_planes(x, j, i);
      CHECK(back.left == hp.right);
      CHECK(back.right == hp.left);
    }
  }
}

TEST_CASE("angular orders match pseudo-angle sorting") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + trial % 6;
    const PointSet x = canonical_label(random_points(rng, n));
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const AngularOrders got = angular_orders(x, i, j);
        const Point& pj = x.at(j);
        const Fraction to_i = pseudo_angle(x.at(i).x - pj.x, x.at(i).y - pj.y);
        auto ccw = [&](int k) {
          return ccw_from(to_i, pseudo_angle(x.at(k).x - pj.x, x.at(k).y - pj.y));
        };
        // Clockwise angle from j->i to j->k is 4 - ccw on the pseudo scale.
        std::vector<int> left = half_planes(x, i, j).left;
        std::sort(left.begin(), left.end(), [&](int a, int b) {
          return less(ccw(a), ccw(b));  // decreasing clockwise angle
        });
        std::vector<int> right = half_planes(x, i, j).right;
        std::sort(right.begin(), right.end(), [&](int a, int b) {
          return less(ccw(b), ccw(a));  // decreasing ccw angle
        });
        CHECK(got.tau_left == left);
        CHECK(got.tau_right == right);
        auto pl = pi_order(x, i, j, Side::kLeft);
        CHECK(pl.size() == static_cast<std::size_t>(n - 2));
        CHECK(std::equal(left.begin(), left.end(), pl.begin()));
      }
    }
  }
}

TEST_CASE("prefix keeps labels") {
  std::mt19937_64 rng(17);
  const PointSet x = canonical_label(random_points(rng, 8));
  const PointSet y = x.prefix(6);
  for (int k = 1; k <= 6; ++k) CHECK(y.at(k) == x.at(k));
  CHECK(y.is_hull_edge(1, 6));
}

}  // namespace
}  // namespace rainbow
