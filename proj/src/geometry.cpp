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

#include "rainbow/geometry.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

int orientation(const Point& p, const Point& q, const Point& r) {
  using i128 = __int128;
  const i128 det = static_cast<i128>(q.x - p.x) * (r.y - p.y) -
                   static_cast<i128>(q.y - p.y) * (r.x - p.x);
  return (det > 0) - (det < 0);
}

bool segments_cross(const Point& a, const Point& b, const Point& c,
                    const Point& d) {
  return orientation(a, b, c) * orientation(a, b, d) < 0 &&
         orientation(c, d, a) * orientation(c, d, b) < 0;
}

void require_general_position(std::span<const Point> points) {
  for (const Point& p : points) {
    if (p.x > kMaxCoordinate || p.x < -kMaxCoordinate ||
        p.y > kMaxCoordinate || p.y < -kMaxCoordinate) {
      throw GeneralPositionError("coordinate out of range");
    }
  }
  const std::size_t n = points.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (points[a] == points[b]) {
        throw GeneralPositionError("duplicate point");
      }
      for (std::size_t c = b + 1; c < n; ++c) {
        if (orientation(points[a], points[b], points[c]) == 0) {
          throw GeneralPositionError(
              "collinear points " + std::to_string(a + 1) + ", " +
              std::to_string(b + 1) + ", " + std::to_string(c + 1));
        }
      }
    }
  }
}

PointSet canonical_label(std::vector<Point> points) {
  require_general_position(points);
  PointSet x;
  if (points.empty()) return x;
  auto lowest = std::min_element(points.begin(), points.end(),
                                 [](const Point& a, const Point& b) {
                                   return a.y != b.y ? a.y < b.y : a.x < b.x;
                                 });
  std::iter_swap(points.begin(), lowest);
  const Point origin = points.front();
  std::sort(points.begin() + 1, points.end(),
            [&origin](const Point& a, const Point& b) {
              return orientation(origin, a, b) > 0;
            });
  x.points_ = std::move(points);

  const int n = x.size();
  std::vector<int> stack;
  for (int k = 1; k <= n; ++k) {
    while (stack.size() >= 2 &&
           orientation(x.at(stack[stack.size() - 2]), x.at(stack.back()),
                       x.at(k)) <= 0) {
      stack.pop_back();
    }
    stack.push_back(k);
  }
  x.hull_ = std::move(stack);
  x.on_hull_.assign(n, 0);
  for (int h : x.hull_) x.on_hull_[h - 1] = 1;
  return x;
}

bool PointSet::is_hull_edge(int a, int b) const {
  const std::size_t h = hull_.size();
  if (h < 2) return false;
  for (std::size_t t = 0; t < h; ++t) {
    const int u = hull_[t];
    const int v = hull_[(t + 1) % h];
    if ((u == a && v == b) || (u == b && v == a)) return true;
  }
  return false;
}

bool PointSet::crosses(Label e, Label f) const {
  if (e.contains(f.lo()) || e.contains(f.hi())) return false;
  return segments_cross(at(e.lo()), at(e.hi()), at(f.lo()), at(f.hi()));
}

PointSet PointSet::prefix(int m) const {
  if (m < 0 || m > size()) throw DomainError("prefix size out of range");
  return canonical_label(
      std::vector<Point>(points_.begin(), points_.begin() + m));
}

HalfPlanes half_planes(const PointSet& x, int i, int j) {
  if (i == j) throw DomainError("half_planes needs distinct points");
  HalfPlanes out;
  for (int k = 1; k <= x.size(); ++k) {
    if (k == i || k == j) continue;
    (x.orient(i, j, k) > 0 ? out.left : out.right).push_back(k);
  }
  return out;
}

AngularOrders angular_orders(const PointSet& x, int i, int j) {
  HalfPlanes hp = half_planes(x, i, j);
  AngularOrders out{std::move(hp.left), std::move(hp.right)};
  // Within one side all directions from j span less than a half-turn, so
  // the orientation test is a total order.
  std::sort(out.tau_left.begin(), out.tau_left.end(),
            [&](int a, int b) { return x.orient(j, a, b) > 0; });
  std::sort(out.tau_right.begin(), out.tau_right.end(),
            [&](int a, int b) { return x.orient(j, a, b) < 0; });
  return out;
}

std::vector<int> pi_order(const PointSet& x, int i, int j, Side side) {
  AngularOrders t = angular_orders(x, i, j);
  std::vector<int>& first = side == Side::kLeft ? t.tau_left : t.tau_right;
  std::vector<int>& second = side == Side::kLeft ? t.tau_right : t.tau_left;
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

std::vector<Point> random_general_position(int n, std::uint64_t seed,
                                           std::int64_t range) {
  if (n < 0 || range < 2 || range > kMaxCoordinate) {
    throw DomainError("random_general_position: bad arguments");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, range);
  std::vector<Point> out;
  while (static_cast<int>(out.size()) < n) {
    const Point p{coord(rng), coord(rng)};
    bool ok = true;
    for (std::size_t a = 0; a < out.size() && ok; ++a) {
      if (out[a] == p) ok = false;
      for (std::size_t b = a + 1; b < out.size() && ok; ++b) {
        if (orientation(out[a], out[b], p) == 0) ok = false;
      }
    }
    if (ok) out.push_back(p);
  }
  return out;
}

std::vector<Point> convex_points(int n) {
  std::vector<Point> out;
  for (int i = 0; i < n; ++i) out.push_back({i, static_cast<std::int64_t>(i) * i});
  return out;
}

}  // namespace rainbow
