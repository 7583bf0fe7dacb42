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
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <set>

#include "doctest.h"
#include "rainbow/errors.hpp"
#include "rainbow/matchings.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {
namespace {

Matching make(int m, std::vector<std::pair<int, int>> pairs) {
  std::vector<Label> e;
  for (auto [a, b] : pairs) e.emplace_back(a, b);
  return Matching(m, std::move(e));
}

// Independent oracles.

std::int64_t catalan(int m) {
  std::vector<std::int64_t> c(m + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[m];
}

// Lattice paths with m up-steps and m - r down-steps that never go below
// zero, counted by number of peaks.
std::map<int, std::int64_t> dyck_peaks(int m, int r) {
  std::map<int, std::int64_t> out;
  const int len = 2 * m - r;
  for (std::uint32_t w = 0; w < (1u << len); ++w) {
    if (std::popcount(w) != m) continue;
    int h = 0;
    int peaks = 0;
    bool ok = true;
    for (int i = 0; i < len && ok; ++i) {
      const bool up = (w >> i) & 1u;
      h += up ? 1 : -1;
      if (h < 0) ok = false;
      if (up && i + 1 < len && !((w >> (i + 1)) & 1u)) ++peaks;
    }
    if (ok) ++out[peaks];
  }
  return out;
}

// Points on the unit circle, clockwise from angle pi/2; origin strictly
// inside the quad.
bool trig_contains_origin(int m, const Quad& q) {
  auto pt = [m](int i) {
    const double a = std::numbers::pi / 2 - std::numbers::pi * (i - 1) / m;
    return std::pair{std::cos(a), std::sin(a)};
  };
  int sign = 0;
  for (int i = 0; i < 4; ++i) {
    auto [x0, y0] = pt(q[i]);
    auto [x1, y1] = pt(q[(i + 1) % 4]);
    const double cross = x0 * y1 - y0 * x1;
    if (std::abs(cross) < 1e-9) return false;
    const int s = cross > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  return true;
}

TEST_CASE("matching validation and rotation") {
  CHECK_THROWS_AS(make(2, {{1, 3}, {2, 4}}), DomainError);
  CHECK_THROWS_AS(make(2, {{1, 2}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(make(2, {{1, 2}, {3, 5}}), DomainError);
  const Matching a = make(2, {{1, 2}, {3, 4}});
  CHECK(a.rotated(1) == make(2, {{1, 4}, {2, 3}}));
  CHECK(a.rotated(2) == a);
  CHECK(a.rotated(-1) == a.rotated(3));
}

TEST_CASE("enumeration gives Catalan numbers") {
  for (int m = 1; m <= 9; ++m) {
    const auto all = enumerate_matchings(m);
    CHECK(static_cast<std::int64_t>(all.size()) == catalan(m));
    std::set<State> distinct;
    for (const Matching& mm : all) distinct.insert(mm.encode());
    CHECK(distinct.size() == all.size());
  }
}

TEST_CASE("Narayana numbers against a lattice path count") {
  for (int m = 2; m <= 9; ++m) {
    for (int r = 0; r <= 2 && r < m; ++r) {
      const auto counts = dyck_peaks(m, r);
      for (int k = 1; k <= m; ++k) {
        const auto it = counts.find(k);
        const std::int64_t expected = it == counts.end() ? 0 : it->second;
        CHECK_MESSAGE(narayana(r, m, k) == expected, "r=" << r << " m=" << m << " k=" << k);
      }
    }
  }
}

TEST_CASE("weight class sizes") {
  for (int m : {2, 4, 6, 8, 10}) {
    std::map<int, std::int64_t> by_weight;
    for (const Matching& mm : enumerate_matchings(m)) ++by_weight[weight(mm)];
    for (int c = -(m - 2); c <= m - 2; ++c) {
      CHECK_MESSAGE(by_weight[c] == predicted_weight_count(m, c), "m=" << m << " c=" << c);
    }
    CHECK(by_weight.size() == static_cast<std::size_t>(2 * m - 3));
  }
}

TEST_CASE("edge lengths and signs") {
  CHECK(edge_length(6, Label(1, 2)) == 0);
  CHECK(edge_length(6, Label(1, 6)) == 2);
  CHECK(edge_length(6, Label(1, 8)) == 2);
  CHECK(edge_length(6, Label(1, 12)) == 0);
  CHECK(edge_sign(6, Label(1, 4)) == 1);
  CHECK(edge_sign(6, Label(2, 5)) == -1);
  CHECK(edge_sign(6, Label(1, 12)) == -1);  // first endpoint is 12
  CHECK_THROWS_AS(edge_sign(5, Label(1, 2)), DomainError);
}

TEST_CASE("flip types of the centred 6-gon flips") {
  CHECK(quad_type(6, {1, 6, 11, 12}) == "2200");
  CHECK(quad_type(6, {1, 6, 9, 10}) == "2101");
  CHECK(quad_type(6, {1, 6, 9, 12}) == "2110");
  for (const Quad& q : {Quad{1, 6, 11, 12}, Quad{1, 6, 9, 10}, Quad{1, 6, 9, 12}}) {
    CHECK(is_centered(6, q));
  }
}

TEST_CASE("weight change in the m = 8 example") {
  const Matching mm = make(8, {{1, 4}, {2, 3}, {5, 6}, {7, 8}, {9, 16}, {10, 13}, {11, 12},
                               {14, 15}});
  CHECK(weight(mm) == 3);
  CHECK(is_centered(8, {1, 4, 9, 16}));
  CHECK_FALSE(is_centered(8, {1, 4, 7, 8}));
  const Matching flipped = make(8, {{1, 16}, {2, 3}, {4, 9}, {5, 6}, {7, 8}, {10, 13},
                                    {11, 12}, {14, 15}});
  CHECK(weight(flipped) - weight(mm) == -6);
  MatchingOracle oracle(8, true);
  const auto labels = oracle.flip_labels(mm.encode(), flipped.encode());
  REQUIRE(labels);
  CHECK(*labels == LabelSet{Label(1, 16), Label(4, 9)});
}

TEST_CASE("combinatorial and geometric centredness agree") {
  // Odd m is excluded: there a side can be a diameter, with the centre on
  // the boundary.
  for (int m = 2; m <= 8; m += 2) {
    MatchingOracle oracle(m, false);
    std::set<Quad> seen;
    for (const Matching& mm : enumerate_matchings(m)) {
      for (const Neighbor& nb : oracle.neighbors(mm.encode())) {
        const Quad q = *flip_quad(mm, Matching::decode(m, nb.state));
        if (!seen.insert(q).second) continue;
        const bool trig = trig_contains_origin(m, q);
        CHECK(is_centered(m, q) == trig);
        CHECK(contains_center(m, q) == trig);
      }
    }
    CHECK(seen.size() > 0);
  }
}

TEST_CASE("oracle neighbours are symmetric and legal") {
  for (bool centred : {false, true}) {
    MatchingOracle oracle(5, centred);
    for (const Matching& mm : enumerate_matchings(5)) {
      const State s = mm.encode();
      CHECK_FALSE(oracle.invalid_reason(s));
      for (const Neighbor& nb : oracle.neighbors(s)) {
        CHECK(oracle.flip_labels(s, nb.state) == nb.labels);
        CHECK(oracle.flip_labels(nb.state, s).has_value());
      }
    }
  }
  // Neighbours are exactly the matchings sharing all but two edges.
  MatchingOracle full(5, false);
  const auto all = enumerate_matchings(5);
  for (const Matching& a : all) {
    std::size_t expected = 0;
    for (const Matching& b : all) {
      std::vector<Label> common;
      std::set_intersection(a.edges().begin(), a.edges().end(), b.edges().begin(),
                            b.edges().end(), std::back_inserter(common));
      expected += common.size() == 3;
    }
    CHECK(full.neighbors(a.encode()).size() == expected);
  }
  CHECK(full.invalid_reason({1, 3, 2, 4, 5, 6, 7, 8}).has_value());
}

TEST_CASE("structure of H_6") {
  const FlipGraph g = centered_flip_graph(6);
  CHECK(g.size() == 132);
  const auto comps = g.components();
  CHECK(comps.size() == 8);
  int trees = 0;
  std::map<int, int> per_class;
  for (const auto& comp : comps) {
    std::size_t edges = 0;
    std::set<int> classes;
    for (int v : comp) {
      classes.insert(weight_class(Matching::decode(6, g.state(v))));
      for (const Arc& a : g.arcs(v)) edges += a.to > v;
    }
    CHECK(classes.size() == 1);
    ++per_class[*classes.begin()];
    if (edges + 1 == comp.size()) ++trees;
  }
  CHECK(trees == 5);
  CHECK(per_class[2] == 4);

  // Component F: the largest one, in class 2.
  const auto& f = *std::max_element(comps.begin(), comps.end(),
                                    [](const auto& a, const auto& b) { return a.size() < b.size(); });
  CHECK(f.size() == 48);
  std::map<std::string, int> types;
  std::vector<std::vector<int>> without_spokes(g.size());
  for (int v : f) {
    const Matching a = Matching::decode(6, g.state(v));
    for (const Arc& arc : g.arcs(v)) {
      const std::string t = quad_type(6, *flip_quad(a, Matching::decode(6, g.state(arc.to))));
      if (arc.to > v) ++types[t];
      if (t != "2101") without_spokes[v].push_back(arc.to);
    }
  }
  CHECK(types["2101"] == 12);
  // Dropping the spokes leaves four 12-cycles; one of them is the set of
  // matchings with exactly one edge of length 2.
  std::set<int> left(f.begin(), f.end());
  int cycles = 0;
  bool base_found = false;
  while (!left.empty()) {
    std::vector<int> stack{*left.begin()};
    std::set<int> part;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      if (!part.insert(v).second) continue;
      for (int w : without_spokes[v]) stack.push_back(w);
    }
    for (int v : part) left.erase(v);
    bool two_regular = true;
    bool one_long = true;
    for (int v : part) {
      two_regular = two_regular && without_spokes[v].size() == 2;
      int longs = 0;
      const Matching mm = Matching::decode(6, g.state(v));
      for (const Label& e : mm.edges()) longs += edge_length(6, e) == 2;
      one_long = one_long && longs == 1;
    }
    CHECK(part.size() == 12);
    CHECK(two_regular);
    cycles += 1;
    base_found = base_found || one_long;
  }
  CHECK(cycles == 4);
  CHECK(base_found);
}

TEST_CASE("weight conservation and class separation") {
  for (int m : {4, 6, 8}) {
    const FlipGraph g = centered_flip_graph(m);
    for (std::size_t v = 0; v < g.size(); ++v) {
      const Matching a = Matching::decode(m, g.state(static_cast<int>(v)));
      for (const Arc& arc : g.arcs(static_cast<int>(v))) {
        const Matching b = Matching::decode(m, g.state(arc.to));
        CHECK(std::abs(weight(b) - weight(a)) == m - 2);
        CHECK(weight_class(a) == weight_class(b));
      }
    }
    CHECK(g.components().size() >= static_cast<std::size_t>(m - 1));
  }
}

TEST_CASE("weight changes alternate along random walks") {
  std::mt19937 rng(20261019);
  for (int m : {6, 8}) {
    const FlipGraph g = centered_flip_graph(m);
    std::uniform_int_distribution<int> pick_start(0, static_cast<int>(g.size()) - 1);
    for (int walk = 0; walk < 2000; ++walk) {
      int v = pick_start(rng);
      int last = 0;
      for (int step = 0; step < 12 && !g.arcs(v).empty(); ++step) {
        const auto& arcs = g.arcs(v);
        const int to = arcs[std::uniform_int_distribution<std::size_t>(0, arcs.size() - 1)(rng)].to;
        const int dw = weight(Matching::decode(m, g.state(to))) -
                       weight(Matching::decode(m, g.state(v)));
        if (last != 0) REQUIRE(dw == -last);
        last = dw;
        v = to;
      }
    }
  }
}

TEST_CASE("explicit rainbow cycles") {
  const std::map<std::pair<int, int>, std::size_t> lengths{
      {{2, 1}, 2}, {{4, 1}, 8}, {{6, 2}, 36}, {{8, 2}, 64}};
  for (const auto& [key, len] : lengths) {
    const LabeledFlipCycle c = explicit_rainbow(key.first, key.second);
    CHECK(c.size() == len);
    const RainbowReport report = verify_rainbow(c);
    CHECK_MESSAGE(report.is_rainbow_r, "m=" << key.first << " " << report.summary());
  }
  CHECK_THROWS_AS(explicit_rainbow(6, 1), Unsupported);
}

TEST_CASE("rotation paths close under a shift by two") {
  const auto p6 = rotation_path(6);
  CHECK(p6.front().rotated(2) == p6.back());
  const auto p8 = rotation_path(8);
  CHECK(p8.front().rotated(-2) == p8.back());
}

TEST_CASE("no 1-rainbow cycle for m = 6 and m = 8") {
  for (int m : {6, 8}) {
    const NoRainbowReport report = prove_no_rainbow1(m);
    CHECK(report.verdict == SearchVerdict::kNone);
    CHECK(report.matchings == static_cast<std::size_t>(catalan(m)));
    CHECK_FALSE(report.counterexample);
  }
  try {
    prove_no_rainbow1(7);
    FAIL("odd m must be refused");
  } catch (const Unsupported& e) {
    CHECK(e.reason() == Unsupported::Reason::kParity);
  }
}

}  // namespace
}  // namespace rainbow
