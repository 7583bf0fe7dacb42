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
#include <set>

#include "doctest.h"
#include "rainbow/errors.hpp"
#include "rainbow/search.hpp"
#include "rainbow/subsets.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {
namespace {

std::vector<int> reversed(std::vector<int> d) {
  std::reverse(d.begin(), d.end());
  return d;
}

TEST_CASE("closed-form sequences") {
  CHECK(closed_form_d(2) == std::vector<int>{-1, -2});
  CHECK(closed_form_d(3) == std::vector<int>{3, 1, -2});
  CHECK(block_from_d(3, closed_form_d(3)).sets ==
        std::vector<KSubset>{{1, 7}, {1, 3}, {1, 4}});
  const auto d8 = closed_form_d(8);
  std::vector<int> magnitudes;
  for (std::size_t i = 0; i + 1 < d8.size(); ++i) magnitudes.push_back(std::abs(d8[i]));
  CHECK(magnitudes == std::vector<int>{3, 5, 7, 1, 6, 4, 2});
  std::vector<int> b;
  for (const auto& s : block_from_d(8, d8).sets) b.push_back(s[1]);
  CHECK(b == std::vector<int>{17, 3, 15, 5, 6, 12, 8, 10});
}

TEST_CASE("Hamilton cycles for k = 2") {
  for (int ell = 2; ell <= 7; ++ell) {
    const RainbowBlock block = hamilton_k2(ell);
    CHECK(check_block(block).ok());
    const auto d = closed_form_d(ell);
    CHECK(is_rainbow_sequence(ell, d));
    const auto back = reversed(d);
    CHECK(back != d);
    CHECK(is_rainbow_sequence(ell, back));
    const auto a = cycle_from_block(block);
    const auto r = cycle_from_block(block_from_d(ell, back));
    CHECK(edge_disjoint({a, r}));
    CHECK(a.size() == static_cast<std::size_t>((2 * ell + 1) * ell));
  }
  // b_l = l + 2 for even l, l + 1 for odd l.
  for (int ell = 2; ell <= 12; ++ell) {
    const auto block = block_from_d(ell, closed_form_d(ell));
    CHECK(block.sets.back()[1] == (ell % 2 == 0 ? ell + 2 : ell + 1));
    CHECK(check_block(block).ok());
  }
}

TEST_CASE("enumeration matches brute force for small l") {
  for (int ell = 1; ell <= 4; ++ell) {
    std::vector<std::vector<int>> brute;
    std::vector<int> d(ell, -ell);
    for (;;) {
      if (std::find(d.begin(), d.end(), 0) == d.end() && is_rainbow_sequence(ell, d)) {
        brute.push_back(d);
      }
      int i = ell - 1;
      while (i >= 0 && d[i] == ell) d[i--] = -ell;
      if (i < 0) break;
      ++d[i];
    }
    CHECK(enumerate_rainbow_sequences(ell) == brute);
  }
}

TEST_CASE("enumeration is closed under reversal") {
  for (int ell = 1; ell <= 6; ++ell) {
    const auto all = enumerate_rainbow_sequences(ell);
    const std::set<std::vector<int>> set(all.begin(), all.end());
    for (const auto& d : all) {
      CHECK(is_rainbow_sequence(ell, d));
      CHECK(set.count(reversed(d)) == 1);
      if (ell >= 2) CHECK(reversed(d) != d);
    }
    if (ell >= 2) {
      CHECK(all.size() % 2 == 0);
      CHECK(set.count(closed_form_d(ell)) == 1);
    } else {
      CHECK(all.size() == 1);
    }
  }
}

TEST_CASE("edge-disjoint families") {
  const auto one = max_edge_disjoint(1);
  CHECK(one.sequences.size() == 1);
  const auto two = max_edge_disjoint(2);
  CHECK(two.sequences.size() == 2);
  for (int ell : {2, 3, 4, 5}) {
    const auto fam = max_edge_disjoint(ell);
    CHECK(fam.sequences.size() <= static_cast<std::size_t>(2 * ell - 2));
    std::vector<LabeledFlipCycle> cycles;
    for (const auto& d : fam.sequences) cycles.push_back(cycle_from_block(block_from_d(ell, d)));
    CHECK(edge_disjoint(cycles));
    CHECK(complement_is_two_factor(2 * ell + 1, cycles) ==
          (fam.sequences.size() == static_cast<std::size_t>(2 * ell - 2)));
  }
}

TEST_CASE("zigzag blocks") {
  for (int ell = 2; ell <= 14; ++ell) {
    const int n = 2 * ell + 1;
    for (int k = 3; 3 * k < n; ++k) {
      const ZigzagPath z = zigzag_path(ell, k);
      CHECK(z.vertices.size() == static_cast<std::size_t>(ell + 1));
      CHECK(z.vertices.front() == n);
      CHECK(z.vertices.back() == k);
      CHECK(std::count(z.kinds.begin(), z.kinds.end(), ZigzagEdge::kCycle) == 1);
      std::vector<int> lengths;
      for (int i = 0; i < ell; ++i) {
        lengths.push_back(cyclic_dist(n, Label(z.vertices[i], z.vertices[i + 1])));
      }
      std::sort(lengths.begin(), lengths.end());
      for (int i = 0; i < ell; ++i) CHECK(lengths[i] == i + 1);
      const BlockCheck check = check_block(zigzag_block(ell, k));
      CHECK_MESSAGE(check.ok(), "l=" << ell << " k=" << k);
    }
  }
  CHECK(zigzag_path(14, 8).closing_length == 11);
  CHECK(zigzag_path(13, 7).closing_length == 9);
  CHECK_THROWS_AS(zigzag_path(4, 3), Unsupported);
}

TEST_CASE("literal blocks") {
  RainbowBlock four;
  four.n = 17;
  four.k = 4;
  for (int b : {17, 5, 6, 14, 8, 12, 9, 11}) four.sets.push_back({1, 2, 3, b});
  CHECK(check_block(four).ok());

  for (auto [ell, k] : {std::pair{4, 4}, std::pair{8, 8}}) {
    const BlockCheck check = check_block(special_block(ell, k));
    CHECK(check.cycle_rainbow);
    CHECK(check.all_lengths);
    CHECK_FALSE(check.shape);
  }
  CHECK_THROWS_AS(special_block(5, 5), Unsupported);
}

TEST_CASE("dispatcher and complementation") {
  for (int n = 5; n <= 15; n += 2) {
    for (int k = 2; k <= n - 2; ++k) {
      try {
        const LabeledFlipCycle c = subset_rainbow_cycle(n, k);
        const auto report = verify_rainbow(c, 1, SubsetOracle(n, k));
        CHECK_MESSAGE(report.is_rainbow_r, "n=" << n << " k=" << k);
      } catch (const Unsupported& e) {
        CHECK(e.reason() == Unsupported::Reason::kOutOfRange);
      }
    }
  }
  for (int n : {4, 6, 8, 10}) {
    try {
      subset_rainbow_cycle(n, 2);
      FAIL("expected refusal");
    } catch (const Unsupported& e) {
      CHECK(e.reason() == Unsupported::Reason::kParity);
    }
  }
}

TEST_CASE("no rainbow cycle for small even n") {
  for (int n : {4, 6}) {
    for (int k = 2; k <= n / 2; ++k) {
      SubsetOracle oracle(n, k);
      KSubset start;
      for (int x = 1; x <= k; ++x) start.push_back(x);
      const std::vector<State> starts{start};
      SearchOptions opts;
      opts.through_starts_only = true;
      CHECK(exhaustive_rainbow_search(oracle, 1, starts, opts).verdict == SearchVerdict::kNone);
    }
  }
}

TEST_CASE("walk reachability agrees with search") {
  for (int n = 4; n <= 7; ++n) {
    for (int k = 1; k <= n / 2; ++k) {
      const bool closed = rainbow_walk_reachability(n, k).closed_walk;
      CHECK_MESSAGE(closed == (n % 2 == 1), "n=" << n << " k=" << k);
    }
  }
  // A found cycle is in particular a closed walk.
  for (int k = 2; k <= 3; ++k) {
    SubsetOracle oracle(7, k);
    KSubset start;
    for (int x = 1; x <= k; ++x) start.push_back(x);
    const std::vector<State> starts{start};
    SearchOptions opts;
    opts.through_starts_only = true;
    CHECK(exhaustive_rainbow_search(oracle, 1, starts, opts).verdict == SearchVerdict::kFound);
  }
  CHECK_THROWS_AS(rainbow_walk_reachability(9, 2), Unsupported);
}

TEST_CASE("subset oracle") {
  SubsetOracle oracle(7, 3);
  const State s{1, 4, 6};
  const auto nbs = oracle.neighbors(s);
  CHECK(nbs.size() == 12);
  for (const auto& nb : nbs) CHECK(oracle.flip_labels(nb.state, s) == nb.labels);
  CHECK(oracle.invalid_reason({1, 1, 2}).has_value());
}

}  // namespace
}  // namespace rainbow
