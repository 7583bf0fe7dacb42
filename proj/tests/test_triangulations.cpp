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

#include <chrono>
#include <set>

#include "doctest.h"
#include "rainbow/errors.hpp"
#include "rainbow/search.hpp"
#include "rainbow/triangulations.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {
namespace {

long long catalan(int k) {
  // Segner recurrence, independent of the enumerator.
  std::vector<long long> c(k + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= k; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[k];
}

TEST_CASE("diagonal universe") {
  for (int n = 4; n <= 14; ++n) {
    CHECK(diagonal_universe(n).size() == static_cast<std::size_t>(n * (n - 1) / 2 - n));
  }
}

TEST_CASE("stars") {
  for (int n = 4; n <= 10; ++n) {
    for (int i = 1; i <= n; ++i) {
      const Triangulation s = Triangulation::star(n, i);
      CHECK(s.diagonals().size() == static_cast<std::size_t>(n - 3));
      for (const Label& d : s.diagonals()) CHECK(d.contains(i));
    }
  }
}

TEST_CASE("F_{i,n} takes S_i to S_{i+1}") {
  for (int n = 4; n <= 10; ++n) {
    for (int i = 1; i <= n; ++i) {
      Triangulation t = Triangulation::star(n, i);
      for (const Flip& f : star_flip_sequence(i, n)) t = t.apply_flip(f.first, f.second);
      CHECK(t == Triangulation::star(n, i % n + 1));
    }
  }
}

TEST_CASE("illegal flips are rejected") {
  const Triangulation s = Triangulation::star(6, 1);
  CHECK_THROWS_AS(s.apply_flip(Label(1, 3), Label(2, 5)), IllegalFlip);
  CHECK_THROWS_AS(s.apply_flip(Label(2, 4), Label(1, 3)), IllegalFlip);
  CHECK(s.flip_partner(Label(1, 3)) == Label(2, 4));
  CHECK_THROWS_AS(Triangulation(6, {Label(1, 3), Label(2, 4), Label(1, 5)}), DomainError);
}

TEST_CASE("1-rainbow cycles") {
  const std::vector<std::size_t> small_lengths{2, 5, 9};
  for (int n = 4; n <= 12; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const LabeledFlipCycle c = triangulation_rainbow1(n);
    TriangulationOracle oracle(n);
    const auto report = verify_rainbow(c, 1, oracle);
    CHECK_MESSAGE(report.is_rainbow_r, "n=" << n << " " << report.summary());
    CHECK(c.size() == static_cast<std::size_t>(n * (n - 1) / 2 - n));
    if (n <= 6) CHECK(c.size() == small_lengths[n - 4]);
    CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(1));
  }
}

TEST_CASE("2-rainbow cycles") {
  for (int n = 7; n <= 12; ++n) {
    const LabeledFlipCycle c = triangulation_rainbow2(n);
    TriangulationOracle oracle(n);
    const auto report = verify_rainbow(c, 2, oracle);
    CHECK_MESSAGE(report.is_rainbow_r, "n=" << n << " " << report.summary());
    CHECK(c.size() == static_cast<std::size_t>(2 * (n * (n - 1) / 2 - n)));
  }
  CHECK_THROWS_AS(triangulation_rainbow2(6), Unsupported);
  // The hexagon version repeats a triangulation.
  const LabeledFlipCycle six = triangulation_rainbow2(6, true);
  const auto report = verify_rainbow(six, 2, TriangulationOracle(6));
  CHECK_FALSE(report.is_rainbow_r);
  CHECK(report.has(Violation::Kind::kRepeatedState));
}

TEST_CASE("enumeration") {
  for (int n = 3; n <= 12; ++n) {
    const auto all = enumerate_triangulations(n);
    CHECK(all.size() == static_cast<std::size_t>(catalan(n - 2)));
    std::set<std::vector<Label>> distinct;
    for (const auto& t : all) distinct.insert(t.diagonals());
    CHECK(distinct.size() == all.size());
  }
  CHECK_THROWS_AS(enumerate_triangulations(15), DomainError);
}

TEST_CASE("flip graph is symmetric and 1-regular per diagonal") {
  for (int n = 5; n <= 8; ++n) {
    TriangulationOracle oracle(n);
    std::size_t arcs = 0;
    for (const auto& t : enumerate_triangulations(n)) {
      const auto nbs = oracle.neighbors(t.encode());
      CHECK(nbs.size() == static_cast<std::size_t>(n - 3));
      arcs += nbs.size();
      for (const auto& nb : nbs) {
        CHECK_FALSE(oracle.invalid_reason(nb.state));
        CHECK(oracle.flip_labels(t.encode(), nb.state) == nb.labels);
        CHECK(oracle.flip_labels(nb.state, t.encode()).has_value());
      }
    }
    CHECK(arcs == static_cast<std::size_t>(catalan(n - 2) * (n - 3)));
  }
}

TEST_CASE("exhaustive search on small polygons") {
  for (int n : {5, 6}) {
    TriangulationOracle oracle(n);
    const std::vector<State> starts{Triangulation::star(n, 1).encode()};
    const auto found = exhaustive_rainbow_search(oracle, 1, starts);
    REQUIRE(found.verdict == SearchVerdict::kFound);
    CHECK(verify_rainbow(*found.cycle, 1, oracle).is_rainbow_r);
  }
  // The hexagon has 14 triangulations, too few for a cycle of length 18.
  TriangulationOracle six(6);
  const std::vector<State> starts{Triangulation::star(6, 1).encode()};
  CHECK(exhaustive_rainbow_search(six, 2, starts).verdict == SearchVerdict::kNone);
}

}  // namespace
}  // namespace rainbow
