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
#include "rainbow/label.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {
namespace {

// Complete graph K_k on single-element states; the label of an arc is the
// pair of its endpoints.
class CompleteGraphOracle : public FlipGraphOracle {
 public:
  explicit CompleteGraphOracle(int k) : k_(k) {}
  std::string_view family() const override { return "complete"; }
  CycleParams params() const override { return {k_}; }
  int labels_per_step() const override { return 1; }
  std::vector<Label> universe() const override {
    std::vector<Label> u;
    for (int a = 1; a <= k_; ++a)
      for (int b = a + 1; b <= k_; ++b) u.emplace_back(a, b);
    return u;
  }
  std::optional<std::string> invalid_reason(const State& s) const override {
    if (s.size() != 1 || s[0] < 1 || s[0] > k_) return "not a vertex";
    return std::nullopt;
  }
  std::optional<LabelSet> flip_labels(const State& a, const State& b) const override {
    if (a == b) return std::nullopt;
    return LabelSet{Label(a[0], b[0])};
  }
  std::vector<Neighbor> neighbors(const State& s) const override {
    std::vector<Neighbor> out;
    for (int b = 1; b <= k_; ++b)
      if (b != s[0]) out.push_back({{b}, {Label(s[0], b)}});
    sort_neighbors(out);
    return out;
  }

 private:
  int k_;
};

LabeledFlipCycle walk(std::vector<int> vertices) {
  LabeledFlipCycle c;
  c.family = "complete";
  for (int v : vertices) c.states.push_back({v});
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    c.step_labels.push_back({Label(vertices[i], vertices[(i + 1) % vertices.size()])});
  }
  return c;
}

TEST_CASE("labels are unordered pairs") {
  CHECK(Label(5, 2) == Label(2, 5));
  CHECK(Label(5, 2).lo() == 2);
  CHECK(Label(5, 2).other(5) == 2);
  CHECK_THROWS_AS(Label(3, 3), DomainError);
  CHECK_THROWS_AS(Label(0, 3), DomainError);
}

TEST_CASE("cyclic distance") {
  CHECK(cyclic_dist(17, Label(1, 15)) == 3);
  CHECK(cyclic_dist(9, Label(1, 9)) == 1);
  CHECK_THROWS_AS(cyclic_dist(9, Label(1, 10)), DomainError);
  // Oracle: walk clockwise from each endpoint until the other is reached.
  for (int n = 3; n <= 15; ++n) {
    for (int x = 1; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        int forward = 0;
        for (int p = x; p != y; p = p % n + 1) ++forward;
        int backward = 0;
        for (int p = y; p != x; p = p % n + 1) ++backward;
        CHECK(cyclic_dist(n, Label(x, y)) == std::min(forward, backward));
      }
    }
  }
}

TEST_CASE("sigma shifts cyclically") {
  const std::vector<int> a{1, 7};
  CHECK(sigma(7, a, 1) == std::vector<int>{1, 2});
  const std::vector<int> b{2, 4};
  CHECK(sigma(5, b, 3) == std::vector<int>{2, 5});
  const std::vector<int> s{1, 3, 4};
  for (int x = -9; x <= 9; ++x) {
    for (int y = -9; y <= 9; ++y) {
      const auto once = sigma(9, s, x + y);
      const auto inner = sigma(9, s, x);
      CHECK(sigma(9, inner, y) == once);
    }
  }
  CHECK(sigma(9, s, 9) == s);
}

TEST_CASE("verifier accepts a rainbow triangle") {
  CompleteGraphOracle k3(3);
  const auto report = verify_rainbow(walk({1, 2, 3}), 1, k3);
  CHECK(report.is_rainbow_r);
  CHECK(report.multiplicity_by_label.at(Label(1, 3)) == 1);
}

TEST_CASE("verifier reports violations") {
  CompleteGraphOracle k4(4);
  SUBCASE("repeated state") {
    const auto report = verify_rainbow(walk({1, 2, 1, 3, 4, 2}), 1, k4);
    CHECK_FALSE(report.is_rainbow_r);
    CHECK(report.has(Violation::Kind::kRepeatedState));
  }
  SUBCASE("label counts and length") {
    const auto report = verify_rainbow(walk({1, 2, 3}), 1, k4);
    CHECK(report.has(Violation::Kind::kLabelCount));
    CHECK(report.has(Violation::Kind::kWrongLength));
  }
  SUBCASE("declared labels must match the flip") {
    auto c = walk({1, 2, 3});
    c.step_labels[0] = {Label(1, 3)};
    CHECK(verify_rainbow(c, 1, k4).has(Violation::Kind::kLabelMismatch));
  }
  SUBCASE("illegal flip") {
    auto c = walk({1, 2});
    c.states[1] = {1};
    CHECK(verify_rainbow(c, 1, k4).has(Violation::Kind::kIllegalFlip));
  }
  SUBCASE("empty cycle") {
    CHECK(verify_rainbow(LabeledFlipCycle{}, 1, k4).has(Violation::Kind::kEmpty));
  }
}

TEST_CASE("search on complete graphs") {
  // K_3: the triangle is 1-rainbow. K_4: six labels need a 6-cycle on
  // four states, impossible. K_5: ten labels, five states, impossible.
  for (int k : {3, 4, 5}) {
    CompleteGraphOracle oracle(k);
    const std::vector<State> starts{{1}};
    const auto result = exhaustive_rainbow_search(oracle, 1, starts);
    CHECK(result.verdict == (k == 3 ? SearchVerdict::kFound : SearchVerdict::kNone));
    if (result.cycle) CHECK(verify_rainbow(*result.cycle, 1, oracle).is_rainbow_r);
  }
}

TEST_CASE("search budgets give inconclusive") {
  CompleteGraphOracle oracle(3);
  const std::vector<State> starts{{1}};
  SearchOptions opts;
  opts.budget.max_nodes = 1;
  const auto result = exhaustive_rainbow_search(oracle, 1, starts, opts);
  CHECK(result.verdict == SearchVerdict::kInconclusive);
}

TEST_CASE("components") {
  CompleteGraphOracle oracle(4);
  const std::vector<State> all{{1}, {2}, {3}, {4}};
  const auto comps = connected_components(oracle, all);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].size() == 4);
}

}  // namespace
}  // namespace rainbow
