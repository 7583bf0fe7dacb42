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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "rainbow/io.hpp"
#include "rainbow/matchings.hpp"
#include "rainbow/permutations.hpp"
#include "rainbow/spanning_trees.hpp"
#include "rainbow/subsets.hpp"
#include "rainbow/triangulations.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

std::size_t count_lines_containing(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::size_t count = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.find(needle) != std::string::npos) ++count;
  }
  return count;
}

std::vector<LabeledFlipCycle> one_per_family() {
  return {
      triangulation_rainbow1(6),
      tree_rainbow1(canonical_label({{0, 0}, {10, 0}, {12, 8}, {0, 10}, {5, 4}})),
      explicit_rainbow(4, 1),
      permutation_cycle(4, permutation_rainbow_sequence(4)),
      subset_rainbow_cycle(5, 2),
  };
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("state round trip") {
  for (const LabeledFlipCycle& c : one_per_family()) {
    for (const State& s : c.states) {
      const nlohmann::json j = state_to_json(c.family, c.params.n, s);
      CHECK(j["family"] == c.family);
      CHECK(state_from_json(nlohmann::json::parse(j.dump())) == s);
      if (is_edge_family(c.family)) CHECK(j["state"][0].is_array());
    }
  }
}

TEST_CASE("cycle round trip keeps the verdict") {
  for (const LabeledFlipCycle& c : one_per_family()) {
    CAPTURE(c.family);
    const std::string text = cycle_to_json(c).dump();
    const LabeledFlipCycle back = cycle_from_json(nlohmann::json::parse(text));
    CHECK(back == c);
    CHECK(cycle_to_json(back).dump() == text);
    CHECK(verify_rainbow(back).is_rainbow_r);
  }
  // A tampered label is caught after import.
  nlohmann::json j = cycle_to_json(triangulation_rainbow1(6));
  j["labels"][0][0] = nlohmann::json::array({1, 4});
  j["labels"][1][0] = nlohmann::json::array({1, 4});
  CHECK_FALSE(verify_rainbow(cycle_from_json(j)).is_rainbow_r);
}

TEST_CASE("malformed cycle documents") {
  CHECK_THROWS_AS(cycle_from_json(nlohmann::json::parse("{}")), ParseError);
  CHECK_THROWS_AS(cycle_from_json(nlohmann::json::parse(R"({"family":"subset","params":{"n":5,"k":2},"states":[[1,2]],"labels":[[[1]]],"r":1})")),
                  ParseError);
  CHECK_THROWS_AS(state_from_json(nlohmann::json::parse(R"({"family":"matching","n":2,"state":[[1,2,3]]})")),
                  ParseError);
  CHECK_THROWS_AS(read_cycle_file("/nonexistent/cycle.json"), ParseError);
}

TEST_CASE("DOT export") {
  const LabeledFlipCycle c = subset_rainbow_cycle(5, 2);
  const std::string dot = cycle_to_dot(c);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(count_lines_containing(dot, "->") == 10);
  CHECK(count_lines_containing(dot, "label=") - count_lines_containing(dot, "->") == 10);
}

TEST_CASE("point files") {
  std::istringstream ok("# a square\n0 0\n\n10 0   # corner\n10 10\n0 10\n");
  const auto pts = parse_points(ok);
  REQUIRE(pts.size() == 4);
  CHECK(pts[1] == Point{10, 0});
  std::istringstream bad("0 0\n1 x\n");
  try {
    parse_points(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  std::istringstream extra("0 0 7\n");
  CHECK_THROWS_AS(parse_points(extra), ParseError);
  const PointSet x = canonical_label(pts);
  std::istringstream again(format_points(x));
  CHECK(canonical_label(parse_points(again)).points() == x.points());
}

TEST_CASE("golden cycle files") {
  const std::filesystem::path dir = RAINBOW_TEST_DATA;
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".json") continue;
    ++files;
    CAPTURE(entry.path().string());
    const LabeledFlipCycle c = read_cycle_file(entry.path().string());
    CHECK(verify_rainbow(c).is_rainbow_r);
    CHECK(cycle_to_json(c).dump(2) + "\n" == slurp(entry.path()));
  }
  CHECK(files == 5);
}
