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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rainbow/cycle.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/geometry.hpp"

namespace rainbow {

// Malformed input file or document.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Families whose states are edge sets and serialise as lists of pairs.
bool is_edge_family(std::string_view family);

// {"family", "n", "state"}; edge-set states become lists of [lo, hi].
nlohmann::json state_to_json(std::string_view family, int n, const State& s);
State state_from_json(const nlohmann::json& j);

// {"family", "params", "states", "labels", "r"}.
nlohmann::json cycle_to_json(const LabeledFlipCycle& c);
LabeledFlipCycle cycle_from_json(const nlohmann::json& j);

LabeledFlipCycle read_cycle_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Graphviz digraph: one node per state, one labelled arc per step.
std::string cycle_to_dot(const LabeledFlipCycle& c);

// Human-readable state, e.g. "{1,3} {1,4}" or "2 1 3".
std::string format_state(std::string_view family, const State& s);

// One "x y" integer pair per line; '#' starts a comment.
std::vector<Point> parse_points(std::istream& in);
std::vector<Point> read_points_file(const std::string& path);

// Points in canonical label order, one "x y" per line, with a header.
std::string format_points(const PointSet& x);

}  // namespace rainbow
