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

#include "rainbow/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "rainbow/matchings.hpp"
#include "rainbow/spanning_trees.hpp"
#include "rainbow/triangulations.hpp"

namespace rainbow {

using nlohmann::json;

bool is_edge_family(std::string_view family) {
  return family == kTriangulationFamily || family == kSpanningTreeFamily ||
         family == kMatchingFamily;
}

namespace {

json state_value(std::string_view family, const State& s) {
  if (!is_edge_family(family)) return s;
  json out = json::array();
  for (const Label& e : decode_edges(s)) out.push_back({e.lo(), e.hi()});
  return out;
}

State state_from_value(std::string_view family, const json& v) {
  if (!v.is_array()) throw ParseError("state must be an array");
  State s;
  if (!is_edge_family(family)) {
    for (const json& x : v) s.push_back(x.get<int>());
    return s;
  }
  std::vector<Label> edges;
  for (const json& e : v) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::sort(edges.begin(), edges.end());
  return encode_edges(edges);
}

Label label_from_value(const json& v) {
  if (!v.is_array() || v.size() != 2) throw ParseError("label must be a pair");
  return Label(v[0].get<int>(), v[1].get<int>());
}

}  // namespace

json state_to_json(std::string_view family, int n, const State& s) {
  return json{{"family", family}, {"n", n}, {"state", state_value(family, s)}};
}

State state_from_json(const json& j) {
  try {
    return state_from_value(j.at("family").get<std::string>(), j.at("state"));
  } catch (const json::exception& e) {
    throw ParseError(std::string("state JSON: ") + e.what());
  }
}

json cycle_to_json(const LabeledFlipCycle& c) {
  json params{{"n", c.params.n}};
  if (c.params.k) params["k"] = c.params.k;
  if (!c.params.points.empty()) {
    json pts = json::array();
    for (const Point& p : c.params.points) pts.push_back({p.x, p.y});
    params["points"] = pts;
  }
  if (c.params.centered_only) params["centered_only"] = true;
  json states = json::array();
  for (const State& s : c.states) states.push_back(state_value(c.family, s));
  json labels = json::array();
  for (const LabelSet& step : c.step_labels) {
    json one = json::array();
    for (const Label& l : step) one.push_back({l.lo(), l.hi()});
    labels.push_back(one);
  }
  return json{{"family", c.family}, {"params", params}, {"states", states},
              {"labels", labels},   {"r", c.r}};
}

LabeledFlipCycle cycle_from_json(const json& j) {
  try {
    LabeledFlipCycle c;
    c.family = j.at("family").get<std::string>();
    const json& p = j.at("params");
    c.params.n = p.at("n").get<int>();
    c.params.k = p.value("k", 0);
    c.params.centered_only = p.value("centered_only", false);
    if (p.contains("points")) {
      for (const json& q : p.at("points")) {
        if (!q.is_array() || q.size() != 2) throw ParseError("point must be a pair");
        c.params.points.push_back({q[0].get<std::int64_t>(), q[1].get<std::int64_t>()});
      }
    }
    for (const json& s : j.at("states")) c.states.push_back(state_from_value(c.family, s));
    for (const json& step : j.at("labels")) {
      LabelSet one;
      for (const json& l : step) one.push_back(label_from_value(l));
      std::sort(one.begin(), one.end());
      c.step_labels.push_back(std::move(one));
    }
    c.r = j.at("r").get<int>();
    return c;
  } catch (const json::exception& e) {
    throw ParseError(std::string("cycle JSON: ") + e.what());
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    throw ParseError(std::string("cycle JSON: ") + e.what());
  }
}

LabeledFlipCycle read_cycle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return cycle_from_json(j);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path);
}

std::string format_state(std::string_view family, const State& s) {
  std::ostringstream out;
  if (is_edge_family(family)) {
    const auto edges = decode_edges(s);
    for (std::size_t i = 0; i < edges.size(); ++i) out << (i ? " " : "") << edges[i].str();
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
  }
  return out.str();
}

std::string cycle_to_dot(const LabeledFlipCycle& c) {
  std::ostringstream out;
  out << "digraph rainbow {\n";
  out << "  // family=" << c.family << " n=" << c.params.n << " r=" << c.r << "\n";
  for (std::size_t i = 0; i < c.states.size(); ++i) {
    out << "  s" << i << " [label=\"" << format_state(c.family, c.states[i]) << "\"];\n";
  }
  for (std::size_t i = 0; i < c.states.size(); ++i) {
    std::string label;
    if (i < c.step_labels.size()) {
      for (const Label& l : c.step_labels[i]) label += (label.empty() ? "" : " ") + l.str();
    }
    out << "  s" << i << " -> s" << (i + 1) % c.states.size() << " [label=\"" << label
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::vector<Point> parse_points(std::istream& in) {
  std::vector<Point> out;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::int64_t x = 0;
    std::int64_t y = 0;
    if (!(fields >> x)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("line " + std::to_string(number) + ": expected \"x y\"");
    }
    std::string rest;
    if (!(fields >> y) || (fields >> rest)) {
      throw ParseError("line " + std::to_string(number) + ": expected \"x y\"");
    }
    out.push_back({x, y});
  }
  return out;
}

std::vector<Point> read_points_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_points(in);
}

std::string format_points(const PointSet& x) {
  std::ostringstream out;
  out << "# canonical labelling: line i is point i\n";
  for (const Point& p : x.points()) out << p.x << " " << p.y << "\n";
  return out.str();
}

}  // namespace rainbow
