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


#include "rainbow/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "rainbow/errors.hpp"
#include "rainbow/geometry.hpp"
#include "rainbow/io.hpp"
#include "rainbow/matchings.hpp"
#include "rainbow/permutations.hpp"
#include "rainbow/search.hpp"
#include "rainbow/spanning_trees.hpp"
#include "rainbow/subsets.hpp"
#include "rainbow/triangulations.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {
namespace {

// Time limits and sizes, as stated by the criteria.
constexpr double kTriangulationSecondsEach = 1.0;
constexpr int kRandomTreeSets = 20;
constexpr double kSmallTreeSearchSeconds = 60.0;
constexpr double kMatchingStructureSeconds = 300.0;
constexpr double kParityRefusalSeconds = 0.1;
constexpr double kPermutationSeconds = 30.0;
constexpr double kSubsetSeconds = 600.0;
constexpr int kRandomWalks = 10000;
constexpr int kRandomWalkSteps = 12;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::size_t choose2(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

// Collects named checks; the criterion passes iff all of them do.
class Checks {
 public:
  void add(const std::string& name, bool ok, const std::string& detail = "") {
    nlohmann::json entry{{"pass", ok}};
    if (!detail.empty()) entry["detail"] = detail;
    verdicts_[name] = std::move(entry);
    if (!ok) {
      pass_ = false;
      if (first_failure_.empty()) first_failure_ = name + (detail.empty() ? "" : " (" + detail + ")");
    }
  }
  void time(const std::string& name, double seconds) { timings_[name] = seconds; }

  bool pass() const { return pass_; }
  std::size_t size() const { return verdicts_.size(); }
  const std::string& first_failure() const { return first_failure_; }
  const nlohmann::json& verdicts() const { return verdicts_; }
  const nlohmann::json& timings() const { return timings_; }

 private:
  bool pass_ = true;
  std::string first_failure_;
  nlohmann::json verdicts_ = nlohmann::json::object();
  nlohmann::json timings_ = nlohmann::json::object();
};

// Runs `body`, turning an exception into a failed check.
template <typename F>
void guarded(Checks& checks, const std::string& name, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    checks.add(name, false, std::string("threw: ") + e.what());
  }
}

bool verifies(const LabeledFlipCycle& c) { return verify_rainbow(c).is_rainbow_r; }

std::string describe(const LabeledFlipCycle& c) {
  std::ostringstream os;
  os << "length " << c.size() << ", r=" << c.r;
  return os.str();
}

CriterionResult finish(int id, const std::string& name, const Checks& checks,
                       nlohmann::json parameters, nlohmann::json budgets,
                       const AcceptanceOptions& options, const std::string& summary,
                       Clock::time_point t0) {
  CriterionResult out;
  out.id = id;
  out.name = name;
  out.pass = checks.pass();
  out.seconds = since(t0);
  std::ostringstream os;
  os << checks.size() << " checks";
  if (!summary.empty()) os << "; " << summary;
  if (!out.pass) os << "; first failure: " << checks.first_failure();
  out.summary = os.str();
  out.manifest = {{"command", "repro"},
                  {"criterion", id},
                  {"name", name},
                  {"parameters", std::move(parameters)},
                  {"seed", options.seed},
                  {"budgets", std::move(budgets)},
                  {"verdicts", checks.verdicts()},
                  {"pass", out.pass}};
  out.timings = checks.timings();
  out.timings["total"] = out.seconds;
  return out;
}

CriterionResult triangulations(const AcceptanceOptions& options) {
  const auto t0 = Clock::now();
  Checks checks;
  double slowest = 0;
  for (int r : {1, 2}) {
    for (int n = (r == 1 ? 4 : 7); n <= 12; ++n) {
      const std::string name = "rainbow" + std::to_string(r) + " n=" + std::to_string(n);
      guarded(checks, name, [&] {
        const auto t = Clock::now();
        const LabeledFlipCycle c = r == 1 ? triangulation_rainbow1(n) : triangulation_rainbow2(n);
        const bool ok = verifies(c);
        const double dt = since(t);
        slowest = std::max(slowest, dt);
        checks.time(name, dt);
        checks.add(name, ok && c.r == r && c.size() == r * (choose2(n) - n), describe(c));
        checks.add(name + " time", dt < kTriangulationSecondsEach);
      });
    }
  }
  std::ostringstream os;
  os << "rainbow1 n=4..12, rainbow2 n=7..12; slowest " << slowest << " s (limit "
     << kTriangulationSecondsEach << " s)";
  return finish(1, "triangulations", checks, {{"rainbow1_n", {4, 12}}, {"rainbow2_n", {7, 12}}},
                {{"seconds_each", kTriangulationSecondsEach}}, options, os.str(), t0);
}

// One point set per hull size for n = 4, 5.
std::vector<std::vector<Point>> small_configurations() {
  return {
      {{0, 0}, {10, 0}, {10, 10}, {0, 10}},
      {{0, 0}, {10, 0}, {5, 10}, {5, 3}},
      convex_points(5),
      {{0, 0}, {10, 0}, {12, 8}, {0, 10}, {5, 4}},
      {{0, 0}, {20, 0}, {10, 20}, {8, 6}, {12, 5}},
  };
}

CriterionResult spanning_trees(const AcceptanceOptions& options) {
  const auto t0 = Clock::now();
  Checks checks;
  for (int i = 0; i < kRandomTreeSets; ++i) {
    const int n = 3 + i % 6;
    const std::uint64_t seed = options.seed + i;
    const std::string name = "rainbow1 random n=" + std::to_string(n) + " seed=" + std::to_string(seed);
    guarded(checks, name, [&] {
      const PointSet x = canonical_label(random_general_position(n, seed));
      const LabeledFlipCycle c = tree_rainbow1(x);
      checks.add(name, verifies(c) && c.size() == choose2(n), describe(c));
    });
  }
  int constructions = 0;
  for (int n = 6; n <= 8; ++n) {
    std::vector<std::pair<std::string, std::vector<Point>>> sets{{"convex", convex_points(n)}};
    for (int j = 0; j < 2; ++j) {
      const std::uint64_t seed = options.seed + 1000 + 10 * n + j;
      sets.emplace_back("seed=" + std::to_string(seed), random_general_position(n, seed));
    }
    for (const auto& [tag, pts] : sets) {
      const PointSet x = canonical_label(pts);
      for (int r = 1; 2 * r + 1 <= n; ++r) {
        for (bool even : {true, false}) {
          if (!even && r < 2) continue;
          const int rr = even ? 2 * r : 2 * r - 1;
          const std::string name = (even ? "rainbow_even" : "rainbow_odd") + std::string(" n=") +
                                   std::to_string(n) + " " + tag + " r=" + std::to_string(rr);
          guarded(checks, name, [&] {
            const LabeledFlipCycle c = even ? tree_rainbow_even(x, r) : tree_rainbow_odd(x, r);
            checks.add(name, verifies(c) && c.r == rr && c.size() == rr * choose2(n), describe(c));
            ++constructions;
          });
        }
      }
    }
  }
  double slowest = 0;
  SearchBudget budget;
  budget.max_seconds = kSmallTreeSearchSeconds;
  for (const auto& pts : small_configurations()) {
    const PointSet x = canonical_label(pts);
    for (int r = 2; r <= max_tree_rainbow(x.size()); ++r) {
      std::ostringstream os;
      os << "rainbow_small n=" << x.size() << " hull=" << x.hull().size() << " r=" << r;
      const std::string name = os.str();
      guarded(checks, name, [&] {
        const auto t = Clock::now();
        const LabeledFlipCycle c = tree_rainbow_small(x, r, budget);
        const double dt = since(t);
        slowest = std::max(slowest, dt);
        checks.time(name, dt);
        checks.add(name, verifies(c) && c.r == r && c.size() == r * choose2(x.size()), describe(c));
        checks.add(name + " time", dt <= kSmallTreeSearchSeconds);
      });
    }
  }
  std::ostringstream os;
  os << kRandomTreeSets << " random sets, " << constructions
     << " even/odd constructions for n=6..8, small-set searches slowest " << slowest << " s";
  return finish(2, "spanning trees", checks,
                {{"random_sets", kRandomTreeSets}, {"construction_n", {6, 8}},
                 {"small_configurations", small_configurations().size()}},
                {{"small_search_seconds", kSmallTreeSearchSeconds}}, options, os.str(), t0);
}

struct ComponentStats {
  std::size_t vertices = 0;
  std::size_t components = 0;
  std::size_t trees = 0;
  std::size_t cross_class_edges = 0;
};

ComponentStats component_stats(int m) {
  const FlipGraph g = centered_flip_graph(m);
  ComponentStats s;
  s.vertices = g.size();
  const auto comps = g.components();
  s.components = comps.size();
  for (const auto& comp : comps) {
    std::size_t arcs = 0;
    for (int v : comp) {
      arcs += g.arcs(v).size();
      const int c = weight_class(Matching::decode(m, g.state(v)));
      for (const Arc& a : g.arcs(v)) {
        if (weight_class(Matching::decode(m, g.state(a.to))) != c) ++s.cross_class_edges;
      }
    }
    if (arcs / 2 + 1 == comp.size()) ++s.trees;
  }
  s.cross_class_edges /= 2;
  return s;
}

CriterionResult matching_structure(const AcceptanceOptions& options) {
  const auto t0 = Clock::now();
  Checks checks;
  std::ostringstream summary;
  for (int m : {4, 6, 8, 10}) {
    const std::string name = "H_" + std::to_string(m);
    guarded(checks, name, [&] {
      const auto t = Clock::now();
      const ComponentStats s = component_stats(m);
      checks.time(name, since(t));
      std::ostringstream d;
      d << s.vertices << " matchings, " << s.components << " components, " << s.trees
        << " trees, " << s.cross_class_edges << " cross-class edges";
      checks.add(name + " components >= m-1", s.components >= static_cast<std::size_t>(m - 1),
                 d.str());
      checks.add(name + " no cross-class edges", s.cross_class_edges == 0);
      if (m == 6) {
        checks.add("H_6 exact structure", s.vertices == 132 && s.components == 8 && s.trees == 5,
                   d.str());
        summary << "H_6: " << d.str();
      }
    });
  }
  for (int m : {2, 4, 6, 8}) {
    std::map<int, std::int64_t> by_weight;
    for (const Matching& mm : enumerate_matchings(m)) ++by_weight[weight(mm)];
    bool ok = by_weight.size() == static_cast<std::size_t>(2 * m - 3);
    for (int c = -(m - 2); c <= m - 2; ++c) ok = ok && by_weight[c] == predicted_weight_count(m, c);
    checks.add("weight counts m=" + std::to_string(m), ok);
  }
  const double total = since(t0);
  checks.add("time", total < kMatchingStructureSeconds);
  summary << "; total " << total << " s (limit " << kMatchingStructureSeconds << " s)";
  return finish(3, "matching structure", checks,
                {{"components_m", {4, 6, 8, 10}}, {"weight_counts_m", {2, 4, 6, 8}}},
                {{"total_seconds", kMatchingStructureSeconds}}, options, summary.str(), t0);
}

bool refused_for_parity(const std::function<void()>& f) {
  try {
    f();
  } catch (const Unsupported& e) {
    return e.reason() == Unsupported::Reason::kParity;
  }
  return false;
}

CriterionResult matching_existence(const AcceptanceOptions& options) {
  const auto t0 = Clock::now();
  Checks checks;
  const std::map<std::pair<int, int>, std::size_t> lengths{
      {{2, 1}, 2}, {{4, 1}, 8}, {{6, 2}, 36}, {{8, 2}, 64}};
  for (const auto& [key, len] : lengths) {
    const std::string name =
        "explicit m=" + std::to_string(key.first) + " r=" + std::to_string(key.second);
    guarded(checks, name, [&] {
      const LabeledFlipCycle c = explicit_rainbow(key.first, key.second);
      checks.add(name, verifies(c) && c.r == key.second && c.size() == len, describe(c));
    });
  }
  std::string m10 = "not run";
  bool downgraded = false;
  for (int m : {6, 8, 10}) {
    const std::string name = "no 1-rainbow m=" + std::to_string(m);
    guarded(checks, name, [&] {
      SearchBudget budget;
      if (m == 10) budget.max_seconds = options.m10_budget_seconds;
      const auto t = Clock::now();
      const NoRainbowReport report = prove_no_rainbow1(m, budget);
      checks.time(name, since(t));
      std::ostringstream d;
      d << to_string(report.verdict) << ", " << report.components.size() << " components";
      if (m == 10 && report.verdict == SearchVerdict::kInconclusive) {
        downgraded = true;
        m10 = "inconclusive within budget; criterion downgraded to m in {6,8}";
        checks.add(name + " (downgraded)", true, d.str());
        return;
      }
      if (m == 10) m10 = to_string(report.verdict);
      checks.add(name, report.verdict == SearchVerdict::kNone, d.str());
    });
  }
  for (int m : {3, 5, 7, 9}) {
    const auto t = Clock::now();
    const bool refused = refused_for_parity([m] { prove_no_rainbow1(m); });
    const double dt = since(t);
    checks.add("odd m=" + std::to_string(m) + " refused", refused && dt < kParityRefusalSeconds);
  }
  return finish(4, "matching existence", checks,
                {{"explicit", {{2, 1}, {4, 1}, {6, 2}, {8, 2}}}, {"none_m", {6, 8, 10}},
                 {"refused_m", {3, 5, 7, 9}}},
                {{"m10_seconds", options.m10_budget_seconds},
                 {"refusal_seconds", kParityRefusalSeconds}},
                options, std::string("m=10: ") + m10 + (downgraded ? " [DOWNGRADED]" : ""), t0);
}

CriterionResult permutations(const AcceptanceOptions& options) {
  const auto t0 = Clock::now();
  Checks checks;
  for (int n : {4, 5, 8, 9, 12, 13}) {
    const std::string name = "rainbow n=" + std::to_string(n);
    guarded(checks, name, [&] {
      const LabeledFlipCycle c = permutation_cycle(n, permutation_rainbow_sequence(n));
      checks.add(name, verify_rainbow(c, 1, PermutationOracle(n)).is_rainbow_r &&
                           c.size() == choose2(n),
                 describe(c));
    });
  }
  for (int n : {2, 3, 6, 7, 10, 11}) {
    checks.add("refused n=" + std::to_string(n),
               refused_for_parity([n] { permutation_rainbow_sequence(n); }));
  }
  guarded(checks, "search S_5", [&] {
    PermutationOracle oracle(5);
    const std::vector<State> starts{identity_permutation(5)};
    SearchOptions opts;
    opts.through_starts_only = true;
    const SearchResult r = exhaustive_rainbow_search(oracle, 1, starts, opts);
    checks.add("search S_5", r.verdict == SearchVerdict::kFound && r.cycle &&
                                 verify_rainbow(*r.cycle, 1, oracle).is_rainbow_r);
  });
  const double total = since(t0);
  checks.add("time", total < kPermutationSeconds);
  std::ostringstream os;
  os << "total " << total << " s (limit " << kPermutationSeconds << " s)";
  return finish(5, "permutations", checks,
                {{"rainbow_n", {4, 5, 8, 9, 12, 13}}, {"refused_n", {2, 3, 6, 7, 10, 11}}},
                {{"total_seconds", kPermutationSeconds}}, options, os.str(), t0);
}

CriterionResult subsets(const AcceptanceOptions& options) {
  const auto t0 = Clock::now();
  Checks checks;
  for (int ell = 2; ell <= 7; ++ell) {
    const std::string name = "hamilton_k2 n=" + std::to_string(2 * ell + 1);
    guarded(checks, name, [&] {
      const RainbowBlock block = hamilton_k2(ell);
      const LabeledFlipCycle a = cycle_from_block(block);
      checks.add(name, check_block(block).ok() && verifies(a), describe(a));
      std::vector<int> back = closed_form_d(ell);
      std::reverse(back.begin(), back.end());
      const LabeledFlipCycle b = cycle_from_block(block_from_d(ell, back));
      checks.add(name + " disjoint pair", verifies(b) && edge_disjoint({a, b}));
    });
  }
  for (int ell = 1; ell <= 6; ++ell) {
    const std::size_t count = enumerate_rainbow_sequences(ell).size();
    // Length 1 has the single self-reverse sequence.
    checks.add("enumeration l=" + std::to_string(ell),
               ell == 1 ? count == 1 : count % 2 == 0, std::to_string(count) + " sequences");
  }
  guarded(checks, "max_edge_disjoint l=6", [&] {
    const DisjointFamily fam = max_edge_disjoint(6);
    std::vector<LabeledFlipCycle> cycles;
    for (const auto& d : fam.sequences) cycles.push_back(cycle_from_block(block_from_d(6, d)));
    checks.add("max_edge_disjoint l=6", fam.sequences.size() == 10 && edge_disjoint(cycles),
               std::to_string(fam.sequences.size()) + " cycles");
  });
  std::ostringstream even;
  for (int n : {4, 6, 8}) {
    for (int k = 2; k <= n / 2; ++k) {
      std::ostringstream os;
      os << "none n=" << n << " k=" << k;
      const std::string name = os.str();
      guarded(checks, name, [&] {
        const auto t = Clock::now();
        if (n <= 6) {
          SubsetOracle oracle(n, k);
          KSubset start;
          for (int x = 1; x <= k; ++x) start.push_back(x);
          const std::vector<State> starts{start};
          SearchOptions opts;
          opts.through_starts_only = true;
          const SearchResult r = exhaustive_rainbow_search(oracle, 1, starts, opts);
          checks.add(name + " (search)", r.verdict == SearchVerdict::kNone,
                     std::to_string(r.nodes) + " nodes");
        } else {
          const WalkReachability w = rainbow_walk_reachability(n, k);
          checks.add(name + " (walk DP)", !w.closed_walk,
                     std::to_string(w.reachable_sets) + " reachable pair sets");
        }
        checks.time(name, since(t));
      });
    }
  }
  int zigzags = 0;
  for (int ell = 2; ell <= 14; ++ell) {
    for (int k = 3; 3 * k < 2 * ell + 1; ++k) {
      const std::string name = "zigzag l=" + std::to_string(ell) + " k=" + std::to_string(k);
      guarded(checks, name, [&] {
        checks.add(name, check_block(zigzag_block(ell, k)).ok());
        ++zigzags;
      });
    }
  }
  for (auto [ell, k] : {std::pair{4, 4}, std::pair{8, 8}}) {
    const std::string name = "special l=" + std::to_string(ell) + " k=" + std::to_string(k);
    guarded(checks, name, [&] {
      const LabeledFlipCycle c = cycle_from_block(special_block(ell, k));
      checks.add(name, verifies(c), describe(c));
    });
  }
  const double total = since(t0);
  checks.add("time", total < kSubsetSeconds);
  std::ostringstream os;
  os << "even n: search for n=4,6, closed-walk DP for n=8; " << zigzags << " zigzag blocks; total "
     << total << " s (limit " << kSubsetSeconds << " s)";
  return finish(6, "subsets", checks,
                {{"hamilton_l", {2, 7}}, {"enumeration_l", {1, 6}}, {"even_n", {4, 6, 8}},
                 {"zigzag_l", {2, 14}}, {"special", {{4, 4}, {8, 8}}}},
                {{"total_seconds", kSubsetSeconds}}, options, os.str(), t0);
}

// Points 1..2m clockwise on the unit circle from angle pi/2; true if the
// origin is strictly inside the quad.
bool trig_contains_origin(int m, const Quad& q) {
  auto pt = [m](int i) {
    const double a = std::numbers::pi / 2 - std::numbers::pi * (i - 1) / m;
    return std::pair{std::cos(a), std::sin(a)};
  };
  int sign = 0;
  for (int i = 0; i < 4; ++i) {
    const auto [x0, y0] = pt(q[i]);
    const auto [x1, y1] = pt(q[(i + 1) % 4]);
    const double cross = x0 * y1 - y0 * x1;
    if (std::abs(cross) < 1e-9) return false;
    const int s = cross > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  return true;
}

// One verified cycle per family.
std::vector<LabeledFlipCycle> round_trip_samples() {
  std::vector<LabeledFlipCycle> out;
  out.push_back(triangulation_rainbow1(6));
  out.push_back(tree_rainbow1(canonical_label(random_general_position(6, 7))));
  out.push_back(explicit_rainbow(4, 1));
  out.push_back(permutation_cycle(4, permutation_rainbow_sequence(4)));
  out.push_back(subset_rainbow_cycle(7, 2));
  return out;
}

CriterionResult cross_cutting(const AcceptanceOptions& options) {
  const auto t0 = Clock::now();
  Checks checks;
  // Weights need edge signs, which exist for even m only.
  for (int m = 2; m <= 8; m += 2) {
    const FlipGraph g = centered_flip_graph(m);
    std::size_t arcs = 0;
    bool ok = true;
    for (std::size_t v = 0; v < g.size(); ++v) {
      const int w = weight(Matching::decode(m, g.state(static_cast<int>(v))));
      for (const Arc& a : g.arcs(static_cast<int>(v))) {
        ++arcs;
        ok = ok && std::abs(weight(Matching::decode(m, g.state(a.to))) - w) == m - 2;
      }
    }
    checks.add("weight change m=" + std::to_string(m), ok, std::to_string(arcs) + " arcs");
  }
  std::mt19937_64 rng(options.seed);
  for (int m : {6, 8}) {
    const FlipGraph g = centered_flip_graph(m);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(g.size()) - 1);
    bool ok = true;
    std::size_t steps = 0;
    for (int walk = 0; walk < kRandomWalks; ++walk) {
      int v = pick(rng);
      int last = 0;
      for (int s = 0; s < kRandomWalkSteps && !g.arcs(v).empty(); ++s) {
        const auto& arcs = g.arcs(v);
        const int to = arcs[std::uniform_int_distribution<std::size_t>(0, arcs.size() - 1)(rng)].to;
        const Matching a = Matching::decode(m, g.state(v));
        const Matching b = Matching::decode(m, g.state(to));
        const int dw = weight(b) - weight(a);
        ok = ok && (last == 0 || dw == -last) && visible_sign(a) == -visible_sign(b);
        last = dw;
        v = to;
        ++steps;
      }
    }
    checks.add("alternation m=" + std::to_string(m), ok,
               std::to_string(kRandomWalks) + " walks, " + std::to_string(steps) + " steps");
  }
  // Odd m has diameters as quad sides, with the centre on the boundary.
  for (int m = 2; m <= 8; m += 2) {
    MatchingOracle oracle(m, false);
    std::set<Quad> seen;
    bool ok = true;
    for (const Matching& mm : enumerate_matchings(m)) {
      for (const Neighbor& nb : oracle.neighbors(mm.encode())) {
        const Quad q = *flip_quad(mm, Matching::decode(m, nb.state));
        if (!seen.insert(q).second) continue;
        const bool geometric = trig_contains_origin(m, q);
        ok = ok && is_centered(m, q) == geometric && contains_center(m, q) == geometric;
      }
    }
    checks.add("centredness m=" + std::to_string(m), ok, std::to_string(seen.size()) + " quads");
  }
  guarded(checks, "json round trip", [&] {
    for (const LabeledFlipCycle& c : round_trip_samples()) {
      const std::string text = cycle_to_json(c).dump();
      const LabeledFlipCycle back = cycle_from_json(nlohmann::json::parse(text));
      const RainbowReport before = verify_rainbow(c);
      const RainbowReport after = verify_rainbow(back);
      checks.add("json round trip " + c.family,
                 back == c && cycle_to_json(back).dump() == text &&
                     before.is_rainbow_r == after.is_rainbow_r && after.is_rainbow_r);
    }
  });
  return finish(7, "cross-cutting properties", checks,
                {{"weight_m", {2, 4, 6, 8}}, {"walks", kRandomWalks}, {"walk_steps", kRandomWalkSteps},
                 {"centredness_m", {2, 4, 6, 8}}},
                nlohmann::json::object(), options, "", t0);
}

}  // namespace

const std::vector<CriterionInfo>& acceptance_criteria() {
  static const std::vector<CriterionInfo> all{
      {1, "triangulations"},     {2, "spanning trees"}, {3, "matching structure"},
      {4, "matching existence"}, {5, "permutations"},   {6, "subsets"},
      {7, "cross-cutting properties"},
  };
  return all;
}

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  switch (id) {
    case 1: return triangulations(options);
    case 2: return spanning_trees(options);
    case 3: return matching_structure(options);
    case 4: return matching_existence(options);
    case 5: return permutations(options);
    case 6: return subsets(options);
    case 7: return cross_cutting(options);
    default: throw DomainError("unknown criterion " + std::to_string(id));
  }
}

std::string format_result_line(const CriterionResult& result) {
  std::ostringstream os;
  os << (result.pass ? "[PASS] " : "[FAIL] ") << result.id << " " << result.name << ": "
     << result.summary;
  return os.str();
}

}  // namespace rainbow
