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

#include "rainbow/matchings.hpp"

#include <algorithm>
#include <functional>

#include "rainbow/errors.hpp"
#include "rainbow/triangulations.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

std::optional<std::string> matching_problem(int m, const std::vector<Label>& edges) {
  if (m < 1) return "m must be positive";
  if (static_cast<int>(edges.size()) != m) return "expected m edges";
  std::vector<char> covered(2 * m + 1, 0);
  for (std::size_t a = 0; a < edges.size(); ++a) {
    const Label& e = edges[a];
    if (e.hi() > 2 * m) return e.str() + " outside [2m]";
    if (covered[e.lo()] || covered[e.hi()]) return "point covered twice";
    covered[e.lo()] = covered[e.hi()] = 1;
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (diagonals_cross(e, edges[b])) return e.str() + " crosses " + edges[b].str();
    }
  }
  return std::nullopt;
}

Matching::Matching(int m, std::vector<Label> edges) : m_(m), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (auto why = matching_problem(m_, edges_)) throw DomainError(*why);
}

Matching Matching::decode(int m, const State& s) { return Matching(m, decode_edges(s)); }

Matching Matching::rotated(int shift) const {
  std::vector<Label> out;
  for (const Label& e : edges_) {
    out.emplace_back(mod1(e.lo() + shift, 2 * m_), mod1(e.hi() + shift, 2 * m_));
  }
  return Matching(m_, std::move(out));
}

std::vector<Label> matching_universe(int m) {
  std::vector<Label> out;
  for (int i = 1; i <= 2 * m; ++i)
    for (int j = i + 1; j <= 2 * m; j += 2) out.emplace_back(i, j);
  return out;
}

int edge_length(int m, Label e) {
  const int inside = e.hi() - e.lo() - 1;
  const int outside = 2 * m - 2 - inside;
  return std::min(inside, outside) / 2;
}

namespace {

// Endpoint from which the other endpoint is reached clockwise in fewer
// than m steps; the centre is then to the right of the ray.
int first_endpoint(int m, Label e) {
  if (m % 2 != 0) throw DomainError("edge signs are defined for even m");
  return e.hi() - e.lo() < m ? e.lo() : e.hi();
}

bool strictly_inside_short_side(int m, Label outer, Label inner) {
  const int a = first_endpoint(m, outer);
  const int span = mod1(outer.other(a) - a + 1, 2 * m) - 1;
  auto inside = [&](int x) {
    const int off = mod1(x - a + 1, 2 * m) - 1;
    return off > 0 && off < span;
  };
  return inside(inner.lo()) && inside(inner.hi());
}

}  // namespace

int edge_sign(int m, Label e) { return first_endpoint(m, e) % 2 == 1 ? 1 : -1; }

int weight(const Matching& mm) {
  int w = 0;
  for (const Label& e : mm.edges()) w += edge_sign(mm.m(), e) * edge_length(mm.m(), e);
  return w;
}

int visible_sign(const Matching& mm) {
  for (const Label& e : mm.edges()) {
    bool hidden = false;
    for (const Label& g : mm.edges()) {
      if (g != e && strictly_inside_short_side(mm.m(), g, e)) hidden = true;
    }
    if (!hidden) return edge_sign(mm.m(), e);
  }
  throw DomainError("matching without visible edge");
}

std::array<int, 4> quad_side_lengths(int m, const Quad& q) {
  return {edge_length(m, Label(q[0], q[1])), edge_length(m, Label(q[1], q[2])),
          edge_length(m, Label(q[2], q[3])), edge_length(m, Label(q[3], q[0]))};
}

bool is_centered(int m, const Quad& q) {
  const auto l = quad_side_lengths(m, q);
  return l[0] + l[1] + l[2] + l[3] == m - 2;
}

bool contains_center(int m, const Quad& q) {
  const int gaps[4] = {q[1] - q[0], q[2] - q[1], q[3] - q[2], 2 * m - (q[3] - q[0])};
  return std::all_of(std::begin(gaps), std::end(gaps), [m](int g) { return g < m; });
}

std::string quad_type(int m, const Quad& q) {
  const auto l = quad_side_lengths(m, q);
  std::string best;
  for (int dir : {1, -1}) {
    for (int s = 0; s < 4; ++s) {
      std::string t;
      for (int i = 0; i < 4; ++i) t += std::to_string(l[((s + dir * i) % 4 + 4) % 4]);
      best = std::max(best, t);
    }
  }
  return best;
}

std::optional<Quad> flip_quad(const Matching& from, const Matching& to) {
  std::vector<Label> removed;
  std::vector<Label> inserted;
  std::set_difference(from.edges().begin(), from.edges().end(), to.edges().begin(),
                      to.edges().end(), std::back_inserter(removed));
  std::set_difference(to.edges().begin(), to.edges().end(), from.edges().begin(),
                      from.edges().end(), std::back_inserter(inserted));
  if (removed.size() != 2 || inserted.size() != 2) return std::nullopt;
  Quad q{removed[0].lo(), removed[0].hi(), removed[1].lo(), removed[1].hi()};
  std::sort(q.begin(), q.end());
  Quad check{inserted[0].lo(), inserted[0].hi(), inserted[1].lo(), inserted[1].hi()};
  std::sort(check.begin(), check.end());
  if (q != check) return std::nullopt;
  return q;
}

std::vector<Matching> enumerate_matchings(int m) {
  if (m < 1 || m > 12) throw DomainError("enumeration supports 1 <= m <= 12");
  std::function<std::vector<std::vector<Label>>(int, int)> rec =
      [&](int lo, int hi) -> std::vector<std::vector<Label>> {
    if (lo > hi) return {{}};
    std::vector<std::vector<Label>> out;
    for (int j = lo + 1; j <= hi; j += 2) {
      const auto inner = rec(lo + 1, j - 1);
      const auto outer = rec(j + 1, hi);
      for (const auto& a : inner) {
        for (const auto& b : outer) {
          std::vector<Label> e = a;
          e.insert(e.end(), b.begin(), b.end());
          e.emplace_back(lo, j);
          out.push_back(std::move(e));
        }
      }
    }
    return out;
  };
  std::vector<Matching> out;
  for (auto& e : rec(1, 2 * m)) out.emplace_back(m, std::move(e));
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) {
    return a.edges() < b.edges();
  });
  return out;
}

MatchingOracle::MatchingOracle(int m, bool centered_only)
    : m_(m), centered_only_(centered_only) {
  if (m < 2) throw DomainError("matching flip graph needs m >= 2");
}

CycleParams MatchingOracle::params() const {
  CycleParams p;
  p.n = m_;
  p.centered_only = centered_only_;
  return p;
}

std::optional<std::string> MatchingOracle::invalid_reason(const State& s) const {
  if (s.size() % 2 != 0) return "odd-length edge encoding";
  std::vector<Label> e;
  try {
    e = decode_edges(s);
  } catch (const DomainError& err) {
    return err.what();
  }
  if (!std::is_sorted(e.begin(), e.end())) return "edges not sorted";
  return matching_problem(m_, e);
}

std::optional<LabelSet> MatchingOracle::flip_labels(const State& from,
                                                    const State& to) const {
  const Matching a = Matching::decode(m_, from);
  const Matching b = Matching::decode(m_, to);
  const auto q = flip_quad(a, b);
  if (!q) return std::nullopt;
  if (centered_only_ && !is_centered(m_, *q)) return std::nullopt;
  LabelSet inserted;
  std::set_difference(b.edges().begin(), b.edges().end(), a.edges().begin(),
                      a.edges().end(), std::back_inserter(inserted));
  return inserted;
}

std::vector<Neighbor> MatchingOracle::neighbors(const State& s) const {
  const Matching mm = Matching::decode(m_, s);
  const auto& edges = mm.edges();
  std::vector<Neighbor> out;
  for (std::size_t x = 0; x < edges.size(); ++x) {
    for (std::size_t y = x + 1; y < edges.size(); ++y) {
      Quad q{edges[x].lo(), edges[x].hi(), edges[y].lo(), edges[y].hi()};
      std::sort(q.begin(), q.end());
      if (centered_only_ && !is_centered(m_, q)) continue;
      const bool sides = edges[x] == Label(q[0], q[1]) || edges[y] == Label(q[0], q[1]);
      const Label e1 = sides ? Label(q[0], q[3]) : Label(q[0], q[1]);
      const Label e2 = sides ? Label(q[1], q[2]) : Label(q[2], q[3]);
      bool ok = true;
      for (std::size_t z = 0; z < edges.size() && ok; ++z) {
        if (z == x || z == y) continue;
        if (diagonals_cross(edges[z], e1) || diagonals_cross(edges[z], e2)) ok = false;
      }
      if (!ok) continue;
      std::vector<Label> next;
      for (std::size_t z = 0; z < edges.size(); ++z) {
        if (z != x && z != y) next.push_back(edges[z]);
      }
      next.push_back(e1);
      next.push_back(e2);
      LabelSet labels{std::min(e1, e2), std::max(e1, e2)};
      out.push_back({encode_edges(next), std::move(labels)});
    }
  }
  sort_neighbors(out);
  return out;
}

std::optional<LabelSet> MatchingOracle::present_labels(const State& s) const {
  return decode_edges(s);
}

FlipGraph centered_flip_graph(int m) {
  std::vector<State> all;
  for (const Matching& mm : enumerate_matchings(m)) all.push_back(mm.encode());
  return FlipGraph::explore(MatchingOracle(m, true), all);
}

int weight_class(const Matching& mm) {
  const int m = mm.m();
  if (m == 2) return 0;
  const int w = weight(mm);
  if (w > 0) return w;
  if (w < 0) return w + (m - 2);
  return visible_sign(mm) > 0 ? 0 : m - 2;
}

namespace {

__int128 binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::int64_t narayana(int r, int m, int k) {
  const __int128 num = static_cast<__int128>(r + 1) * binomial(m + 1, k) *
                       binomial(m - r - 1, k - 1);
  if (num % (m + 1) != 0) throw DomainError("Narayana value not integral");
  return static_cast<std::int64_t>(num / (m + 1));
}

std::int64_t predicted_weight_count(int m, int c) {
  if (c == 0) return 2;
  const std::int64_t n1 = narayana(1, m, std::abs(c) + 1);
  return n1 / 2;
}

std::vector<Matching> rotation_path(int m) {
  auto mk = [m](std::vector<std::pair<int, int>> pairs) {
    std::vector<Label> e;
    for (auto [a, b] : pairs) e.emplace_back(a, b);
    return Matching(m, std::move(e));
  };
  if (m == 6) {
    return {
        mk({{1, 4}, {2, 3}, {5, 6}, {7, 8}, {9, 12}, {10, 11}}),
        mk({{1, 4}, {2, 3}, {5, 12}, {6, 9}, {7, 8}, {10, 11}}),
        mk({{1, 4}, {2, 3}, {5, 10}, {6, 9}, {7, 8}, {11, 12}}),
        mk({{1, 10}, {2, 3}, {4, 5}, {6, 9}, {7, 8}, {11, 12}}),
        mk({{1, 6}, {2, 3}, {4, 5}, {7, 8}, {9, 10}, {11, 12}}),
        mk({{1, 12}, {2, 3}, {4, 5}, {6, 11}, {7, 8}, {9, 10}}),
        mk({{1, 12}, {2, 11}, {3, 6}, {4, 5}, {7, 8}, {9, 10}}),
    };
  }
  if (m == 8) {
    return {
        mk({{1, 6}, {2, 3}, {4, 5}, {7, 8}, {9, 10}, {11, 12}, {13, 16}, {14, 15}}),
        mk({{1, 10}, {2, 3}, {4, 5}, {6, 9}, {7, 8}, {11, 12}, {13, 16}, {14, 15}}),
        mk({{1, 4}, {2, 3}, {5, 10}, {6, 9}, {7, 8}, {11, 12}, {13, 16}, {14, 15}}),
        mk({{1, 4}, {2, 3}, {5, 16}, {6, 9}, {7, 8}, {10, 13}, {11, 12}, {14, 15}}),
        mk({{1, 4}, {2, 3}, {5, 6}, {7, 8}, {9, 16}, {10, 13}, {11, 12}, {14, 15}}),
        mk({{1, 16}, {2, 3}, {4, 9}, {5, 6}, {7, 8}, {10, 13}, {11, 12}, {14, 15}}),
        mk({{1, 16}, {2, 3}, {4, 13}, {5, 6}, {7, 8}, {9, 10}, {11, 12}, {14, 15}}),
        mk({{1, 16}, {2, 3}, {4, 11}, {5, 6}, {7, 8}, {9, 10}, {12, 13}, {14, 15}}),
        mk({{1, 16}, {2, 3}, {4, 15}, {5, 6}, {7, 8}, {9, 10}, {11, 14}, {12, 13}}),
    };
  }
  throw OutOfRange("rotation paths exist for m = 6 and m = 8");
}

namespace {

LabeledFlipCycle matching_cycle(int m, int r, const std::vector<Matching>& states) {
  LabeledFlipCycle c;
  c.family = kMatchingFamily;
  c.params.n = m;
  c.r = r;
  for (const Matching& mm : states) c.states.push_back(mm.encode());
  derive_step_labels(c, MatchingOracle(m, false));
  return c;
}

}  // namespace

LabeledFlipCycle explicit_rainbow(int m, int r) {
  if (m == 2 && r == 1) {
    return matching_cycle(2, 1, {Matching(2, {Label(1, 2), Label(3, 4)}),
                                 Matching(2, {Label(1, 4), Label(2, 3)})});
  }
  if (m == 4 && r == 1) {
    MatchingOracle oracle(4, false);
    std::vector<State> starts;
    for (const Matching& mm : enumerate_matchings(4)) starts.push_back(mm.encode());
    SearchResult found = exhaustive_rainbow_search(oracle, 1, starts);
    if (!found.cycle) throw IllegalFlip("no 1-rainbow cycle found for m=4");
    return *found.cycle;
  }
  if ((m == 6 || m == 8) && r == 2) {
    const std::vector<Matching> path = rotation_path(m);
    int shift = 0;
    for (int s : {2, -2}) {
      if (path.front().rotated(s) == path.back()) shift = s;
    }
    if (!shift) throw IllegalFlip("rotation path does not close under +-2");
    std::vector<Matching> states;
    for (int t = 0; t < m; ++t) {
      for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        states.push_back(path[i].rotated(t * shift));
      }
    }
    return matching_cycle(m, 2, states);
  }
  throw OutOfRange("explicit rainbow cycles exist for (m, r) in "
                   "{(2,1), (4,1), (6,2), (8,2)}");
}

NoRainbowReport prove_no_rainbow1(int m, const SearchBudget& budget) {
  NoRainbowReport report;
  if (m % 2 != 0) {
    throw ParityRefusal("m=" + std::to_string(m) +
                        ": a 1-rainbow cycle would have length m^2/2");
  }
  const FlipGraph g = centered_flip_graph(m);
  report.matchings = g.size();
  MatchingOracle oracle(m, true);
  std::vector<int> all(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) all[i] = static_cast<int>(i);
  SearchOptions opts;
  opts.budget = budget;
  SearchResult result = search_vertices(g, oracle, 1, all, opts);
  report.verdict = result.verdict;
  report.components = std::move(result.components);
  report.nodes = result.nodes;
  if (result.cycle) {
    report.counterexample = std::move(result.cycle);
    report.counterexample->params.centered_only = false;
  }
  return report;
}

}  // namespace rainbow
