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

#include "rainbow/spanning_trees.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <queue>

#include "rainbow/errors.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

std::vector<std::vector<int>> adjacency(const std::vector<Label>& edges, int n) {
  std::vector<std::vector<int>> adj(n + 1);
  for (const Label& e : edges) {
    adj[e.lo()].push_back(e.hi());
    adj[e.hi()].push_back(e.lo());
  }
  return adj;
}

std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int from) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[from] = 0;
  q.push(from);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}
}  // namespace

std::optional<std::string> tree_problem(const PointSet& x, const std::vector<Label>& edges) {
  const int n = x.size();
  if (static_cast<int>(edges.size()) != n - 1) return "a spanning tree has n-1 edges";
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Label& e : edges) {
    if (e.hi() > n) return e.str() + " outside [n]";
    const int a = find_root(parent, e.lo());
    const int b = find_root(parent, e.hi());
    if (a == b) return "cycle through " + e.str();
    parent[a] = b;
  }
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      if (x.crosses(edges[a], edges[b])) return edges[a].str() + " crosses " + edges[b].str();
    }
  }
  return std::nullopt;
}

PlaneTree::PlaneTree(std::vector<Label> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw DomainError("repeated tree edge");
  }
}

bool PlaneTree::has(Label e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int PlaneTree::degree(int v) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [v](const Label& e) { return e.contains(v); }));
}

std::vector<int> PlaneTree::neighbours(int v) const {
  std::vector<int> out;
  for (const Label& e : edges_) {
    if (e.contains(v)) out.push_back(e.other(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PlaneTree PlaneTree::flipped(Label remove, Label insert) const {
  if (!has(remove)) throw IllegalFlip(remove.str() + " is not in the tree");
  if (has(insert)) throw IllegalFlip(insert.str() + " is already in the tree");
  std::vector<Label> e;
  for (const Label& f : edges_) {
    if (f != remove) e.push_back(f);
  }
  e.push_back(insert);
  return PlaneTree(std::move(e));
}

PlaneTree star_tree(int n, int i) {
  if (i < 1 || i > n) throw DomainError("star centre outside [n]");
  std::vector<Label> e;
  for (int v = 1; v <= n; ++v) {
    if (v != i) e.emplace_back(i, v);
  }
  return PlaneTree(std::move(e));
}

std::vector<PlaneTree> star_path(const PointSet& x, int i, int j, Side side) {
  const int n = x.size();
  const std::vector<int> pi = pi_order(x, i, j, side);
  std::vector<PlaneTree> out{star_tree(n, i)};
  out.push_back(out.back().flipped(Label(i, j), Label(j, pi[0])));
  for (int t = 1; t < n - 2; ++t) {
    out.push_back(out.back().flipped(Label(i, pi[t - 1]), Label(j, pi[t])));
  }
  out.push_back(out.back().flipped(Label(i, pi[n - 3]), Label(j, i)));
  return out;
}

bool has_central_path(const PlaneTree& t, const std::vector<int>& path,
                      const std::vector<int>& degrees) {
  if (path.size() != degrees.size() || path.empty()) return false;
  std::vector<int> sorted = path;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t a = 0; a < path.size(); ++a) {
    if (t.degree(path[a]) != degrees[a]) return false;
    if (a + 1 < path.size() && !t.has(Label(path[a], path[a + 1]))) return false;
  }
  for (const Label& e : t.edges()) {
    const bool lo_on = std::binary_search(sorted.begin(), sorted.end(), e.lo());
    const bool hi_on = std::binary_search(sorted.begin(), sorted.end(), e.hi());
    if (!lo_on && !hi_on) return false;
    if (!lo_on && t.degree(e.lo()) != 1) return false;
    if (!hi_on && t.degree(e.hi()) != 1) return false;
  }
  return true;
}

int tree_diameter(const PlaneTree& t, int n) {
  const auto adj = adjacency(t.edges(), n);
  auto d = bfs_distances(adj, 1);
  const int far = static_cast<int>(std::max_element(d.begin(), d.end()) - d.begin());
  d = bfs_distances(adj, far);
  return *std::max_element(d.begin(), d.end());
}

std::optional<Label> intermediate_endpoints(const PlaneTree& t, int n) {
  if (n < 6) throw DomainError("endpoint recovery needs n >= 6");
  std::vector<int> big;
  for (int v = 1; v <= n; ++v) {
    if (t.degree(v) >= 3) big.push_back(v);
  }
  if (big.size() == 2) return Label(big[0], big[1]);
  if (big.size() != 1) return std::nullopt;
  const auto dist = bfs_distances(adjacency(t.edges(), n), big[0]);
  std::optional<int> j;
  for (int v = 1; v <= n; ++v) {
    if (dist[v] != 2) continue;
    if (j) return std::nullopt;
    j = v;
  }
  if (!j) return std::nullopt;
  return Label(big[0], *j);
}

namespace {

std::vector<PlaneTree> rainbow1_states(const PointSet& x) {
  const int n = x.size();
  if (n == 3) return {star_tree(3, 1), star_tree(3, 3), star_tree(3, 2)};
  std::vector<PlaneTree> prev = rainbow1_states(x.prefix(n - 1));
  prev.resize(prev.size() - (n - 3));
  std::vector<PlaneTree> out;
  for (const PlaneTree& t : prev) {
    std::vector<Label> e = t.edges();
    e.emplace_back(1, n);
    out.emplace_back(std::move(e));
  }
  const auto up = star_path(x, n - 1, n, Side::kLeft);
  if (up[1] != out.back()) throw IllegalFlip("rainbow1: lifted cycle does not meet P_{n-1,n}");
  out.insert(out.end(), up.begin() + 2, up.end());
  const auto back = star_path(x, n, 1, Side::kLeft);
  out.insert(out.end(), back.begin() + 1, back.end() - 1);
  return out;
}

LabeledFlipCycle tree_cycle(const PointSet& x, int r, const std::vector<PlaneTree>& trees) {
  LabeledFlipCycle c;
  c.family = kSpanningTreeFamily;
  c.params.n = x.size();
  c.params.points = x.points();
  c.r = r;
  for (const PlaneTree& t : trees) c.states.push_back(t.encode());
  derive_step_labels(c, TreeOracle(x));
  return c;
}

}  // namespace

LabeledFlipCycle tree_rainbow1(const PointSet& x) {
  if (x.size() < 3) throw OutOfRange("spanning-tree rainbow cycles need n >= 3");
  return tree_cycle(x, 1, rainbow1_states(x));
}

std::vector<std::vector<int>> walecki(int n) {
  if (n < 3) throw DomainError("walecki needs n >= 3");
  // Zigzag i, i+1, i-1, i+2, i-2, ... on Z_z, with infinity mapped to n
  // and x in Z_z mapped to x + 1.
  const int z = n - 1;
  const int count = (n - 1) / 2;
  std::vector<std::vector<int>> out;
  for (int i = 0; i < count; ++i) {
    std::vector<int> c{n, i + 1};
    for (int s = 1; static_cast<int>(c.size()) < n; ++s) {
      c.push_back(static_cast<int>(((i + s) % z + z) % z) + 1);
      if (static_cast<int>(c.size()) < n) c.push_back(static_cast<int>(((i - s) % z + z) % z) + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> euler_cycle(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::vector<int>> out(n + 1);
  std::vector<int> in_deg(n + 1, 0);
  for (auto [a, b] : arcs) {
    if (a < 1 || a > n || b < 1 || b > n) throw DomainError("arc outside [n]");
    out[a].push_back(b);
    ++in_deg[b];
  }
  int start = 0;
  for (int v = 1; v <= n; ++v) {
    if (static_cast<int>(out[v].size()) != in_deg[v]) {
      throw DomainError("vertex " + std::to_string(v) + " is unbalanced");
    }
    if (!start && !out[v].empty()) start = v;
    // Descending so that pop_back yields the smallest head.
    std::sort(out[v].rbegin(), out[v].rend());
  }
  if (!start) return {};
  std::vector<int> stack{start};
  std::vector<int> circuit;
  while (!stack.empty()) {
    const int v = stack.back();
    if (!out[v].empty()) {
      const int w = out[v].back();
      out[v].pop_back();
      stack.push_back(w);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  if (circuit.size() != arcs.size() + 1) throw DomainError("arcs are not connected");
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();
  return circuit;
}

namespace {

// Cyclic point order of the first Hamilton cycle, hull points contiguous
// and counter-clockwise.
std::vector<int> first_cycle(const PointSet& x, bool odd_form) {
  const int n = x.size();
  const std::vector<int>& hull = x.hull();
  const int h = static_cast<int>(hull.size());
  std::vector<int> interior;
  for (int v = 1; v <= n; ++v) {
    if (!x.on_hull(v)) interior.push_back(v);
  }
  if (!odd_form || interior.empty()) {
    std::vector<int> c = hull;
    c.insert(c.end(), interior.begin(), interior.end());
    return c;
  }
  if (!x.on_hull(n - 1)) {
    // n, 1, 2, ..., h_{H-1}, interior points, ending at n - 1.
    std::vector<int> c{n};
    c.insert(c.end(), hull.begin(), hull.end() - 1);
    for (int v : interior) {
      if (v != n - 1) c.push_back(v);
    }
    c.push_back(n - 1);
    return c;
  }
  // n - 1 is on the hull: leave {h_2, h_3} uncovered.
  std::vector<int> c;
  for (int s = 2; s < h; ++s) c.push_back(hull[s]);
  c.push_back(hull[0]);
  c.push_back(hull[1]);
  c.insert(c.end(), interior.begin(), interior.end());
  return c;
}

bool has_step(const std::vector<int>& c, int a, int b) {
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (c[t] == a && c[(t + 1) % c.size()] == b) return true;
  }
  return false;
}

}  // namespace

std::vector<std::vector<int>> mapped_hamilton_cycles(const PointSet& x, int count,
                                                     bool odd_form) {
  const int n = x.size();
  const auto abstract = walecki(n);
  if (count < 1 || count > static_cast<int>(abstract.size())) {
    throw OutOfRange("between 1 and floor((n-1)/2) Hamilton cycles exist");
  }
  const std::vector<int> h0 = first_cycle(x, odd_form);
  std::vector<int> phi(n + 1, 0);
  for (int t = 0; t < n; ++t) phi[abstract[0][t]] = h0[t];

  // The hull edge missed by the first cycle, oriented counter-clockwise.
  std::optional<std::pair<int, int>> uncovered;
  const std::vector<int>& hull = x.hull();
  for (std::size_t s = 0; s < hull.size(); ++s) {
    const int a = hull[s];
    const int b = hull[(s + 1) % hull.size()];
    if (!has_step(h0, a, b)) uncovered = std::pair{a, b};
  }

  std::vector<std::vector<int>> out{h0};
  for (int c = 1; c < count; ++c) {
    std::vector<int> cyc;
    for (int v : abstract[c]) cyc.push_back(phi[v]);
    bool reverse = false;
    if (uncovered && (has_step(cyc, uncovered->first, uncovered->second) ||
                      has_step(cyc, uncovered->second, uncovered->first))) {
      reverse = !has_step(cyc, uncovered->first, uncovered->second);
    } else {
      const auto low = std::min_element(cyc.begin(), cyc.end()) - cyc.begin();
      const int next = cyc[(low + 1) % n];
      const int prev = cyc[(low + n - 1) % n];
      reverse = prev < next;
    }
    if (reverse) std::reverse(cyc.begin(), cyc.end());
    out.push_back(std::move(cyc));
  }
  return out;
}

namespace {

Side side_for_turn(const PointSet& x, int i, int j, int k) {
  // Right turn (i right of j->k): P^L; left turn: P^R.
  return x.orient(j, k, i) < 0 ? Side::kLeft : Side::kRight;
}

PlaneTree detour_from(const PointSet& x, const PlaneTree& t1, int j, int k, Side side_jk) {
  if (x.is_hull_edge(j, k)) throw DomainError("no detour tree for hull edge");
  const int b = pi_order(x, j, k, side_jk).front();
  return t1.flipped(Label(j, k), Label(k, b));
}

// Builds the tour along the closed walk, replacing stars by detour trees.
// With `splice`, the star at position 0 is replaced by the given states
// followed by a detour from their last tree.
std::vector<PlaneTree> assemble(const PointSet& x, const std::vector<int>& walk,
                                const std::vector<PlaneTree>* splice) {
  const int n = x.size();
  const std::size_t len = walk.size();
  std::vector<Side> sides(len);
  std::vector<std::vector<PlaneTree>> paths(len);
  for (std::size_t t = 0; t < len; ++t) {
    const int i = walk[(t + len - 1) % len];
    const int j = walk[t];
    const int k = walk[(t + 1) % len];
    sides[t] = splice && t == 0 ? Side::kRight : side_for_turn(x, i, j, k);
    paths[t] = star_path(x, j, k, sides[t]);
  }
  std::vector<PlaneTree> out;
  for (std::size_t t = 0; t < len; ++t) {
    const int j = walk[t];
    const int k = walk[(t + 1) % len];
    if (splice && t == 0) {
      out.insert(out.end(), splice->begin(), splice->end());
      out.push_back(detour_from(x, splice->back(), j, k, sides[t]));
    } else if (x.is_hull_edge(j, k)) {
      out.push_back(paths[t].front());
    } else {
      const PlaneTree& t1 = paths[(t + len - 1) % len][n - 2];
      out.push_back(detour_from(x, t1, j, k, sides[t]));
    }
    out.insert(out.end(), paths[t].begin() + 1, paths[t].end() - 1);
  }
  return out;
}

std::vector<std::pair<int, int>> arcs_of(const std::vector<std::vector<int>>& cycles) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& c : cycles) {
    for (std::size_t t = 0; t < c.size(); ++t) arcs.emplace_back(c[t], c[(t + 1) % c.size()]);
  }
  return arcs;
}

}  // namespace

PlaneTree detour_tree(const PointSet& x, int i, int j, Side side_ij, int k, Side side_jk) {
  const auto p = star_path(x, i, j, side_ij);
  return detour_from(x, p[p.size() - 2], j, k, side_jk);
}

LabeledFlipCycle tree_rainbow_even(const PointSet& x, int r) {
  const int n = x.size();
  if (n < 6 || r < 1 || r > (n - 1) / 2) {
    throw OutOfRange("even construction needs n >= 6 and 1 <= r <= floor((n-1)/2)");
  }
  const auto walk = euler_cycle(n, arcs_of(mapped_hamilton_cycles(x, r, false)));
  return tree_cycle(x, 2 * r, assemble(x, walk, nullptr));
}

LabeledFlipCycle tree_rainbow_odd(const PointSet& x, int r) {
  const int n = x.size();
  if (n < 6 || r < 2 || r > (n - 1) / 2) {
    throw OutOfRange("odd construction needs n >= 6 and 2 <= r <= floor((n-1)/2)");
  }
  auto cycles = mapped_hamilton_cycles(x, r, true);
  cycles.erase(cycles.begin());
  const auto walk = euler_cycle(n, arcs_of(cycles));
  if (walk.front() != 1) throw DomainError("walk does not start at 1");
  const std::vector<PlaneTree> c1 = rainbow1_states(x);
  return tree_cycle(x, 2 * r - 1, assemble(x, walk, &c1));
}

int max_tree_rainbow(int n) {
  if (n < 3) throw OutOfRange("spanning-tree rainbow cycles need n >= 3");
  if (n == 3) return 1;
  return n % 2 == 1 ? n - 1 : n - 2;
}

LabeledFlipCycle tree_rainbow_small(const PointSet& x, int r, const SearchBudget& budget) {
  const int n = x.size();
  if (!((n == 4 && r == 2) || (n == 5 && r >= 2 && r <= 4))) {
    throw OutOfRange("search covers n = 4, r = 2 and n = 5, r = 2..4");
  }
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  auto seconds_left = [&]() {
    if (budget.max_seconds <= 0) return 0.0;
    const double used = std::chrono::duration<double>(Clock::now() - t0).count();
    return std::max(1e-3, budget.max_seconds - used);
  };
  TreeOracle oracle(x);
  const std::vector<State> s1{star_tree(n, 1).encode()};
  const FlipGraph g = FlipGraph::explore(oracle, s1);

  // Cycles through a few vertices are cheap to find while the canonical
  // search may first exhaust a large cycle-free region. Probe every
  // vertex with a growing node cap before the complete search.
  for (std::uint64_t cap = 1u << 12; cap <= (1u << 20); cap <<= 2) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      SearchOptions probe;
      probe.through_starts_only = true;
      probe.budget.max_nodes = cap;
      probe.budget.max_seconds = seconds_left();
      const std::vector<State> start{g.state(static_cast<int>(v))};
      SearchResult found = exhaustive_rainbow_search(oracle, r, start, probe);
      if (found.cycle) return *found.cycle;
      if (budget.max_seconds > 0 &&
          std::chrono::duration<double>(Clock::now() - t0).count() >= budget.max_seconds) {
        throw Inconclusive("search budget exhausted for n=" + std::to_string(n) +
                           ", r=" + std::to_string(r));
      }
    }
  }
  SearchOptions opts;
  opts.budget = budget;
  opts.budget.max_seconds = seconds_left();
  SearchResult result = exhaustive_rainbow_search(oracle, r, s1, opts);
  if (result.verdict == SearchVerdict::kInconclusive) {
    throw Inconclusive("search budget exhausted for n=" + std::to_string(n) +
                       ", r=" + std::to_string(r));
  }
  if (!result.cycle) throw DomainError("no rainbow cycle exists for these points");
  return *result.cycle;
}

LabeledFlipCycle tree_rainbow(const PointSet& x, int r, const SearchBudget& budget) {
  const int n = x.size();
  if (r < 1 || r > max_tree_rainbow(n)) {
    throw OutOfRange("r must lie in 1.." + std::to_string(max_tree_rainbow(n)) +
                     " for n=" + std::to_string(n));
  }
  if (r == 1) return tree_rainbow1(x);
  if (n <= 5) return tree_rainbow_small(x, r, budget);
  return r % 2 == 0 ? tree_rainbow_even(x, r / 2) : tree_rainbow_odd(x, (r + 1) / 2);
}

TreeOracle::TreeOracle(PointSet x) : x_(std::move(x)) {
  if (x_.size() < 3) throw DomainError("spanning-tree flip graph needs n >= 3");
}

CycleParams TreeOracle::params() const {
  CycleParams p;
  p.n = x_.size();
  p.points = x_.points();
  return p;
}

std::vector<Label> TreeOracle::universe() const {
  std::vector<Label> out;
  for (int a = 1; a <= x_.size(); ++a)
    for (int b = a + 1; b <= x_.size(); ++b) out.emplace_back(a, b);
  return out;
}

std::optional<std::string> TreeOracle::invalid_reason(const State& s) const {
  if (s.size() % 2 != 0) return "odd-length edge encoding";
  std::vector<Label> e;
  try {
    e = decode_edges(s);
  } catch (const DomainError& err) {
    return err.what();
  }
  if (!std::is_sorted(e.begin(), e.end())) return "edges not sorted";
  return tree_problem(x_, e);
}

std::optional<LabelSet> TreeOracle::flip_labels(const State& from, const State& to) const {
  const auto a = decode_edges(from);
  const auto b = decode_edges(to);
  std::vector<Label> removed;
  std::vector<Label> inserted;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(removed));
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(inserted));
  if (removed.size() != 1 || inserted.size() != 1) return std::nullopt;
  if (tree_problem(x_, b)) return std::nullopt;
  return inserted;
}

std::vector<Neighbor> TreeOracle::neighbors(const State& s) const {
  const int n = x_.size();
  const PlaneTree t = PlaneTree::decode(s);
  const auto adj = adjacency(t.edges(), n);
  std::vector<Neighbor> out;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      const Label f(a, b);
      if (t.has(f)) continue;
      std::vector<Label> crossed;
      for (const Label& e : t.edges()) {
        if (x_.crosses(e, f)) crossed.push_back(e);
      }
      if (crossed.size() > 1) continue;
      // Tree path from a to b.
      std::vector<int> parent(n + 1, 0);
      std::queue<int> q;
      parent[a] = a;
      q.push(a);
      while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : adj[v]) {
          if (!parent[w]) {
            parent[w] = v;
            q.push(w);
          }
        }
      }
      for (int v = b; v != a; v = parent[v]) {
        const Label e(v, parent[v]);
        if (!crossed.empty() && e != crossed.front()) continue;
        out.push_back({t.flipped(e, f).encode(), {f}});
      }
    }
  }
  sort_neighbors(out);
  return out;
}

std::optional<LabelSet> TreeOracle::present_labels(const State& s) const {
  return decode_edges(s);
}

}  // namespace rainbow
