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

#include "rainbow/search.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <numeric>

#include "rainbow/errors.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

FlipGraph FlipGraph::explore(const FlipGraphOracle& oracle,
                             std::span<const State> starts) {
  FlipGraph g;
  g.labels_per_step_ = oracle.labels_per_step();
  g.labels_ = oracle.universe();
  std::sort(g.labels_.begin(), g.labels_.end());
  std::map<Label, int> label_index;
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    label_index[g.labels_[i]] = static_cast<int>(i);
  }
  auto id_of = [&label_index](const Label& l) {
    auto it = label_index.find(l);
    if (it == label_index.end()) {
      throw DomainError("flip enters label " + l.str() +
                        " outside the universe");
    }
    return it->second;
  };

  std::deque<int> queue;
  auto intern = [&](const State& s) {
    auto [it, inserted] = g.index_.try_emplace(s, static_cast<int>(g.states_.size()));
    if (inserted) {
      g.states_.push_back(s);
      queue.push_back(it->second);
    }
    return it->second;
  };
  for (const State& s : starts) {
    if (auto why = oracle.invalid_reason(s)) {
      throw DomainError("invalid start state: " + *why);
    }
    intern(s);
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const State here = g.states_[v];
    std::vector<Arc> arcs;
    for (Neighbor& nb : oracle.neighbors(here)) {
      Arc a;
      a.to = intern(nb.state);
      a.n_labels = static_cast<int>(nb.labels.size());
      if (a.n_labels < 1 || a.n_labels > 2) {
        throw DomainError("unsupported number of labels per step");
      }
      for (int i = 0; i < a.n_labels; ++i) a.label_ids[i] = id_of(nb.labels[i]);
      arcs.push_back(a);
    }
    if (g.arcs_.size() <= static_cast<std::size_t>(v)) g.arcs_.resize(v + 1);
    g.arcs_[v] = std::move(arcs);
    if (auto present = oracle.present_labels(here)) {
      if (g.present_.size() <= static_cast<std::size_t>(v)) g.present_.resize(v + 1);
      std::vector<int> ids;
      for (const Label& l : *present) ids.push_back(id_of(l));
      g.present_[v] = std::move(ids);
    }
  }
  g.arcs_.resize(g.states_.size());
  if (!g.present_.empty()) g.present_.resize(g.states_.size());
  return g;
}

int FlipGraph::index_of(const State& s) const {
  auto it = index_.find(s);
  return it == index_.end() ? -1 : it->second;
}

int FlipGraph::label_id(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l) return -1;
  return static_cast<int>(it - labels_.begin());
}

std::size_t FlipGraph::arc_count() const {
  std::size_t total = 0;
  for (const auto& a : arcs_) total += a.size();
  return total;
}

namespace {

// Undirected adjacency (union of arcs and reversed arcs).
std::vector<std::vector<int>> undirected(const FlipGraph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) {
    for (const Arc& a : g.arcs(static_cast<int>(v))) {
      adj[v].push_back(a.to);
      adj[a.to].push_back(static_cast<int>(v));
    }
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return adj;
}

std::vector<std::vector<int>> components_of(
    const std::vector<std::vector<int>>& adj, const std::vector<char>& allowed) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(adj.size(), 0);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (!allowed[s] || seen[s]) continue;
    std::vector<int> comp{static_cast<int>(s)};
    seen[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (int w : adj[comp[head]]) {
        if (allowed[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<std::vector<int>> FlipGraph::components() const {
  return components_of(undirected(*this), std::vector<char>(size(), 1));
}

std::vector<std::vector<State>> connected_components(
    const FlipGraphOracle& oracle, std::span<const State> all_states) {
  const FlipGraph g = FlipGraph::explore(oracle, all_states);
  std::vector<std::vector<State>> out;
  for (const auto& comp : g.components()) {
    std::vector<State> states;
    states.reserve(comp.size());
    for (int v : comp) states.push_back(g.state(v));
    out.push_back(std::move(states));
  }
  return out;
}

std::string to_string(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::kFound: return "found";
    case SearchVerdict::kNone: return "none";
    case SearchVerdict::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(const SearchBudget& b) : max_nodes_(b.max_nodes) {
    if (b.max_seconds > 0) {
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(b.max_seconds));
      has_deadline_ = true;
    }
  }

  // Counts one node; false once a limit is hit.
  bool tick() {
    ++nodes_;
    if (max_nodes_ && nodes_ > max_nodes_) exhausted_ = true;
    if (has_deadline_ && (nodes_ & 0x3ff) == 0 && Clock::now() > deadline_) {
      exhausted_ = true;
    }
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t max_nodes_ = 0;
  std::uint64_t nodes_ = 0;
  bool has_deadline_ = false;
  Clock::time_point deadline_;
  bool exhausted_ = false;
};

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::vector<std::uint64_t> w_;
};

// One depth-first search for cycles of a fixed length through `start`.
class RainbowDfs {
 public:
  using Visit = std::function<bool(const std::vector<int>&)>;

  RainbowDfs(const FlipGraph& g, const std::vector<std::vector<int>>& adj,
             int r, const std::vector<char>& allowed, Budget& budget)
      : g_(g), adj_(adj), r_(r), allowed_(allowed), budget_(budget) {
    const std::size_t nl = g.labels().size();
    const long long total = static_cast<long long>(r) * static_cast<long long>(nl);
    target_ = static_cast<int>(total / g.labels_per_step());
    if (!g.present().empty()) {
      words_ = (nl + 63) / 64;
      present_bits_.assign(g.size() * words_, 0);
      for (std::size_t v = 0; v < g.size(); ++v) {
        for (int id : g.present()[v]) {
          present_bits_[v * words_ + (id >> 6)] |= 1ull << (id & 63);
        }
      }
    }
  }

  int target() const { return target_; }

  // Runs the search; `canonical` restricts to cycles whose smallest
  // vertex is `start`. Returns true if stopped by the visitor.
  bool run(int start, bool canonical, const Visit& visit) {
    start_ = start;
    canonical_ = canonical;
    visit_ = &visit;
    prepare_distances();
    if (dist_[start] != 0) return false;

    const std::size_t nl = g_.labels().size();
    budget_left_.assign(nl, r_);
    hist_.assign(r_ + 1, 0);
    hist_[r_] = static_cast<int>(nl);
    zero_.assign(words_, 0);
    visited_.assign(g_.size(), 0);
    visited_[start] = 1;
    path_.assign(1, start);
    return dfs(start, 0);
  }

 private:
  bool usable(int w) const {
    return allowed_[w] && (!canonical_ || w >= start_);
  }

  void prepare_distances() {
    dist_.assign(g_.size(), -1);
    bipartite_ = true;
    std::vector<int> queue{start_};
    dist_[start_] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int w : adj_[v]) {
        if (!usable(w)) continue;
        if (dist_[w] < 0) {
          dist_[w] = dist_[v] + 1;
          queue.push_back(w);
        } else if ((dist_[w] & 1) == (dist_[v] & 1)) {
          bipartite_ = false;
        }
      }
    }
  }

  void consume(int id) {
    int& b = budget_left_[id];
    --hist_[b];
    --b;
    ++hist_[b];
    if (b == 0 && words_) zero_[id >> 6] |= 1ull << (id & 63);
  }

  void restore(int id) {
    int& b = budget_left_[id];
    if (b == 0 && words_) zero_[id >> 6] &= ~(1ull << (id & 63));
    --hist_[b];
    ++b;
    ++hist_[b];
  }

  int max_budget() const {
    for (int b = r_; b > 0; --b) {
      if (hist_[b]) return b;
    }
    return 0;
  }

  // Labels present in the start state but absent in `w` must enter again.
  bool closable(int w, int steps_left) const {
    if (!words_) return true;
    const std::uint64_t* sp = &present_bits_[start_ * words_];
    const std::uint64_t* wp = &present_bits_[w * words_];
    int missing = 0;
    for (std::size_t i = 0; i < words_; ++i) {
      const std::uint64_t need = sp[i] & ~wp[i];
      if (need & zero_[i]) return false;
      missing += __builtin_popcountll(need);
    }
    return missing <= steps_left * g_.labels_per_step();
  }

  bool dfs(int v, int depth) {
    if (!budget_.tick()) return true;
    const int remaining = target_ - depth;
    for (const Arc& a : g_.arcs(v)) {
      const int w = a.to;
      bool ok = true;
      for (int i = 0; i < a.n_labels; ++i) {
        int need = 1;
        if (i == 1 && a.label_ids[1] == a.label_ids[0]) need = 2;
        if (budget_left_[a.label_ids[i]] < need) ok = false;
      }
      if (!ok) continue;
      if (w == start_) {
        if (remaining == 1 && (*visit_)(path_)) return true;
        continue;
      }
      if (visited_[w] || !usable(w)) continue;
      const int left = remaining - 1;
      if (dist_[w] < 0 || left < dist_[w]) continue;
      if (bipartite_ && ((left - dist_[w]) & 1)) continue;
      for (int i = 0; i < a.n_labels; ++i) consume(a.label_ids[i]);
      if (max_budget() <= left && closable(w, left)) {
        visited_[w] = 1;
        path_.push_back(w);
        if (dfs(w, depth + 1)) return true;
        path_.pop_back();
        visited_[w] = 0;
      }
      for (int i = a.n_labels - 1; i >= 0; --i) restore(a.label_ids[i]);
      if (budget_.exhausted()) return true;
    }
    return false;
  }

  const FlipGraph& g_;
  const std::vector<std::vector<int>>& adj_;
  int r_;
  const std::vector<char>& allowed_;
  Budget& budget_;
  int target_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> present_bits_;
  std::vector<std::uint64_t> zero_;

  int start_ = 0;
  bool canonical_ = false;
  const Visit* visit_ = nullptr;
  std::vector<int> dist_;
  bool bipartite_ = true;
  std::vector<int> budget_left_;
  std::vector<int> hist_;
  std::vector<char> visited_;
  std::vector<int> path_;
};

bool parity_blocked(const FlipGraph& g, int r) {
  const long long total = static_cast<long long>(r) *
                          static_cast<long long>(g.labels().size());
  return total % g.labels_per_step() != 0;
}

SearchResult run_search(const FlipGraph& g, const FlipGraphOracle& oracle,
                        int r, const std::vector<char>& allowed,
                        const std::vector<int>& forced_starts,
                        const SearchOptions& options) {
  if (r < 1) throw DomainError("r must be positive");
  SearchResult result;
  result.states = static_cast<std::size_t>(
      std::count(allowed.begin(), allowed.end(), char{1}));
  if (parity_blocked(g, r)) {
    result.parity_precheck = true;
    result.verdict = SearchVerdict::kNone;
    return result;
  }
  const auto adj = undirected(g);
  Budget budget(options.budget);
  RainbowDfs dfs(g, adj, r, allowed, budget);

  std::vector<int> found;
  const RainbowDfs::Visit take = [&found](const std::vector<int>& path) {
    found = path;
    return true;
  };

  bool exhausted = false;
  if (!forced_starts.empty()) {
    for (int s : forced_starts) {
      ComponentReport rep;
      rep.size = 1;
      const std::uint64_t before = budget.nodes();
      dfs.run(s, false, take);
      rep.nodes = budget.nodes() - before;
      rep.verdict = !found.empty() ? SearchVerdict::kFound
                    : budget.exhausted() ? SearchVerdict::kInconclusive
                                         : SearchVerdict::kNone;
      result.components.push_back(rep);
      if (!found.empty() || budget.exhausted()) break;
    }
    exhausted = budget.exhausted();
  } else {
    auto comps = components_of(adj, allowed);
    if (options.smallest_components_first) {
      std::stable_sort(comps.begin(), comps.end(),
                       [](const auto& a, const auto& b) { return a.size() < b.size(); });
    }
    for (const auto& comp : comps) {
      ComponentReport rep;
      rep.size = comp.size();
      const std::uint64_t before = budget.nodes();
      if (comp.size() >= static_cast<std::size_t>(dfs.target())) {
        std::vector<char> inside(g.size(), 0);
        for (int v : comp) inside[v] = 1;
        RainbowDfs local(g, adj, r, inside, budget);
        for (int s : comp) {
          local.run(s, true, take);
          if (!found.empty() || budget.exhausted()) break;
        }
      }
      rep.nodes = budget.nodes() - before;
      rep.verdict = !found.empty() ? SearchVerdict::kFound
                    : budget.exhausted() ? SearchVerdict::kInconclusive
                                         : SearchVerdict::kNone;
      result.components.push_back(rep);
      if (!found.empty() || budget.exhausted()) break;
    }
    exhausted = budget.exhausted();
  }
  result.nodes = budget.nodes();
  if (!found.empty()) {
    result.verdict = SearchVerdict::kFound;
    result.cycle = cycle_from_path(g, oracle, r, found);
  } else {
    result.verdict = exhausted ? SearchVerdict::kInconclusive : SearchVerdict::kNone;
  }
  return result;
}

}  // namespace

SearchResult exhaustive_rainbow_search(const FlipGraphOracle& oracle, int r,
                                       std::span<const State> starts,
                                       const SearchOptions& options) {
  const FlipGraph g = FlipGraph::explore(oracle, starts);
  std::vector<char> allowed(g.size(), 1);
  std::vector<int> forced;
  if (options.through_starts_only) {
    for (const State& s : starts) forced.push_back(g.index_of(s));
  }
  return run_search(g, oracle, r, allowed, forced, options);
}

SearchResult search_vertices(const FlipGraph& graph,
                             const FlipGraphOracle& oracle, int r,
                             std::span<const int> vertices,
                             const SearchOptions& options) {
  std::vector<char> allowed(graph.size(), 0);
  for (int v : vertices) allowed.at(v) = 1;
  return run_search(graph, oracle, r, allowed, {}, options);
}

SearchVerdict for_each_rainbow_cycle(
    const FlipGraph& graph, int r, int start,
    const std::function<bool(const std::vector<int>&)>& visit,
    const SearchBudget& budget, std::uint64_t* nodes) {
  if (parity_blocked(graph, r)) return SearchVerdict::kNone;
  const auto adj = undirected(graph);
  std::vector<char> allowed(graph.size(), 1);
  Budget b(budget);
  RainbowDfs dfs(graph, adj, r, allowed, b);
  bool any = false;
  const RainbowDfs::Visit wrapped = [&](const std::vector<int>& path) {
    any = true;
    return !visit(path);
  };
  const bool stopped = dfs.run(start, false, wrapped);
  if (nodes) *nodes = b.nodes();
  if (b.exhausted()) return SearchVerdict::kInconclusive;
  (void)stopped;
  return any ? SearchVerdict::kFound : SearchVerdict::kNone;
}

LabeledFlipCycle cycle_from_path(const FlipGraph& graph,
                                 const FlipGraphOracle& oracle, int r,
                                 const std::vector<int>& path) {
  LabeledFlipCycle c;
  c.family = std::string(oracle.family());
  c.params = oracle.params();
  c.r = r;
  for (int v : path) c.states.push_back(graph.state(v));
  derive_step_labels(c, oracle);
  return c;
}

}  // namespace rainbow
