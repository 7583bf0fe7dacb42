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

#include "rainbow/subsets.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "rainbow/errors.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

KSubset symmetric_difference(const KSubset& a, const KSubset& b) {
  KSubset out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

KSubset complement(int n, const KSubset& a) {
  KSubset out;
  for (int x = 1; x <= n; ++x) {
    if (!std::binary_search(a.begin(), a.end(), x)) out.push_back(x);
  }
  return out;
}

LabeledFlipCycle cycle_from_block(const RainbowBlock& block) {
  LabeledFlipCycle c;
  c.family = kSubsetFamily;
  c.params.n = block.n;
  c.params.k = block.k;
  for (int s = 0; s < block.n; ++s) {
    for (const KSubset& b : block.sets) c.states.push_back(sigma(block.n, b, s));
  }
  const std::size_t len = c.states.size();
  for (std::size_t i = 0; i < len; ++i) {
    const KSubset d = symmetric_difference(c.states[i], c.states[(i + 1) % len]);
    if (d.size() != 2) throw IllegalFlip("consecutive block sets do not differ by a swap");
    c.step_labels.push_back({Label(d[0], d[1])});
  }
  return c;
}

namespace {

bool is_exactly_one_to(std::vector<int> values, int ell) {
  std::sort(values.begin(), values.end());
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    if (values[i] != i + 1) return false;
  }
  return static_cast<int>(values.size()) == ell;
}

}  // namespace

BlockCheck check_block(const RainbowBlock& block) {
  BlockCheck check;
  const int n = block.n;
  const int k = block.k;
  const int ell = block.ell();
  if (n != 2 * ell + 1 || k < 2) return check;

  std::vector<int> b;
  check.shape = true;
  for (const KSubset& s : block.sets) {
    if (static_cast<int>(s.size()) != k) {
      check.shape = false;
      break;
    }
    for (int x = 1; x < k; ++x) {
      if (s[x - 1] != x) check.shape = false;
    }
    b.push_back(s.back());
    if (s.back() < k + 1 || s.back() > n) check.shape = false;
  }
  if (check.shape && b.front() != n) check.shape = false;

  if (check.shape) {
    if (k == 2) {
      std::vector<int> dists;
      for (int x : b) dists.push_back(cyclic_dist(n, Label(1, x)));
      check.distinct = is_exactly_one_to(dists, ell);
    } else {
      check.distinct = std::set<int>(b.begin(), b.end()).size() == b.size();
    }
  }

  std::vector<int> steps;
  bool pairs = true;
  for (int i = 0; i < ell; ++i) {
    const KSubset next = i + 1 < ell ? block.sets[i + 1] : sigma(n, block.sets[0], 1);
    const KSubset d = symmetric_difference(block.sets[i], next);
    if (d.size() != 2) {
      pairs = false;
      break;
    }
    steps.push_back(cyclic_dist(n, Label(d[0], d[1])));
  }
  check.all_lengths = pairs && is_exactly_one_to(steps, ell);

  if (pairs) {
    const LabeledFlipCycle c = cycle_from_block(block);
    check.cycle_rainbow = verify_rainbow(c, 1, SubsetOracle(n, k)).is_rainbow_r;
  }
  return check;
}

namespace {

// Signed representative of v modulo n (n odd) in [-(n-1)/2, (n-1)/2].
int centered(long long v, int n) {
  int r = mod1(v, n) % n;  // 0..n-1
  if (r > n / 2) r -= n;
  return r;
}

std::vector<int> b_values(int ell, const std::vector<int>& d) {
  const int n = 2 * ell + 1;
  std::vector<int> b{n};
  for (int i = 0; i + 1 < ell; ++i) b.push_back(mod1(b.back() + d[i], n));
  return b;
}

}  // namespace

std::vector<int> closed_form_d(int ell) {
  if (ell < 2) throw OutOfRange("closed-form sequence needs l >= 2");
  // Sign of an entry x other than 1: positive iff floor(x/2) is odd, except
  // that for odd l the even entries take the opposite sign.
  auto alternating = [](int x) { return (x / 2) % 2 == 1 ? x : -x; };
  std::vector<int> d;
  if (ell % 2 == 0) {
    for (int x = 3; x <= ell - 1; x += 2) d.push_back(alternating(x));
    d.push_back(ell % 4 == 0 ? 1 : -1);
    for (int x = ell - 2; x >= 2; x -= 2) d.push_back(alternating(x));
  } else {
    for (int x = 3; x <= ell; x += 2) d.push_back(alternating(x));
    d.push_back(ell % 4 == 3 ? 1 : -1);
    for (int x = ell - 3; x >= 2; x -= 2) d.push_back(-alternating(x));
  }
  const int n = 2 * ell + 1;
  const std::vector<int> b = b_values(ell, d);
  d.push_back(centered(2 - b.back(), n));
  return d;
}

RainbowBlock block_from_d(int ell, const std::vector<int>& d) {
  if (ell < 1 || static_cast<int>(d.size()) < ell - 1) {
    throw DomainError("sequence shorter than l - 1");
  }
  RainbowBlock block;
  block.n = 2 * ell + 1;
  block.k = 2;
  for (int x : b_values(ell, d)) {
    if (x == 1) throw DomainError("sequence revisits point 1");
    block.sets.push_back({1, x});
  }
  return block;
}

bool is_rainbow_sequence(int ell, const std::vector<int>& d) {
  if (ell < 1 || static_cast<int>(d.size()) != ell) return false;
  for (int x : d) {
    if (x == 0 || x > ell || x < -ell) return false;
  }
  const int n = 2 * ell + 1;
  const std::vector<int> b = b_values(ell, d);
  if (mod1(b.back() + d.back(), n) != 2) return false;
  if (std::find(b.begin(), b.end(), 1) != b.end()) return false;
  const BlockCheck c = check_block(block_from_d(ell, d));
  return c.shape && c.distinct && c.all_lengths;
}

RainbowBlock hamilton_k2(int ell) {
  const std::vector<int> d = closed_form_d(ell);
  RainbowBlock block = block_from_d(ell, d);
  if (!check_block(block).ok()) {
    throw IllegalFlip("closed-form block fails for l=" + std::to_string(ell));
  }
  return block;
}

std::vector<std::vector<int>> enumerate_rainbow_sequences(int ell) {
  if (ell < 1 || ell > 7) throw DomainError("enumeration supports 1 <= l <= 7");
  const int n = 2 * ell + 1;
  std::vector<std::vector<int>> out;
  std::vector<int> d;
  std::vector<char> used_step(ell + 1, 0);
  std::vector<char> used_dist(ell + 1, 0);
  used_dist[1] = 1;  // b_1 = n
  std::function<void(int)> extend = [&](int b) {
    if (static_cast<int>(d.size()) == ell - 1) {
      const int last = centered(2 - b, n);
      if (last != 0 && !used_step[std::abs(last)]) {
        d.push_back(last);
        out.push_back(d);
        d.pop_back();
      }
      return;
    }
    for (int v = -ell; v <= ell; ++v) {
      if (v == 0 || used_step[std::abs(v)]) continue;
      const int next = mod1(b + v, n);
      if (next == 1 || next == 2) continue;
      const int dist = cyclic_dist(n, Label(1, next));
      if (used_dist[dist]) continue;
      used_step[std::abs(v)] = used_dist[dist] = 1;
      d.push_back(v);
      extend(next);
      d.pop_back();
      used_step[std::abs(v)] = used_dist[dist] = 0;
    }
  };
  extend(n);
  return out;
}

namespace {

// Edge sets of G_{n,2} as bitsets over ordered vertex-id pairs.
class EdgeIndex {
 public:
  explicit EdgeIndex(int n) : n_(n) {
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) ids_[{a, b}] = count_++;
  }

  std::vector<std::uint64_t> edges(const LabeledFlipCycle& c) const {
    std::vector<std::uint64_t> bits(words(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::size_t e = edge(c.states[i], c.states[(i + 1) % c.size()]);
      bits[e / 64] |= 1ull << (e % 64);
    }
    return bits;
  }

  std::size_t edge(const State& u, const State& v) const {
    int a = id(u);
    int b = id(v);
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(a) * count_ + b;
  }

  int id(const State& s) const { return ids_.at({s[0], s[1]}); }
  int vertices() const { return count_; }
  std::size_t words() const {
    return (static_cast<std::size_t>(count_) * count_ + 63) / 64;
  }

 private:
  int n_;
  int count_ = 0;
  std::map<std::pair<int, int>, int> ids_;
};

bool disjoint(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] & b[i]) return false;
  }
  return true;
}

}  // namespace

bool edge_disjoint(const std::vector<LabeledFlipCycle>& cycles) {
  std::set<std::pair<State, State>> seen;
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      State u = c.states[i];
      State v = c.states[(i + 1) % c.size()];
      if (v < u) std::swap(u, v);
      if (!seen.insert({u, v}).second) return false;
    }
  }
  return true;
}

bool complement_is_two_factor(int n, const std::vector<LabeledFlipCycle>& cycles) {
  if (!edge_disjoint(cycles)) return false;
  EdgeIndex index(n);
  std::vector<int> used(index.vertices(), 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      ++used[index.id(c.states[i])];
      ++used[index.id(c.states[(i + 1) % c.size()])];
    }
  }
  const int degree = 2 * (n - 2);
  return std::all_of(used.begin(), used.end(),
                     [degree](int u) { return degree - u == 2; });
}

DisjointFamily max_edge_disjoint(int ell) {
  const auto seqs = enumerate_rainbow_sequences(ell);
  const int n = 2 * ell + 1;
  EdgeIndex index(n);
  std::vector<std::vector<std::uint64_t>> edges;
  for (const auto& d : seqs) edges.push_back(index.edges(cycle_from_block(block_from_d(ell, d))));

  const std::size_t count = seqs.size();
  std::vector<std::vector<char>> compatible(count, std::vector<char>(count, 0));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = a + 1; b < count; ++b)
      compatible[a][b] = compatible[b][a] = disjoint(edges[a], edges[b]);

  std::vector<int> best;
  std::vector<int> current;
  std::function<void(std::vector<int>)> grow = [&](std::vector<int> candidates) {
    if (current.size() > best.size()) best = current;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (current.size() + (candidates.size() - i) <= best.size()) return;
      const int v = candidates[i];
      std::vector<int> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j) {
        if (compatible[v][candidates[j]]) next.push_back(candidates[j]);
      }
      current.push_back(v);
      grow(std::move(next));
      current.pop_back();
    }
  };
  std::vector<int> all(count);
  for (std::size_t i = 0; i < count; ++i) all[i] = static_cast<int>(i);
  grow(all);

  DisjointFamily out;
  out.candidates = count;
  for (int v : best) out.sequences.push_back(seqs[v]);
  return out;
}

ZigzagPath zigzag_path(int ell, int k) {
  const int n = 2 * ell + 1;
  if (k < 3 || 3 * k >= n) throw OutOfRange("zigzag needs 3 <= k < n/3");
  ZigzagPath z;
  z.n = n;
  z.k = k;
  z.levels = ell - (k + 1) / 2;
  const int m = z.levels;
  if (ell % 2 == 1) {
    z.closing_length = m;
  } else {
    z.closing_length = k % 2 == 0 ? m + 1 : m + 2;
  }

  // (level, left side?) of each vertex; left of level i is n - i, right
  // is k + i.
  struct Spot {
    int level;
    bool left;
  };
  auto vertex = [&](Spot s) { return s.left ? n - s.level : k + s.level; };
  std::vector<Spot> spots{{0, true}};
  std::vector<ZigzagEdge> kinds;
  const int long_edges = ell - k + 1;
  for (int i = 0; i < long_edges; ++i) {
    spots.push_back({spots.back().level + 1, !spots.back().left});
    kinds.push_back(ZigzagEdge::kDiagonal);
  }
  for (int i = 0; i < k - 2; ++i) {
    const Spot at = spots.back();
    if (i % 2 == 0) {
      spots.push_back({at.level, !at.left});
      kinds.push_back(ZigzagEdge::kLevel);
    } else {
      spots.push_back({at.level + 1, !at.left});
      kinds.push_back(ZigzagEdge::kDiagonal);
    }
  }
  if (spots.back().level != m) throw IllegalFlip("zigzag does not end at level m");

  // Replace the long diagonal of length S by a cycle edge and mirror the
  // rest of the path.
  int replaced = -1;
  for (int i = 0; i < long_edges; ++i) {
    if (cyclic_dist(n, Label(vertex(spots[i]), vertex(spots[i + 1]))) == z.closing_length) {
      replaced = i;
    }
  }
  if (replaced < 0) throw IllegalFlip("no diagonal of the closing length");
  kinds[replaced] = ZigzagEdge::kCycle;
  for (std::size_t i = replaced + 1; i < spots.size(); ++i) spots[i].left = !spots[i].left;

  for (const Spot& s : spots) z.vertices.push_back(vertex(s));
  z.vertices.push_back(k);
  kinds.push_back(ZigzagEdge::kClosing);
  z.kinds = std::move(kinds);
  if (cyclic_dist(n, Label(z.vertices[ell - 1], k)) != z.closing_length) {
    throw IllegalFlip("closing edge has the wrong length");
  }
  return z;
}

RainbowBlock zigzag_block(int ell, int k) {
  const ZigzagPath z = zigzag_path(ell, k);
  RainbowBlock block;
  block.n = z.n;
  block.k = k;
  for (int i = 0; i < ell; ++i) {
    KSubset s;
    for (int x = 1; x < k; ++x) s.push_back(x);
    s.push_back(z.vertices[i]);
    block.sets.push_back(std::move(s));
  }
  return block;
}

RainbowBlock special_block(int ell, int k) {
  auto with_prefix = [](int upto, std::vector<int> extra) {
    KSubset s;
    for (int x = 1; x <= upto; ++x) s.push_back(x);
    s.insert(s.end(), extra.begin(), extra.end());
    std::sort(s.begin(), s.end());
    return s;
  };
  RainbowBlock block;
  block.n = 2 * ell + 1;
  block.k = k;
  if (ell == 4 && k == 4) {
    block.sets = {{1, 2, 3, 9}, {1, 2, 7, 9}, {1, 2, 3, 7}, {1, 2, 3, 5}};
  } else if (ell == 8 && k == 8) {
    block.sets = {with_prefix(7, {17}), with_prefix(6, {15, 17}),
                  with_prefix(7, {15}), with_prefix(7, {9}),
                  with_prefix(7, {14}), with_prefix(7, {11}),
                  with_prefix(7, {13}), with_prefix(7, {12})};
  } else {
    throw OutOfRange("special blocks exist for (l, k) = (4, 4) and (8, 8)");
  }
  return block;
}

LabeledFlipCycle subset_rainbow_cycle(int n, int k) {
  if (n < 4 || k < 2 || k > n - 2) {
    throw OutOfRange("subset rainbow cycles need n >= 4 and 2 <= k <= n - 2");
  }
  if (n % 2 == 0) {
    throw ParityRefusal("no rainbow cycle of k-subsets exists for even n=" +
                        std::to_string(n));
  }
  const int ell = (n - 1) / 2;
  const int small = std::min(k, n - k);
  RainbowBlock block;
  if (small == 2) {
    block = hamilton_k2(ell);
  } else if (3 * small < n) {
    block = zigzag_block(ell, small);
  } else if ((ell == 4 && small == 4) || (ell == 8 && small == 8)) {
    block = special_block(ell, small);
  } else {
    throw OutOfRange("no construction known for n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
  }
  LabeledFlipCycle c = cycle_from_block(block);
  if (small != k) {
    for (State& s : c.states) s = complement(n, s);
    c.params.k = k;
  }
  return c;
}

WalkReachability rainbow_walk_reachability(int n, int k) {
  if (n < 2 || k < 1 || k >= n) throw DomainError("need 1 <= k < n");
  const int labels = n * (n - 1) / 2;
  if (labels > 28) throw OutOfRange("walk reachability needs C(n,2) <= 28");
  std::vector<int> ends_a, ends_b;
  std::vector<std::uint32_t> touches(n, 0);  // labels containing element x
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      touches[a] |= 1u << ends_a.size();
      touches[b] |= 1u << ends_a.size();
      ends_a.push_back(a);
      ends_b.push_back(b);
    }
  }
  const std::uint32_t start = (1u << k) - 1;
  auto vertex = [&](std::uint32_t used) {
    std::uint32_t s = start;
    for (int x = 0; x < n; ++x) {
      if (std::popcount(used & touches[x]) & 1) s ^= 1u << x;
    }
    return s;
  };
  const std::uint64_t total = std::uint64_t{1} << labels;
  std::vector<std::uint64_t> reach((total + 63) / 64, 0);
  reach[0] = 1;
  WalkReachability out;
  for (std::uint64_t used = 0; used < total; ++used) {
    if (!(reach[used >> 6] >> (used & 63) & 1)) continue;
    ++out.reachable_sets;
    const std::uint32_t s = vertex(static_cast<std::uint32_t>(used));
    for (int l = 0; l < labels; ++l) {
      if (used >> l & 1) continue;
      if (((s >> ends_a[l]) ^ (s >> ends_b[l])) & 1) {
        const std::uint64_t next = used | (std::uint64_t{1} << l);
        reach[next >> 6] |= std::uint64_t{1} << (next & 63);
      }
    }
  }
  const std::uint64_t all = total - 1;
  out.closed_walk = (reach[all >> 6] >> (all & 63) & 1) &&
                    vertex(static_cast<std::uint32_t>(all)) == start;
  return out;
}

SubsetOracle::SubsetOracle(int n, int k) : n_(n), k_(k) {
  if (n < 2 || k < 1 || k >= n) throw DomainError("subset flip graph needs 1 <= k < n");
}

CycleParams SubsetOracle::params() const {
  CycleParams p;
  p.n = n_;
  p.k = k_;
  return p;
}

std::vector<Label> SubsetOracle::universe() const {
  std::vector<Label> u;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) u.emplace_back(i, j);
  return u;
}

std::optional<std::string> SubsetOracle::invalid_reason(const State& s) const {
  if (static_cast<int>(s.size()) != k_) return "wrong subset size";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > n_) return "element outside [n]";
    if (i && s[i - 1] >= s[i]) return "subset not sorted";
  }
  return std::nullopt;
}

std::optional<LabelSet> SubsetOracle::flip_labels(const State& from,
                                                  const State& to) const {
  const KSubset d = symmetric_difference(from, to);
  if (d.size() != 2) return std::nullopt;
  return LabelSet{Label(d[0], d[1])};
}

std::vector<Neighbor> SubsetOracle::neighbors(const State& s) const {
  std::vector<Neighbor> out;
  const KSubset rest = complement(n_, s);
  for (int x : s) {
    for (int y : rest) {
      KSubset t = s;
      *std::find(t.begin(), t.end(), x) = y;
      std::sort(t.begin(), t.end());
      out.push_back({std::move(t), {Label(x, y)}});
    }
  }
  sort_neighbors(out);
  return out;
}

}  // namespace rainbow
