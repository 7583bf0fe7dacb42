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

#include "rainbow/triangulations.hpp"

#include <algorithm>
#include <functional>

#include "rainbow/errors.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

bool diagonals_cross(Label a, Label b) {
  auto strictly_inside = [](int x, Label l) { return l.lo() < x && x < l.hi(); };
  if (a.contains(b.lo()) || a.contains(b.hi())) return false;
  return strictly_inside(b.lo(), a) != strictly_inside(b.hi(), a);
}

std::vector<Label> diagonal_universe(int n) {
  std::vector<Label> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 2; j <= n; ++j) {
      if (i == 1 && j == n) continue;
      out.emplace_back(i, j);
    }
  }
  return out;
}

std::optional<std::string> triangulation_problem(int n,
                                                 const std::vector<Label>& d) {
  if (n < 3) return "polygon needs at least 3 vertices";
  if (static_cast<int>(d.size()) != n - 3) {
    return "expected " + std::to_string(n - 3) + " diagonals, got " +
           std::to_string(d.size());
  }
  for (std::size_t a = 0; a < d.size(); ++a) {
    const Label& e = d[a];
    if (e.hi() > n || e.hi() - e.lo() < 2 || (e.lo() == 1 && e.hi() == n)) {
      return e.str() + " is not a diagonal";
    }
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      if (d[b] == e) return "repeated diagonal " + e.str();
      if (diagonals_cross(e, d[b])) {
        return e.str() + " crosses " + d[b].str();
      }
    }
  }
  return std::nullopt;
}

Triangulation::Triangulation(int n, std::vector<Label> diagonals)
    : n_(n), diagonals_(std::move(diagonals)) {
  std::sort(diagonals_.begin(), diagonals_.end());
  if (auto why = triangulation_problem(n_, diagonals_)) throw DomainError(*why);
}

Triangulation Triangulation::star(int n, int i) {
  if (i < 1 || i > n) throw DomainError("star centre outside [n]");
  std::vector<Label> d;
  for (int k = 1; k <= n; ++k) {
    const int gap = mod1(k - i + 1, n) - 1;
    if (gap >= 2 && gap <= n - 2) d.emplace_back(i, k);
  }
  return Triangulation(n, std::move(d));
}

Triangulation Triangulation::decode(int n, const State& s) {
  return Triangulation(n, decode_edges(s));
}

bool Triangulation::has(Label d) const {
  return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
}

bool Triangulation::adjacent(int a, int b) const {
  const int gap = std::abs(a - b);
  if (gap == 1 || gap == n_ - 1) return true;
  return has(Label(a, b));
}

Label Triangulation::flip_partner(Label d) const {
  if (!has(d)) throw IllegalFlip(d.str() + " is not in the triangulation");
  const int a = d.lo();
  const int c = d.hi();
  int inner = 0;
  int outer = 0;
  for (int x = 1; x <= n_; ++x) {
    if (x == a || x == c || !adjacent(a, x) || !adjacent(x, c)) continue;
    (x > a && x < c ? inner : outer) = x;
  }
  if (!inner || !outer) throw IllegalFlip("no quadrilateral around " + d.str());
  return Label(inner, outer);
}

Triangulation Triangulation::apply_flip(Label remove, Label insert) const {
  const Label partner = flip_partner(remove);
  if (partner != insert) {
    throw IllegalFlip("flipping " + remove.str() + " inserts " + partner.str() +
                      ", not " + insert.str());
  }
  std::vector<Label> d = diagonals_;
  *std::find(d.begin(), d.end(), remove) = insert;
  return Triangulation(n_, std::move(d));
}

std::vector<Flip> star_flip_sequence(int i, int m) {
  if (m < 4 || i < 1 || i > m) throw DomainError("F_{i,m} needs 1 <= i <= m, m >= 4");
  std::vector<Flip> out;
  const int s = i - 1;
  for (int t = 3; t <= m - 1; ++t) {
    out.emplace_back(Label(mod1(1 + s, m), mod1(t + s, m)),
                     Label(mod1(2 + s, m), mod1(t + 1 + s, m)));
  }
  return out;
}

namespace {

LabeledFlipCycle run_flips(int n, const std::vector<Flip>& flips, int r) {
  LabeledFlipCycle c;
  c.family = kTriangulationFamily;
  c.params.n = n;
  c.r = r;
  Triangulation t = Triangulation::star(n, 1);
  for (const Flip& f : flips) {
    c.states.push_back(t.encode());
    c.step_labels.push_back({f.second});
    t = t.apply_flip(f.first, f.second);
  }
  if (t != Triangulation::star(n, 1)) {
    throw IllegalFlip("flip sequence does not return to S_1");
  }
  return c;
}

}  // namespace

LabeledFlipCycle triangulation_rainbow2(int n, bool allow_small) {
  if (n < 6 || (n == 6 && !allow_small)) {
    throw OutOfRange("2-rainbow triangulation cycle needs n >= 7");
  }
  std::vector<Flip> flips;
  for (int i = 1; i <= n; ++i) {
    auto f = star_flip_sequence(i, n);
    flips.insert(flips.end(), f.begin(), f.end());
  }
  return run_flips(n, flips, 2);
}

LabeledFlipCycle triangulation_rainbow1(int n) {
  if (n < 4) throw OutOfRange("1-rainbow triangulation cycle needs n >= 4");
  std::vector<Flip> flips;
  for (int i = 3; i <= n - 1; ++i) {
    auto f = star_flip_sequence(i, i + 1);
    flips.insert(flips.end(), f.begin(), f.end());
  }
  auto last = star_flip_sequence(n, n);
  flips.insert(flips.end(), last.begin(), last.end());
  return run_flips(n, flips, 1);
}

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 3 || n > 14) throw DomainError("enumeration supports 3 <= n <= 14");
  // Triangulations of the sub-polygon lo..hi, as diagonal lists.
  std::function<std::vector<std::vector<Label>>(int, int)> rec =
      [&](int lo, int hi) -> std::vector<std::vector<Label>> {
    if (hi - lo < 2) return {{}};
    std::vector<std::vector<Label>> out;
    for (int k = lo + 1; k < hi; ++k) {
      auto left = rec(lo, k);
      auto right = rec(k, hi);
      for (const auto& a : left) {
        for (const auto& b : right) {
          std::vector<Label> d = a;
          d.insert(d.end(), b.begin(), b.end());
          if (k - lo > 1) d.emplace_back(lo, k);
          if (hi - k > 1) d.emplace_back(k, hi);
          out.push_back(std::move(d));
        }
      }
    }
    return out;
  };
  std::vector<Triangulation> out;
  for (auto& d : rec(1, n)) out.emplace_back(n, std::move(d));
  std::sort(out.begin(), out.end(), [](const Triangulation& a, const Triangulation& b) {
    return a.diagonals() < b.diagonals();
  });
  return out;
}

TriangulationOracle::TriangulationOracle(int n) : n_(n) {
  if (n < 4) throw DomainError("triangulation flip graph needs n >= 4");
}

CycleParams TriangulationOracle::params() const {
  CycleParams p;
  p.n = n_;
  return p;
}

std::optional<std::string> TriangulationOracle::invalid_reason(const State& s) const {
  if (s.size() % 2 != 0) return "odd-length edge encoding";
  std::vector<Label> d;
  try {
    d = decode_edges(s);
  } catch (const DomainError& e) {
    return e.what();
  }
  if (!std::is_sorted(d.begin(), d.end())) return "diagonals not sorted";
  return triangulation_problem(n_, d);
}

std::optional<LabelSet> TriangulationOracle::flip_labels(const State& from,
                                                         const State& to) const {
  const Triangulation a = Triangulation::decode(n_, from);
  const Triangulation b = Triangulation::decode(n_, to);
  std::vector<Label> removed;
  std::vector<Label> inserted;
  std::set_difference(a.diagonals().begin(), a.diagonals().end(),
                      b.diagonals().begin(), b.diagonals().end(),
                      std::back_inserter(removed));
  std::set_difference(b.diagonals().begin(), b.diagonals().end(),
                      a.diagonals().begin(), a.diagonals().end(),
                      std::back_inserter(inserted));
  if (removed.size() != 1 || inserted.size() != 1) return std::nullopt;
  if (a.flip_partner(removed[0]) != inserted[0]) return std::nullopt;
  return LabelSet{inserted[0]};
}

std::vector<Neighbor> TriangulationOracle::neighbors(const State& s) const {
  const Triangulation t = Triangulation::decode(n_, s);
  std::vector<Neighbor> out;
  for (const Label& d : t.diagonals()) {
    const Label p = t.flip_partner(d);
    out.push_back({t.apply_flip(d, p).encode(), {p}});
  }
  sort_neighbors(out);
  return out;
}

std::optional<LabelSet> TriangulationOracle::present_labels(const State& s) const {
  return decode_edges(s);
}

}  // namespace rainbow
