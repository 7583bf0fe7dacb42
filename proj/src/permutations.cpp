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

#include "rainbow/permutations.hpp"

#include <algorithm>
#include <numeric>

#include "rainbow/errors.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Permutation apply_transposition(Permutation p, Label t) {
  if (t.hi() > static_cast<int>(p.size())) {
    throw DomainError("transposition " + t.str() + " outside [n]");
  }
  std::swap(p[t.lo() - 1], p[t.hi() - 1]);
  return p;
}

std::vector<Label> base_sequence_r4() {
  return {Label(1, 2), Label(3, 4), Label(2, 3),
          Label(1, 4), Label(2, 4), Label(1, 3)};
}

namespace {

// Index i with t = t_i = {2i-1, 2i} and i <= half, or 0.
int matching_index(Label t, int half) {
  if (t.hi() != t.lo() + 1 || t.lo() % 2 == 0) return 0;
  const int i = t.hi() / 2;
  return i <= half ? i : 0;
}

std::vector<Label> replace_matching(const std::vector<Label>& q, int half,
                                    int apex) {
  std::vector<Label> out;
  out.reserve(q.size() + 2 * half);
  for (const Label& t : q) {
    if (matching_index(t, half)) {
      out.emplace_back(t.lo(), apex);
      out.push_back(t);
      out.emplace_back(t.hi(), apex);
    } else {
      out.push_back(t);
    }
  }
  return out;
}

void require_rainbow(int n, const std::vector<Label>& seq) {
  const LabeledFlipCycle c = permutation_cycle(n, seq);
  const RainbowReport report = verify_rainbow(c, 1, PermutationOracle(n));
  if (!report.is_rainbow_r) {
    throw IllegalFlip("transposition sequence for n=" + std::to_string(n) +
                      " is not rainbow: " + report.summary());
  }
}

}  // namespace

std::vector<Label> extend_plus1(const std::vector<Label>& r, int n) {
  if (n % 4 != 0) throw DomainError("extend_plus1 needs n divisible by 4");
  return replace_matching(r, n / 2, n + 1);
}

std::vector<Label> extend_plus4(const std::vector<Label>& r, int n) {
  if (n % 4 != 0 || r.empty()) {
    throw DomainError("extend_plus4 needs n divisible by 4");
  }
  const int half = n / 2;
  std::vector<Label> q = r;
  std::size_t turns = 0;
  while (matching_index(q.back(), half)) {
    std::rotate(q.begin(), q.begin() + 1, q.end());
    if (++turns == q.size()) throw DomainError("sequence consists of t_i only");
  }
  for (int k = 1; k <= 4; ++k) q = replace_matching(q, half, n + k);
  std::vector<Label> shifted;
  for (const Label& t : base_sequence_r4()) shifted.emplace_back(t.lo() + n, t.hi() + n);

  std::vector<Label> out(q.begin(), q.end() - 1);
  out.insert(out.end(), shifted.begin(), shifted.end() - 1);
  out.push_back(q.back());
  out.push_back(shifted.back());
  return out;
}

std::vector<Label> permutation_rainbow_sequence(int n) {
  if (n < 2) throw OutOfRange("permutation rainbow cycles need n >= 4");
  if ((n / 2) % 2 != 0) {
    throw ParityRefusal("no rainbow cycle exists when floor(n/2) is odd (n=" +
                        std::to_string(n) + ")");
  }
  std::vector<Label> r = base_sequence_r4();
  require_rainbow(4, r);
  int m = 4;
  while (m + 4 <= n) {
    r = extend_plus4(r, m);
    m += 4;
    require_rainbow(m, r);
  }
  if (m + 1 == n) {
    r = extend_plus1(r, m);
    require_rainbow(n, r);
  }
  return r;
}

LabeledFlipCycle permutation_cycle(int n, const std::vector<Label>& seq,
                                   std::optional<Permutation> start) {
  LabeledFlipCycle c;
  c.family = kPermutationFamily;
  c.params.n = n;
  Permutation p = start ? *start : identity_permutation(n);
  for (const Label& t : seq) {
    c.states.push_back(p);
    c.step_labels.push_back({t});
    p = apply_transposition(std::move(p), t);
  }
  return c;
}

PermutationOracle::PermutationOracle(int n) : n_(n) {
  if (n < 2) throw DomainError("permutation flip graph needs n >= 2");
}

CycleParams PermutationOracle::params() const {
  CycleParams p;
  p.n = n_;
  return p;
}

std::vector<Label> PermutationOracle::universe() const {
  std::vector<Label> u;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) u.emplace_back(i, j);
  return u;
}

std::optional<std::string> PermutationOracle::invalid_reason(const State& s) const {
  if (static_cast<int>(s.size()) != n_) return "wrong length";
  std::vector<char> seen(n_ + 1, 0);
  for (int v : s) {
    if (v < 1 || v > n_ || seen[v]) return "not a permutation of [n]";
    seen[v] = 1;
  }
  return std::nullopt;
}

std::optional<LabelSet> PermutationOracle::flip_labels(const State& from,
                                                       const State& to) const {
  std::vector<int> diff;
  for (int i = 0; i < n_; ++i) {
    if (from[i] != to[i]) diff.push_back(i + 1);
  }
  if (diff.size() != 2) return std::nullopt;
  const Label t(diff[0], diff[1]);
  if (apply_transposition(from, t) != to) return std::nullopt;
  return LabelSet{t};
}

std::vector<Neighbor> PermutationOracle::neighbors(const State& s) const {
  std::vector<Neighbor> out;
  for (const Label& t : universe()) out.push_back({apply_transposition(s, t), {t}});
  sort_neighbors(out);
  return out;
}

}  // namespace rainbow
