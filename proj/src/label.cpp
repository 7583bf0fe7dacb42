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

#include "rainbow/label.hpp"

#include <algorithm>
#include <string>

#include "rainbow/cycle.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

Label::Label(int a, int b) {
  if (a == b) {
    throw DomainError("label endpoints must differ: " + std::to_string(a));
  }
  if (a < 1 || b < 1) {
    throw DomainError("label endpoints are 1-based");
  }
  lo_ = std::min(a, b);
  hi_ = std::max(a, b);
}

int Label::other(int v) const {
  if (v == lo_) return hi_;
  if (v == hi_) return lo_;
  throw DomainError(std::to_string(v) + " is not an endpoint of " + str());
}

std::string Label::str() const {
  return "{" + std::to_string(lo_) + "," + std::to_string(hi_) + "}";
}

int mod1(long long value, int n) {
  if (n < 1) throw DomainError("modulus must be positive");
  long long r = (value - 1) % n;
  if (r < 0) r += n;
  return static_cast<int>(r + 1);
}

int cyclic_dist(int n, Label pair) {
  if (pair.lo() < 1 || pair.hi() > n) {
    throw DomainError("pair " + pair.str() + " outside [" +
                      std::to_string(n) + "]");
  }
  int d = pair.hi() - pair.lo();
  return std::min(d, n - d);
}

std::vector<int> sigma(int n, std::span<const int> s, int shift) {
  std::vector<int> out;
  out.reserve(s.size());
  for (int x : s) {
    if (x < 1 || x > n) throw DomainError("element outside [n]");
    out.push_back(mod1(static_cast<long long>(x) + shift, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

State encode_edges(const std::vector<Label>& edges) {
  std::vector<Label> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  State s;
  s.reserve(2 * sorted.size());
  for (const Label& e : sorted) {
    s.push_back(e.lo());
    s.push_back(e.hi());
  }
  return s;
}

std::vector<Label> decode_edges(const State& s) {
  if (s.size() % 2 != 0) throw DomainError("edge state has odd length");
  std::vector<Label> edges;
  edges.reserve(s.size() / 2);
  for (std::size_t i = 0; i < s.size(); i += 2) {
    edges.emplace_back(s[i], s[i + 1]);
  }
  return edges;
}

}  // namespace rainbow
