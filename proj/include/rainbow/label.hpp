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

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace rainbow {

// Unordered pair {x, y} of distinct 1-based ids, stored smaller first.
class Label {
 public:
  Label() = default;
  Label(int a, int b);

  int lo() const { return lo_; }
  int hi() const { return hi_; }
  bool contains(int v) const { return v == lo_ || v == hi_; }
  // The endpoint that is not `v`; `v` must be an endpoint.
  int other(int v) const;

  auto operator<=>(const Label&) const = default;

  std::string str() const;

 private:
  int lo_ = 0;
  int hi_ = 0;
};

using LabelSet = std::vector<Label>;

// Representative of `value` modulo n in {1, ..., n}.
int mod1(long long value, int n);

// Cyclic distance of a pair of points on Z_n with representatives 1..n.
int cyclic_dist(int n, Label pair);

// Elementwise cyclic shift of a subset of [n]; result sorted.
std::vector<int> sigma(int n, std::span<const int> s, int shift);

}  // namespace rainbow
