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

#include "rainbow/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kEmpty: return "empty cycle";
    case Violation::Kind::kInvalidState: return "invalid state";
    case Violation::Kind::kIllegalFlip: return "illegal flip";
    case Violation::Kind::kLabelMismatch: return "label mismatch";
    case Violation::Kind::kRepeatedState: return "repeated state";
    case Violation::Kind::kForeignLabel: return "label outside universe";
    case Violation::Kind::kLabelCount: return "label count";
    case Violation::Kind::kWrongLength: return "wrong length";
  }
  return "unknown";
}

bool RainbowReport::has(Violation::Kind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string RainbowReport::summary() const {
  if (is_rainbow_r) return "ok";
  std::ostringstream out;
  std::size_t shown = 0;
  for (const Violation& v : violations) {
    if (shown++ == 5) {
      out << "; ... (" << violations.size() << " violations)";
      break;
    }
    if (shown > 1) out << "; ";
    out << to_string(v.kind);
    if (!v.detail.empty()) out << ": " << v.detail;
  }
  return out.str();
}

namespace {

std::string state_str(const State& s) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << "]";
  return out.str();
}

std::string labels_str(const LabelSet& ls) {
  std::string out;
  for (const Label& l : ls) out += l.str();
  return out;
}

}  // namespace

RainbowReport verify_rainbow(const LabeledFlipCycle& cycle,
                             std::span<const Label> universe, int r,
                             const FlipGraphOracle& oracle) {
  RainbowReport report;
  auto add = [&report](Violation v) {
    report.violations.push_back(std::move(v));
  };
  const std::size_t len = cycle.states.size();
  if (len == 0) {
    add(Violation{Violation::Kind::kEmpty, 0, {}, 0, {}});
    return report;
  }
  if (cycle.step_labels.size() != len) {
    add({Violation::Kind::kWrongLength, 0, {}, 0,
         "label list length differs from state count"});
  }

  bool states_ok = true;
  for (std::size_t i = 0; i < len; ++i) {
    if (auto why = oracle.invalid_reason(cycle.states[i])) {
      states_ok = false;
      add({Violation::Kind::kInvalidState, i, {}, 0,
           "state " + std::to_string(i) + ": " + *why});
    }
  }

  std::set<State> seen;
  for (std::size_t i = 0; i < len; ++i) {
    if (!seen.insert(cycle.states[i]).second) {
      add({Violation::Kind::kRepeatedState, i, {}, 0,
           "state " + std::to_string(i) + " " + state_str(cycle.states[i])});
    }
  }

  const std::set<Label> in_universe(universe.begin(), universe.end());
  for (const Label& l : universe) report.multiplicity_by_label[l] = 0;

  const std::size_t steps = std::min(len, cycle.step_labels.size());
  for (std::size_t i = 0; i < steps; ++i) {
    LabelSet declared = cycle.step_labels[i];
    std::sort(declared.begin(), declared.end());
    for (const Label& l : declared) {
      ++report.multiplicity_by_label[l];
      if (!in_universe.count(l)) {
        add({Violation::Kind::kForeignLabel, i, l, 0, l.str()});
      }
    }
    if (!states_ok) continue;
    const State& from = cycle.states[i];
    const State& to = cycle.states[(i + 1) % len];
    auto actual = oracle.flip_labels(from, to);
    if (!actual) {
      add({Violation::Kind::kIllegalFlip, i, {}, 0,
           "step " + std::to_string(i) + ": " + state_str(from) + " -> " +
               state_str(to)});
    } else if (*actual != declared) {
      add({Violation::Kind::kLabelMismatch, i, {}, 0,
           "step " + std::to_string(i) + " declares " + labels_str(declared) +
               ", flip enters " + labels_str(*actual)});
    }
  }

  for (const auto& [label, count] : report.multiplicity_by_label) {
    if (count != r) {
      add({Violation::Kind::kLabelCount, 0, label, count,
           label.str() + " appears " + std::to_string(count) + " times"});
    }
  }

  const long long total = static_cast<long long>(r) *
                          static_cast<long long>(universe.size());
  const int lps = oracle.labels_per_step();
  if (total % lps != 0 || static_cast<long long>(len) != total / lps) {
    add({Violation::Kind::kWrongLength, 0, {}, 0,
         "length " + std::to_string(len) + ", expected " +
             std::to_string(total) + "/" + std::to_string(lps)});
  }

  report.is_rainbow_r = report.violations.empty();
  return report;
}

RainbowReport verify_rainbow(const LabeledFlipCycle& cycle, int r,
                             const FlipGraphOracle& oracle) {
  const std::vector<Label> universe = oracle.universe();
  return verify_rainbow(cycle, universe, r, oracle);
}

RainbowReport verify_rainbow(const LabeledFlipCycle& cycle) {
  auto oracle = make_oracle(cycle.family, cycle.params);
  return verify_rainbow(cycle, cycle.r, *oracle);
}

void derive_step_labels(LabeledFlipCycle& cycle,
                        const FlipGraphOracle& oracle) {
  const std::size_t len = cycle.states.size();
  cycle.step_labels.assign(len, {});
  for (std::size_t i = 0; i < len; ++i) {
    auto labels = oracle.flip_labels(cycle.states[i], cycle.states[(i + 1) % len]);
    if (!labels) {
      throw IllegalFlip("step " + std::to_string(i) + " of " +
                        std::string(oracle.family()) + " cycle is not a flip");
    }
    cycle.step_labels[i] = std::move(*labels);
  }
}

void sort_neighbors(std::vector<Neighbor>& out) {
  std::sort(out.begin(), out.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.labels != b.labels) return a.labels < b.labels;
    return a.state < b.state;
  });
}

}  // namespace rainbow
