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

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "rainbow/cycle.hpp"
#include "rainbow/flip_graph.hpp"

namespace rainbow {

struct Arc {
  int to = -1;
  int n_labels = 0;
  std::array<int, 2> label_ids{-1, -1};
};

// Explicit, indexed copy of the part of a flip graph reachable from a set
// of start states. Vertex ids follow BFS discovery order.
class FlipGraph {
 public:
  static FlipGraph explore(const FlipGraphOracle& oracle,
                           std::span<const State> starts);

  std::size_t size() const { return states_.size(); }
  const State& state(int v) const { return states_[v]; }
  const std::vector<Arc>& arcs(int v) const { return arcs_[v]; }
  int index_of(const State& s) const;

  int labels_per_step() const { return labels_per_step_; }
  const std::vector<Label>& labels() const { return labels_; }
  int label_id(Label l) const;

  // Present-label ids per vertex, or empty if the family has none.
  const std::vector<std::vector<int>>& present() const { return present_; }

  // Connected components of the underlying undirected graph, each sorted,
  // ordered by smallest member.
  std::vector<std::vector<int>> components() const;

  std::size_t arc_count() const;

 private:
  int labels_per_step_ = 1;
  std::vector<Label> labels_;
  std::vector<State> states_;
  std::unordered_map<State, int, StateHash> index_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::vector<int>> present_;
};

// Partition of the states reachable from `all_states` into components.
std::vector<std::vector<State>> connected_components(
    const FlipGraphOracle& oracle, std::span<const State> all_states);

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0: unlimited
  double max_seconds = 0;       // 0: unlimited
};

struct SearchOptions {
  SearchBudget budget;
  // Only look for cycles through the given start states. Sound for
  // vertex-transitive graphs; otherwise every reachable cycle is searched.
  bool through_starts_only = false;
  // Search components in ascending order of size.
  bool smallest_components_first = true;
};

enum class SearchVerdict { kFound, kNone, kInconclusive };

std::string to_string(SearchVerdict v);

struct ComponentReport {
  std::size_t size = 0;
  SearchVerdict verdict = SearchVerdict::kNone;
  std::uint64_t nodes = 0;
};

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::kNone;
  // The target length r|U|/labels_per_step is not an integer.
  bool parity_precheck = false;
  std::optional<LabeledFlipCycle> cycle;
  std::uint64_t nodes = 0;
  std::size_t states = 0;
  std::vector<ComponentReport> components;
};

// Depth-first search for an r-rainbow cycle. Prunes by per-label budget,
// visited states, distance back to the start, bipartite parity and, for
// edge-set families, labels that must still re-enter. Deterministic.
SearchResult exhaustive_rainbow_search(const FlipGraphOracle& oracle, int r,
                                       std::span<const State> starts,
                                       const SearchOptions& options = {});

// Same on a prebuilt graph restricted to the given vertex set.
SearchResult search_vertices(const FlipGraph& graph,
                             const FlipGraphOracle& oracle, int r,
                             std::span<const int> vertices,
                             const SearchOptions& options = {});

// Calls `visit` with the vertex sequence of every r-rainbow cycle through
// `start` (each cycle once per direction). Stops when `visit` returns
// false. Returns the verdict of the enumeration.
SearchVerdict for_each_rainbow_cycle(
    const FlipGraph& graph, int r, int start,
    const std::function<bool(const std::vector<int>&)>& visit,
    const SearchBudget& budget = {}, std::uint64_t* nodes = nullptr);

// Turns a vertex sequence of `graph` into a labelled cycle.
LabeledFlipCycle cycle_from_path(const FlipGraph& graph,
                                 const FlipGraphOracle& oracle, int r,
                                 const std::vector<int>& path);

}  // namespace rainbow
