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


// Command-line front end: constructions, searches, verification, export and
// the acceptance suite.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rainbow/acceptance.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/matchings.hpp"
#include "rainbow/permutations.hpp"
#include "rainbow/search.hpp"
#include "rainbow/spanning_trees.hpp"
#include "rainbow/subsets.hpp"
#include "rainbow/triangulations.hpp"
#include "rainbow/verify.hpp"

namespace {

using namespace rainbow;

enum Exit : int {
  kFound = 0,
  kNotRainbow = 1,
  kProvenNone = 10,
  kParity = 11,
  kInconclusiveBudget = 12,
  kUsage = 64,
  kInputError = 66,
  kIoError = 74,
};

struct Global {
  bool json = false;
  bool dot = false;
  std::string output;
  std::uint64_t seed = 20261019;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;

  SearchBudget budget() const { return {budget_nodes, budget_seconds}; }
};

void write_or_print(const Global& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(g.output, text);
  }
}

// Verifies `c` independently, then prints it in the requested format.
int emit_cycle(const Global& g, const LabeledFlipCycle& c, nlohmann::json extra = {}) {
  const RainbowReport report = verify_rainbow(c);
  if (!report.is_rainbow_r) {
    std::cerr << "error: construction failed verification: " << report.summary() << "\n";
    return kNotRainbow;
  }
  if (g.dot) {
    write_or_print(g, cycle_to_dot(c));
  } else if (g.json) {
    nlohmann::json j = cycle_to_json(c);
    if (extra.is_object()) {
      for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    }
    write_or_print(g, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "family: " << c.family << "\nlength: " << c.size() << "\nr: " << c.r
       << "\nrainbow: true\n";
    for (std::size_t i = 0; i < c.size(); ++i) {
      os << "  " << format_state(c.family, c.states[i]) << "  --";
      for (const Label& l : c.step_labels[i]) os << " " << l.str();
      os << "-->\n";
    }
    write_or_print(g, os.str());
  }
  return kFound;
}

int report_search(const Global& g, const SearchResult& r) {
  if (r.parity_precheck) {
    std::cout << "verdict: parity-refusal (target length is not an integer)\n";
    return kParity;
  }
  if (r.verdict == SearchVerdict::kFound) return emit_cycle(g, *r.cycle);
  std::cout << "verdict: " << to_string(r.verdict) << "\nstates: " << r.states
            << "\nnodes: " << r.nodes << "\n";
  return r.verdict == SearchVerdict::kNone ? kProvenNone : kInconclusiveBudget;
}

PointSet load_points(const std::string& path, int random_n, std::uint64_t seed) {
  if (!path.empty()) return canonical_label(read_points_file(path));
  if (random_n > 0) return canonical_label(random_general_position(random_n, seed));
  throw CLI::ValidationError("--points", "give --points FILE or --random N");
}

KSubset first_k(int k) {
  KSubset s;
  for (int x = 1; x <= k; ++x) s.push_back(x);
  return s;
}

// Block and d-sequence behind subset_rainbow_cycle(n, k), where known.
nlohmann::json subset_generator(int n, int k) {
  const bool complemented = 2 * k > n;
  const int kk = complemented ? n - k : k;
  const int ell = (n - 1) / 2;
  std::optional<RainbowBlock> block;
  nlohmann::json out = nlohmann::json::object();
  if (kk == 2) {
    block = hamilton_k2(ell);
    out["d"] = closed_form_d(ell);
  } else if (3 * kk < n) {
    block = zigzag_block(ell, kk);
  } else {
    block = special_block(ell, kk);
  }
  out["block"] = {{"n", block->n}, {"k", block->k}, {"sets", block->sets}};
  out["complemented"] = complemented;
  return out;
}

int run_verify(const Global& g, const std::string& path, std::optional<int> r) {
  LabeledFlipCycle c = read_cycle_file(path);
  if (r) c.r = *r;
  const RainbowReport report = verify_rainbow(c);
  nlohmann::json j{{"family", c.family},
                   {"length", c.size()},
                   {"r", c.r},
                   {"rainbow", report.is_rainbow_r},
                   {"detail", report.summary()}};
  if (g.json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "family: " << c.family << "\nlength: " << c.size() << "\nr: " << c.r
              << "\nrainbow: " << (report.is_rainbow_r ? "true" : "false") << "\n";
    if (!report.is_rainbow_r) std::cout << "detail: " << report.summary() << "\n";
  }
  if (report.is_rainbow_r && (g.dot || !g.output.empty())) {
    Global export_only = g;
    if (!g.dot) export_only.json = true;
    return emit_cycle(export_only, c);
  }
  return report.is_rainbow_r ? kFound : kNotRainbow;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rainbow cycles in flip graphs"};
  app.require_subcommand(1);
  Global g;
  app.add_flag("--json", g.json, "print cycles as JSON");
  app.add_flag("--dot", g.dot, "print cycles as Graphviz DOT");
  app.add_option("-o,--output", g.output, "write output to FILE instead of stdout");
  app.add_option("--seed", g.seed, "seed for random point sets");
  app.add_option("--budget-nodes", g.budget_nodes, "search node budget (0: none)");
  app.add_option("--budget-seconds", g.budget_seconds, "search time budget (0: none)");

  int n = 0, k = 0, r = 1, m = 0, ell = 0, random_n = 0;
  bool allow_small = false, centered_only = false, max_family = false;
  std::string points, family, path;
  std::optional<int> verify_r;

  auto* triang = app.add_subcommand("triang", "triangulations of a convex n-gon");
  triang->require_subcommand(1);
  auto* triang_rainbow = triang->add_subcommand("rainbow", "1- or 2-rainbow cycle");
  triang_rainbow->add_option("--n", n, "polygon size")->required();
  triang_rainbow->add_option("--r", r, "1 or 2")->check(CLI::Range(1, 2));
  triang_rainbow->add_flag("--allow-small", allow_small, "allow r = 2 for n = 6");

  auto* trees = app.add_subcommand("trees", "plane spanning trees of a point set");
  trees->require_subcommand(1);
  auto* trees_rainbow = trees->add_subcommand("rainbow", "r-rainbow cycle");
  trees_rainbow->add_option("--points", points, "point file")->check(CLI::ExistingFile);
  trees_rainbow->add_option("--random", random_n, "use N random points from --seed");
  trees_rainbow->add_option("--r", r, "multiplicity");

  auto* match = app.add_subcommand("match", "non-crossing perfect matchings of 2m points");
  match->require_subcommand(1);
  auto* match_rainbow = match->add_subcommand("rainbow", "explicit rainbow cycle");
  match_rainbow->add_option("--m", m, "number of edges")->required();
  match_rainbow->add_option("--r", r, "multiplicity");
  auto* match_search = match->add_subcommand("search", "exhaustive search for a rainbow cycle");
  match_search->add_option("--m", m, "number of edges")->required();
  match_search->add_option("--r", r, "multiplicity");
  auto* match_components = match->add_subcommand("components", "components of H_m");
  match_components->add_option("--m", m, "number of edges")->required();

  auto* perm = app.add_subcommand("perm", "permutations under transpositions");
  perm->require_subcommand(1);
  auto* perm_rainbow = perm->add_subcommand("rainbow", "rainbow cycle from the identity");
  perm_rainbow->add_option("--n", n, "size")->required();

  auto* comb = app.add_subcommand("comb", "k-subsets under element exchanges");
  comb->require_subcommand(1);
  auto* comb_rainbow = comb->add_subcommand("rainbow", "rainbow cycle for odd n");
  comb_rainbow->add_option("--n", n, "ground set size")->required();
  comb_rainbow->add_option("--k", k, "subset size")->required();
  auto* comb_enumerate = comb->add_subcommand("enumerate", "all rainbow d-sequences for k = 2");
  comb_enumerate->add_option("--ell", ell, "n = 2 ell + 1")->required();
  auto* comb_disjoint = comb->add_subcommand("disjoint", "edge-disjoint rainbow cycles for k = 2");
  comb_disjoint->add_option("--ell", ell, "n = 2 ell + 1")->required();
  comb_disjoint->add_flag("--max", max_family, "largest family instead of a pair");

  auto* verify = app.add_subcommand("verify", "re-check a cycle JSON file");
  verify->add_option("file", path, "cycle JSON")->required();
  verify->add_option("--r", verify_r, "override the declared multiplicity");

  auto* search = app.add_subcommand("search", "exhaustive rainbow search in any family");
  search->add_option("--family", family, "triangulation, spanning_tree, matching, permutation or subset")
      ->required()
      ->check(CLI::IsMember({"triangulation", "spanning_tree", "matching", "permutation", "subset"}));
  search->add_option("--n", n, "size parameter (m for matchings)");
  search->add_option("--k", k, "subset size");
  search->add_option("--r", r, "multiplicity");
  search->add_option("--points", points, "point file for spanning trees")->check(CLI::ExistingFile);
  search->add_option("--random", random_n, "use N random points from --seed");
  search->add_flag("--centered-only", centered_only, "matchings: centred flips only");

  auto* repro = app.add_subcommand("repro", "run the acceptance suite and write manifests");
  std::string repro_dir = "repro";
  std::vector<int> only;
  AcceptanceOptions acceptance;
  repro->add_option("--out", repro_dir, "manifest directory");
  repro->add_option("--only", only, "criterion ids")->check(CLI::Range(1, 7));
  repro->add_option("--m10-budget-seconds", acceptance.m10_budget_seconds,
                    "budget for the m = 10 matching proof");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (g.json && g.dot) throw CLI::ValidationError("--json and --dot are exclusive");
    if (triang_rainbow->parsed()) {
      return emit_cycle(g, r == 1 ? triangulation_rainbow1(n) : triangulation_rainbow2(n, allow_small));
    }
    if (trees_rainbow->parsed()) {
      const PointSet x = load_points(points, random_n, g.seed);
      return emit_cycle(g, tree_rainbow(x, r, g.budget()));
    }
    if (match_rainbow->parsed()) return emit_cycle(g, explicit_rainbow(m, r));
    if (match_search->parsed()) {
      if (r == 1) {
        const NoRainbowReport rep = prove_no_rainbow1(m, g.budget());
        if (rep.counterexample) return emit_cycle(g, *rep.counterexample);
        std::cout << "verdict: " << to_string(rep.verdict) << "\nmatchings: " << rep.matchings
                  << "\ncomponents: " << rep.components.size() << "\nnodes: " << rep.nodes << "\n";
        return rep.verdict == SearchVerdict::kNone ? kProvenNone : kInconclusiveBudget;
      }
      MatchingOracle oracle(m, false);
      const std::vector<State> starts{enumerate_matchings(m).front().encode()};
      SearchOptions opts;
      opts.budget = g.budget();
      return report_search(g, exhaustive_rainbow_search(oracle, r, starts, opts));
    }
    if (match_components->parsed()) {
      const FlipGraph graph = centered_flip_graph(m);
      const auto comps = graph.components();
      nlohmann::json j = nlohmann::json::array();
      for (const auto& comp : comps) {
        std::size_t arcs = 0;
        for (int v : comp) arcs += graph.arcs(v).size();
        j.push_back({{"size", comp.size()},
                     {"edges", arcs / 2},
                     {"tree", arcs / 2 + 1 == comp.size()},
                     {"class", weight_class(Matching::decode(m, graph.state(comp.front())))}});
      }
      if (g.json) {
        std::cout << nlohmann::json{{"m", m}, {"matchings", graph.size()}, {"components", j}}.dump(2)
                  << "\n";
      } else {
        std::cout << "matchings: " << graph.size() << "\ncomponents: " << comps.size() << "\n";
        for (const auto& c : j) {
          std::cout << "  size " << c["size"] << " edges " << c["edges"] << " class " << c["class"]
                    << (c["tree"].get<bool>() ? " tree" : "") << "\n";
        }
      }
      return kFound;
    }
    if (perm_rainbow->parsed()) {
      return emit_cycle(g, permutation_cycle(n, permutation_rainbow_sequence(n)));
    }
    if (comb_rainbow->parsed()) {
      const LabeledFlipCycle c = subset_rainbow_cycle(n, k);
      return emit_cycle(g, c, subset_generator(n, k));
    }
    if (comb_enumerate->parsed()) {
      const auto all = enumerate_rainbow_sequences(ell);
      if (g.json) {
        std::cout << nlohmann::json{{"ell", ell}, {"count", all.size()}, {"sequences", all}}.dump(2)
                  << "\n";
      } else {
        std::cout << "count: " << all.size() << "\n";
        for (const auto& d : all) {
          for (std::size_t i = 0; i < d.size(); ++i) std::cout << (i ? " " : "") << d[i];
          std::cout << "\n";
        }
      }
      return kFound;
    }
    if (comb_disjoint->parsed()) {
      std::vector<std::vector<int>> seqs;
      if (max_family) {
        seqs = max_edge_disjoint(ell).sequences;
      } else {
        auto d = closed_form_d(ell);
        seqs = {d, std::vector<int>(d.rbegin(), d.rend())};
      }
      std::vector<LabeledFlipCycle> cycles;
      for (const auto& d : seqs) {
        cycles.push_back(cycle_from_block(block_from_d(ell, d)));
        if (!verify_rainbow(cycles.back()).is_rainbow_r) {
          std::cerr << "error: a cycle failed verification\n";
          return kNotRainbow;
        }
      }
      const bool disjoint = edge_disjoint(cycles);
      if (g.json) {
        std::cout << nlohmann::json{{"ell", ell}, {"sequences", seqs}, {"edge_disjoint", disjoint}}.dump(2)
                  << "\n";
      } else {
        std::cout << "cycles: " << seqs.size() << "\nedge-disjoint: " << (disjoint ? "true" : "false")
                  << "\n";
        for (const auto& d : seqs) {
          for (std::size_t i = 0; i < d.size(); ++i) std::cout << (i ? " " : "") << d[i];
          std::cout << "\n";
        }
      }
      return disjoint ? kFound : kNotRainbow;
    }
    if (verify->parsed()) return run_verify(g, path, verify_r);
    if (search->parsed()) {
      CycleParams params;
      params.n = n;
      params.k = k;
      params.centered_only = centered_only;
      std::vector<State> starts;
      SearchOptions opts;
      opts.budget = g.budget();
      if (family == kSpanningTreeFamily) {
        const PointSet x = load_points(points, random_n, g.seed);
        params.points = x.points();
        params.n = x.size();
        starts.push_back(star_tree(x.size(), 1).encode());
      } else if (family == kTriangulationFamily) {
        starts.push_back(Triangulation::star(n, 1).encode());
      } else if (family == kMatchingFamily) {
        for (const Matching& mm : enumerate_matchings(n)) {
          starts.push_back(mm.encode());
          if (!centered_only) break;
        }
      } else if (family == kPermutationFamily) {
        starts.push_back(identity_permutation(n));
        opts.through_starts_only = true;
      } else {
        starts.push_back(first_k(k));
        opts.through_starts_only = true;
      }
      const auto oracle = make_oracle(family, params);
      return report_search(g, exhaustive_rainbow_search(*oracle, r, starts, opts));
    }
    if (repro->parsed()) {
      acceptance.seed = g.seed;
      std::filesystem::create_directories(repro_dir);
      bool all_pass = true;
      nlohmann::json timings = nlohmann::json::object();
      for (const auto& info : acceptance_criteria()) {
        if (!only.empty() && std::find(only.begin(), only.end(), info.id) == only.end()) continue;
        const CriterionResult res = run_criterion(info.id, acceptance);
        std::cout << format_result_line(res) << std::endl;
        all_pass = all_pass && res.pass;
        timings[std::to_string(info.id)] = res.timings;
        write_text_file(repro_dir + "/criterion_" + std::to_string(info.id) + ".json",
                        res.manifest.dump(2) + "\n");
      }
      write_text_file(repro_dir + "/timings.json", timings.dump(2) + "\n");
      return all_pass ? kFound : kNotRainbow;
    }
  } catch (const Unsupported& e) {
    if (e.reason() == Unsupported::Reason::kParity) {
      std::cout << "verdict: parity-refusal\nreason: " << e.what() << "\n";
      return kParity;
    }
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Inconclusive& e) {
    std::cout << "verdict: inconclusive\nreason: " << e.what() << "\n";
    return kInconclusiveBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kUsage;
}
