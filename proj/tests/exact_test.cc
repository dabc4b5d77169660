// Copyright 2026 The MLST Solver Authors
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

#include "mlst/exact.h"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mlst/instances.h"
#include "test_support.h"

namespace mlst {
namespace {

using testing::enumerate_optimum;
using testing::four_vertex_graph;
using testing::monochromatic_graph;
using testing::witness_graph;

const std::vector<LabeledGraph>& oracle_instances() {
  static const std::vector<LabeledGraph> instances =
      testing::small_oracle_instances(200, 2026);
  return instances;
}

PilotConfig config(PilotConfig::FirstStage first, PilotConfig::Recursion rec,
                   double fraction = 1.0) {
  PilotConfig c;
  c.first_stage = first;
  c.recursion = rec;
  c.fraction = fraction;
  return c;
}

TEST_CASE("astar examples") {
  CHECK(astar(monochromatic_graph()).colors == ColorSet{0});
  CHECK(astar(four_vertex_graph()).colors == ColorSet{0, 1});
  CHECK(astar(witness_graph()).colors.size() == 2);
  CHECK(component_count(witness_graph(), astar(witness_graph()).colors) == 1);
}

TEST_CASE("astar on n=l=20, d=0.8 gives 2 or 3") {
  for (int i = 1; i <= 10; ++i) {
    const LabeledGraph g = generate({20, 20, 0.8, class_seed(1, 20, 20, 0.8, i), i});
    const int objective = static_cast<int>(astar(g).colors.size());
    CHECK(objective >= 2);
    CHECK(objective <= 3);
  }
}

TEST_CASE("brute_force") {
  CHECK(brute_force(monochromatic_graph()) == ColorSet{0});
  CHECK(brute_force(four_vertex_graph()) == ColorSet{0, 1});
  CHECK(brute_force(witness_graph()) == ColorSet{1, 2});
  const LabeledGraph wide = build_graph(2, kBruteForceMaxLabels + 1,
                                        {{0, 1, kBruteForceMaxLabels}});
  CHECK_THROWS_AS(brute_force(wide), std::invalid_argument);
  CHECK(astar(wide).colors == ColorSet{kBruteForceMaxLabels});
}

TEST_CASE("property: astar equals both oracles") {
  for (const LabeledGraph& g : oracle_instances()) {
    const ColorSet exact = astar(g).colors;
    const ColorSet oracle = brute_force(g);
    CHECK(component_count(g, exact) == 1);
    CHECK(exact.size() == oracle.size());
    CHECK(static_cast<int>(oracle.size()) == enumerate_optimum(g));
  }
}

TEST_CASE("property: prunes and upper bounds do not change the optimum") {
  for (const LabeledGraph& g : oracle_instances()) {
    const std::size_t opt = astar(g).colors.size();
    AstarOptions plain;
    plain.frequency_prune = false;
    plain.gain_bound = false;
    plain.upper_bound_source = UpperBoundSource::kNone;
    CHECK(astar(g, plain).colors.size() == opt);

    AstarOptions no_freq;
    no_freq.frequency_prune = false;
    CHECK(astar(g, no_freq).colors.size() == opt);

    AstarOptions from_all;
    from_all.initial_upper_bound = ColorSet::all(g.label_count());
    CHECK(astar(g, from_all).colors.size() == opt);

    AstarOptions from_opt;
    from_opt.initial_upper_bound = brute_force(g);
    CHECK(astar(g, from_opt).colors.size() == opt);
  }
}

TEST_CASE("astar rejects an infeasible upper bound") {
  AstarOptions options;
  options.initial_upper_bound = ColorSet{0};
  CHECK_THROWS_AS(astar(four_vertex_graph(), options), InvalidUpperBound);
}

TEST_CASE("search statistics") {
  const LabeledGraph g = generate({20, 20, 0.5, 7, 1});
  AstarOptions none;
  none.upper_bound_source = UpperBoundSource::kNone;
  none.gain_bound = false;
  const SearchStats without = astar(g, none).stats;
  AstarOptions heuristic = none;
  heuristic.upper_bound_source = UpperBoundSource::kRevisedMvca;
  const SearchStats with = astar(g, heuristic).stats;
  CHECK(with.nodes_expanded > 0);
  CHECK(with.nodes_expanded <= without.nodes_expanded);
  CHECK(with.pruned_by_bound >= 0);
  CHECK(with.pruned_by_frequency >= 0);
  CHECK(with.pruned_by_gain == 0);
  AstarOptions gain = heuristic;
  gain.gain_bound = true;
  CHECK(astar(g, gain).stats.nodes_expanded <= with.nodes_expanded);
}

TEST_CASE("PilotConfig parse and name") {
  using FS = PilotConfig::FirstStage;
  using R = PilotConfig::Recursion;
  CHECK(PilotConfig::parse("") == config(FS::kAllLabels, R::kSingleGreedy));
  CHECK(PilotConfig::parse("first=frac0.1,rec=all") ==
        config(FS::kTopFraction, R::kAllMinimizers, 0.1));
  CHECK(PilotConfig::parse("rec=all") == config(FS::kAllLabels, R::kAllMinimizers));
  CHECK(PilotConfig::parse("first=minimizers") ==
        config(FS::kCompMinimizers, R::kSingleGreedy));
  CHECK(PilotConfig::parse("first=frac0.3,rec=greedy").name() ==
        "pilot:first=frac0.3,rec=greedy");
  CHECK_THROWS_AS(PilotConfig::parse("first=bogus"), std::invalid_argument);
  CHECK_THROWS_AS(PilotConfig::parse("first=frac0"), std::invalid_argument);
  CHECK_THROWS_AS(PilotConfig::parse("first=frac1.5"), std::invalid_argument);
  CHECK_THROWS_AS(PilotConfig::parse("rec=some"), std::invalid_argument);
}

TEST_CASE("pilot_first_stage") {
  using FS = PilotConfig::FirstStage;
  using R = PilotConfig::Recursion;
  // Frequencies 3, 1, 3, 2 over labels 0..3.
  const LabeledGraph g = build_graph(
      5, 4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 0}, {3, 4, 1}, {0, 2, 2},
             {1, 3, 2}, {2, 4, 2}, {0, 4, 3}, {0, 3, 3}});
  CHECK(pilot_first_stage(g, config(FS::kAllLabels, R::kSingleGreedy)) ==
        std::vector<Label>{0, 1, 2, 3});
  CHECK(pilot_first_stage(g, config(FS::kTopFraction, R::kSingleGreedy, 0.5)) ==
        std::vector<Label>{0, 2});
  // ceil(0.1 * 4) = 1; the frequency tie goes to the lower id.
  CHECK(pilot_first_stage(g, config(FS::kTopFraction, R::kSingleGreedy, 0.1)) ==
        std::vector<Label>{0});
  CHECK(pilot_first_stage(g, config(FS::kTopFraction, R::kSingleGreedy, 0.75)) ==
        std::vector<Label>{0, 2, 3});
  const std::vector<Label> minimizers =
      pilot_first_stage(g, config(FS::kCompMinimizers, R::kSingleGreedy));
  CHECK_FALSE(minimizers.empty());
  for (Label c : minimizers) {
    CHECK(component_count(g, {c}) == component_count(g, {0}));
  }
}

TEST_CASE("pilot examples") {
  using FS = PilotConfig::FirstStage;
  using R = PilotConfig::Recursion;
  for (FS first : {FS::kAllLabels, FS::kTopFraction, FS::kCompMinimizers}) {
    for (R rec : {R::kSingleGreedy, R::kAllMinimizers}) {
      CHECK(pilot(monochromatic_graph(), config(first, rec, 0.3)).colors ==
            ColorSet{0});
    }
  }
  CHECK(pilot(witness_graph(), config(FS::kAllLabels, R::kSingleGreedy))
            .colors.size() == 2);
}

TEST_CASE("property: pilot bounds") {
  using FS = PilotConfig::FirstStage;
  using R = PilotConfig::Recursion;
  for (const LabeledGraph& g : oracle_instances()) {
    const std::size_t opt = brute_force(g).size();
    const ColorSet all_all = pilot(g, config(FS::kAllLabels, R::kAllMinimizers)).colors;
    const ColorSet min_all =
        pilot(g, config(FS::kCompMinimizers, R::kAllMinimizers)).colors;
    const ColorSet single = pilot(g, config(FS::kAllLabels, R::kSingleGreedy)).colors;
    const ColorSet tenth =
        pilot(g, config(FS::kTopFraction, R::kSingleGreedy, 0.1)).colors;
    for (const ColorSet* c : {&all_all, &min_all, &single, &tenth}) {
      CHECK(component_count(g, *c) == 1);
      CHECK(c->size() >= opt);
    }
    CHECK(all_all.size() <= min_all.size());
    CHECK(all_all.size() <= single.size());
  }
}

}  // namespace
}  // namespace mlst
