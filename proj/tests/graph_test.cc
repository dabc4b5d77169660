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

#include "mlst/graph.h"

#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "mlst/disjoint_set.h"
#include "test_support.h"

namespace mlst {
namespace {

using testing::bfs_component_count;
using testing::four_vertex_graph;
using testing::monochromatic_graph;
using testing::random_relaxed_graph;

constexpr Label kA = 0;
constexpr Label kB = 1;

bool is_spanning_tree(const LabeledGraph& g, const SpanningTree& t) {
  if (static_cast<int>(t.edges.size()) != g.vertex_count() - 1) return false;
  DisjointSet dsu(g.vertex_count());
  for (const Edge& e : t.edges) {
    if (!dsu.unite(e.u, e.v)) return false;  // cycle
  }
  return dsu.set_count() == 1;
}

void check_contiguous(const ComponentLabeling& labeling) {
  std::set<int> ids(labeling.component_of().begin(),
                    labeling.component_of().end());
  REQUIRE(static_cast<int>(ids.size()) == labeling.component_count());
  CHECK(*ids.begin() == 0);
  CHECK(*ids.rbegin() == labeling.component_count() - 1);
}

TEST_CASE("build_graph accepts the smallest connected instance") {
  const LabeledGraph g = build_graph(2, 1, {{0, 1, 0}});
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.label_count() == 1);
}

TEST_CASE("build_graph rejects bad input") {
  CHECK_THROWS_AS(build_graph(3, 1, {{0, 1, 0}}), InvalidGraph);
  CHECK_NOTHROW(build_graph(3, 1, {{0, 1, 0}}, Connectivity::kRelaxed));
  CHECK_THROWS_AS(build_graph(2, 1, {{0, 2, 0}}), InvalidGraph);
  CHECK_THROWS_AS(build_graph(2, 1, {{-1, 1, 0}}), InvalidGraph);
  CHECK_THROWS_AS(build_graph(2, 1, {{0, 1, 1}}), InvalidGraph);
  CHECK_THROWS_AS(build_graph(2, 1, {{1, 1, 0}, {0, 1, 0}}), InvalidGraph);
  CHECK_THROWS_AS(build_graph(0, 1, {}), InvalidGraph);
  CHECK_THROWS_AS(build_graph(2, 0, {}), InvalidGraph);
}

TEST_CASE("build_graph accepts parallel edges and the witness instance") {
  CHECK_NOTHROW(build_graph(2, 2, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}}));
  const LabeledGraph w = testing::witness_graph();
  CHECK(w.vertex_count() == 7);
  CHECK(w.label_count() == 3);
}

TEST_CASE("ColorSet keeps members sorted and unique") {
  ColorSet s{3, 1, 3, 0};
  CHECK(s.labels() == std::vector<Label>{0, 1, 3});
  CHECK(s.insert(2));
  CHECK_FALSE(s.insert(2));
  CHECK(s.erase(0));
  CHECK_FALSE(s.erase(0));
  CHECK(s.labels() == std::vector<Label>{1, 2, 3});
  CHECK(s.valid_for(4));
  CHECK_FALSE(s.valid_for(3));
  CHECK(ColorSet::all(3) == ColorSet{0, 1, 2});
  CHECK(s.to_string() == "{1,2,3}");
}

TEST_CASE("restricted_components on the four-vertex graph") {
  const LabeledGraph g = four_vertex_graph();
  CHECK(restricted_components(g, {}).component_count() == 4);
  CHECK(restricted_components(g, {kA, kB}).component_count() == 1);
  const ComponentLabeling a = restricted_components(g, {kA});
  CHECK(a.component_count() == 2);
  CHECK(a.component_of() == std::vector<int>{0, 0, 1, 1});
  CHECK(bfs_component_count(g, {kA}) == 2);
  check_contiguous(a);
}

TEST_CASE("components_with_extra") {
  const LabeledGraph g = four_vertex_graph();
  const ComponentLabeling empty = restricted_components(g, {});
  CHECK(components_with_extra(empty, g, kA) == 2);
  CHECK(components_with_extra(empty, g, kB) == 3);

  const ComponentLabeling full = restricted_components(g, {kA, kB});
  CHECK(components_with_extra(full, g, kA) == 1);

  // Edges of b sit inside the one component of {a, b}; a two-vertex a-edge
  // inside {b}'s component changes nothing either.
  const LabeledGraph g2 = build_graph(3, 2, {{0, 1, 1}, {1, 2, 1}, {0, 2, 0}});
  const ComponentLabeling b = restricted_components(g2, {1});
  CHECK(components_with_extra(b, g2, 0) == b.component_count());
}

TEST_CASE("add_label matches batch recomputation") {
  const LabeledGraph g = four_vertex_graph();
  ComponentLabeling labeling(g.vertex_count());
  labeling.add_label(g, kB);
  CHECK(labeling.component_count() == 3);
  CHECK(labeling.component_of() ==
        restricted_components(g, {kB}).component_of());
  labeling.add_label(g, kA);
  CHECK(labeling.component_count() == 1);
}

TEST_CASE("property: incremental count equals batch and BFS; monotone") {
  std::mt19937_64 rng(20260101);
  for (int trial = 0; trial < 300; ++trial) {
    const LabeledGraph g = random_relaxed_graph(rng);
    const int l = g.label_count();
    std::vector<Label> members;
    for (Label c = 0; c < l; ++c) {
      if (rng() % 2) members.push_back(c);
    }
    const ColorSet colors(members);
    const ComponentLabeling base = restricted_components(g, colors);
    check_contiguous(base);
    REQUIRE(base.component_count() == bfs_component_count(g, colors));
    // Purity: a second computation is identical.
    CHECK(restricted_components(g, colors).component_of() ==
          base.component_of());
    for (Label c = 0; c < l; ++c) {
      if (colors.contains(c)) continue;
      ColorSet extended = colors;
      extended.insert(c);
      const int incremental = components_with_extra(base, g, c);
      CHECK(incremental == restricted_components(g, extended).component_count());
      CHECK(incremental == bfs_component_count(g, extended));
      CHECK(incremental <= base.component_count());
    }
  }
}

TEST_CASE("spanning_tree") {
  const LabeledGraph two = build_graph(2, 1, {{0, 1, 0}});
  const SpanningTree t2 = spanning_tree(two, {0});
  REQUIRE(t2.edges.size() == 1);
  CHECK(t2.edges[0] == Edge{0, 1, 0});

  const LabeledGraph g = four_vertex_graph();
  const SpanningTree t = spanning_tree(g, {kA, kB});
  CHECK(t.edges.size() == 3);
  CHECK(is_spanning_tree(g, t));
  for (const Edge& e : t.edges) CHECK((e.label == kA || e.label == kB));

  CHECK_THROWS_AS(spanning_tree(g, {kA}), DisconnectedRestriction);
}

TEST_CASE("property: spanning_tree is a tree over the chosen labels") {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const LabeledGraph g = random_relaxed_graph(rng, 10, 5, 40);
    const ColorSet all = ColorSet::all(g.label_count());
    ColorSet colors;
    for (Label c = 0; c < g.label_count(); ++c) {
      if (rng() % 3) colors.insert(c);
    }
    if (component_count(g, colors) != 1) {
      CHECK_THROWS_AS(spanning_tree(g, colors), DisconnectedRestriction);
      continue;
    }
    const SpanningTree t = spanning_tree(g, colors);
    CHECK(is_spanning_tree(g, t));
    for (const Edge& e : t.edges) CHECK(colors.contains(e.label));
    // Deterministic for a fixed graph.
    CHECK(spanning_tree(g, colors).edges == t.edges);
    ++checked;
  }
  CHECK(checked > 20);
}

TEST_CASE("label_frequencies") {
  CHECK(label_frequencies(monochromatic_graph(5)) == std::vector<int>{5});
  CHECK(label_frequencies(four_vertex_graph()) == std::vector<int>{2, 1});
  const LabeledGraph empty = build_graph(3, 4, {}, Connectivity::kRelaxed);
  CHECK(label_frequencies(empty) == std::vector<int>{0, 0, 0, 0});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const LabeledGraph g = random_relaxed_graph(rng);
    const std::vector<int> f = label_frequencies(g);
    CHECK(std::accumulate(f.begin(), f.end(), 0) == g.edge_count());
  }
}

TEST_CASE("uncovered_gain") {
  const LabeledGraph g = four_vertex_graph();
  CHECK(uncovered_gain(g, std::vector<bool>(4, false), kA) == 4);
  CHECK(uncovered_gain(g, std::vector<bool>(4, false), kB) == 2);
  CHECK(uncovered_gain(g, std::vector<bool>(4, true), kA) == 0);
  CHECK(uncovered_gain(g, {true, true, false, false}, kA) == 2);
}

}  // namespace
}  // namespace mlst
