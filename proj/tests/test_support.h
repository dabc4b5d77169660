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

// Fixtures and independent oracles shared by the test binaries.

#ifndef MLST_TESTS_TEST_SUPPORT_H_
#define MLST_TESTS_TEST_SUPPORT_H_

#include <cstdint>
#include <queue>
#include <random>
#include <vector>

#include "mlst/graph.h"
#include "mlst/instances.h"

namespace mlst::testing {

// Greedy-trap witness, labels 0..2. Found by exhaustive search over random
// 7-vertex, 3-label graphs with a brute-force optimum:
//  * max-coverage greedy takes 0 (5 new vertices) then 2 and stalls with
//    two components;
//  * the component-minimising greedy takes 0, 2 (Comp 2), then 1;
//  * the optimum is {1, 2}, and dropping 0 from {0, 1, 2} keeps it connected.
inline LabeledGraph witness_graph() {
  return build_graph(7, 3,
                     {{0, 2, 2},
                      {0, 4, 2},
                      {0, 5, 2},
                      {1, 3, 1},
                      {1, 6, 0},
                      {2, 4, 0},
                      {2, 6, 1},
                      {3, 4, 0},
                      {3, 6, 1}});
}

// Path 0-1-2-3 with labels a=0, b=1: {(0,1,a), (2,3,a), (1,2,b)}.
inline LabeledGraph four_vertex_graph() {
  return build_graph(4, 2, {{0, 1, 0}, {2, 3, 0}, {1, 2, 1}});
}

// A connected graph whose every edge has label 0.
inline LabeledGraph monochromatic_graph(int n = 6) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({v - 1, v, 0});
  edges.push_back({0, n - 1, 0});
  return build_graph(n, 1, edges);
}

// Comp(C) by breadth-first search over an adjacency list, sharing no code
// with the union-find path in the library.
inline int bfs_component_count(const LabeledGraph& g, const ColorSet& colors) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    bool in = false;
    for (Label c : colors.labels()) in = in || c == e.label;
    if (!in) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n, false);
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      const int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (!seen[y]) {
          seen[y] = true;
          q.push(y);
        }
      }
    }
  }
  return components;
}

// Optimum size by enumerating all 2^l subsets with the BFS oracle.
inline int enumerate_optimum(const LabeledGraph& g) {
  const int l = g.label_count();
  int best = l + 1;
  for (uint32_t mask = 0; mask < (1u << l); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<Label> labels;
    for (int c = 0; c < l; ++c) {
      if (mask >> c & 1u) labels.push_back(c);
    }
    if (bfs_component_count(g, ColorSet(labels)) == 1) best = size;
  }
  return best;
}

// Arbitrary labelled graph (possibly disconnected, parallel edges allowed).
inline LabeledGraph random_relaxed_graph(std::mt19937_64& rng, int max_n = 12,
                                         int max_l = 6, int max_m = 30) {
  const int n = std::uniform_int_distribution<int>(2, max_n)(rng);
  const int l = std::uniform_int_distribution<int>(1, max_l)(rng);
  const int m = std::uniform_int_distribution<int>(0, max_m)(rng);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int v = std::uniform_int_distribution<int>(0, n - 2)(rng);
    if (v >= u) ++v;
    edges.push_back({u, v, std::uniform_int_distribution<int>(0, l - 1)(rng)});
  }
  return build_graph(n, l, edges, Connectivity::kRelaxed);
}

// Small connected instances from the generator: n in [4,10], l in [3,8],
// d in {0.2, 0.5, 0.8}; specs whose edge count cannot connect n vertices
// are redrawn.
inline std::vector<LabeledGraph> small_oracle_instances(int count,
                                                        uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double densities[] = {0.2, 0.5, 0.8};
  std::vector<LabeledGraph> out;
  while (static_cast<int>(out.size()) < count) {
    InstanceSpec spec;
    spec.n = std::uniform_int_distribution<int>(4, 10)(rng);
    spec.l = std::uniform_int_distribution<int>(3, 8)(rng);
    spec.density = densities[std::uniform_int_distribution<int>(0, 2)(rng)];
    spec.seed = rng();
    if (edge_count_for(spec.n, spec.density) < spec.n - 1) continue;
    out.push_back(generate(spec));
  }
  return out;
}

}  // namespace mlst::testing

#endif  // MLST_TESTS_TEST_SUPPORT_H_
