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

// Constructive heuristics for the minimum labelling spanning tree problem.
//
//  * mvca_original: the maximum vertex covering greedy. Adds the label that
//    covers most uncovered vertices; can stall on a disconnected subgraph.
//  * mvca_revised: adds the label minimising Comp(C ∪ {c}) until the
//    restricted subgraph is connected. Always feasible.
//  * solve_variant: the randomised revised greedy with two optional steps, a
//    uniformly random first label and a post-optimisation pass that drops
//    redundant labels. The four combinations are the variants A, A1, A2, A12.

#ifndef MLST_HEURISTICS_H_
#define MLST_HEURISTICS_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlst/graph.h"
#include "mlst/rng.h"

namespace mlst {

enum class TieBreak { kFirstFound, kUniformRandom };

struct Variant {
  bool random_first_color = false;
  bool post_optimize = false;

  static constexpr Variant A() { return {false, false}; }
  static constexpr Variant A1() { return {false, true}; }
  static constexpr Variant A2() { return {true, false}; }
  static constexpr Variant A12() { return {true, true}; }

  // "A", "A1", "A2" or "A12".
  std::string name() const;

  friend bool operator==(const Variant&, const Variant&) = default;
};

struct TraceStep {
  Label label = 0;
  int components_after = 0;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct SolveResult {
  ColorSet colors;
  bool feasible = false;
  std::optional<SpanningTree> tree;
  int objective = 0;
  uint64_t seed = 0;
  std::chrono::nanoseconds elapsed{0};
  // Labels in the order the construction added them, each with Comp after
  // the addition. Post-optimisation removals are not part of the trace.
  std::vector<TraceStep> trace;
};

SolveResult mvca_original(const LabeledGraph& g);

// With kFirstFound ties go to the lowest label id and the seed is unused.
// With kUniformRandom the run is identical to solve_variant(g, A(), seed).
SolveResult mvca_revised(const LabeledGraph& g, TieBreak tie, uint64_t seed);

// Repeatedly drops the lowest-id label whose removal keeps the restricted
// subgraph connected. The result is inclusion-minimal. Throws
// std::invalid_argument if Comp(colors) > 1.
ColorSet post_optimize(const LabeledGraph& g, ColorSet colors);

SolveResult solve_variant(const LabeledGraph& g, Variant variant,
                          uint64_t seed);

// Labels outside `colors` achieving the minimum Comp(C ∪ {c}), in ascending
// id order. `labeling` must describe `colors`. Stores the minimum in
// *min_components when non-null.
std::vector<Label> comp_minimizers(const LabeledGraph& g,
                                   const ComponentLabeling& labeling,
                                   const ColorSet& colors,
                                   int* min_components = nullptr);

// Extends `colors` with the revised greedy rule until Comp = 1. `rng` is
// required for kUniformRandom. Appends to `trace` when non-null.
void complete_greedy(const LabeledGraph& g, ColorSet& colors,
                     ComponentLabeling& labeling, TieBreak tie, Rng* rng,
                     std::vector<TraceStep>* trace);

}  // namespace mlst

#endif  // MLST_HEURISTICS_H_
