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

// Search over label subsets: the exact depth-first branch-and-bound ("A*"),
// the pilot-method family built on the same skeleton, and a brute-force
// enumerator kept as a test oracle.

#ifndef MLST_EXACT_H_
#define MLST_EXACT_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mlst/graph.h"
#include "mlst/heuristics.h"

namespace mlst {

struct SearchStats {
  // Subsets C whose Comp(C) was evaluated.
  int64_t nodes_expanded = 0;
  // Subsets that were cut because they cannot beat the incumbent by size.
  int64_t pruned_by_bound = 0;
  // Final-level labels skipped because their frequency is below Comp(C) - 1.
  int64_t pruned_by_frequency = 0;
  // Subtrees cut by the component-reduction bound (see AstarOptions).
  int64_t pruned_by_gain = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct SearchResult {
  ColorSet colors;
  SearchStats stats;
};

enum class UpperBoundSource { kNone, kRevisedMvca };

struct AstarOptions {
  // Feasible starting incumbent. Overrides upper_bound_source when set.
  std::optional<ColorSet> initial_upper_bound;
  // kNone starts from the full label set.
  UpperBoundSource upper_bound_source = UpperBoundSource::kRevisedMvca;
  // When a partial set C has |C| = |C*| - 2, only a label with at least
  // Comp(C) - 1 edges can finish it.
  bool frequency_prune = true;
  // Each label can lower the component count by at most its reduction
  // against the current set (the graphic-matroid rank is submodular), so a
  // subtree is dropped when the r largest reductions among its candidate
  // labels cannot bring Comp(C) down to 1, r being the labels still
  // affordable. Applied where r >= 2; r = 1 is the leaf level.
  bool gain_bound = true;
};

// Thrown for an infeasible initial_upper_bound.
class InvalidUpperBound : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Optimal label set. Branches over labels in descending frequency (ties by
// ascending id), each subset visited once.
SearchResult astar(const LabeledGraph& g, const AstarOptions& options = {});

struct PilotConfig {
  enum class FirstStage { kAllLabels, kTopFraction, kCompMinimizers };
  enum class Recursion { kSingleGreedy, kAllMinimizers };

  FirstStage first_stage = FirstStage::kAllLabels;
  // Used by kTopFraction: the ceil(fraction * l) most frequent labels.
  double fraction = 1.0;
  Recursion recursion = Recursion::kSingleGreedy;

  // Parses "first=<all|minimizers|frac<f>>,rec=<greedy|all>"; either key may
  // be omitted (defaults all, greedy). Throws std::invalid_argument.
  static PilotConfig parse(std::string_view text);
  // Inverse of parse, prefixed with "pilot:".
  std::string name() const;

  friend bool operator==(const PilotConfig&, const PilotConfig&) = default;
};

// Labels tried as the first move, in the order they are tried.
std::vector<Label> pilot_first_stage(const LabeledGraph& g,
                                     const PilotConfig& config);

// Tries every first-stage label and completes it with the revised greedy,
// either once (kSingleGreedy, using `tie`) or along every Comp-minimising
// branch (kAllMinimizers, tie and seed unused). Keeps the smallest result;
// the first label tried wins ties.
SearchResult pilot(const LabeledGraph& g, const PilotConfig& config,
                   TieBreak tie = TieBreak::kFirstFound, uint64_t seed = 0);

inline constexpr int kBruteForceMaxLabels = 20;

// Smallest feasible label set by enumeration in ascending cardinality,
// lexicographically first among equals. Throws std::invalid_argument when
// the graph has more than kBruteForceMaxLabels labels.
ColorSet brute_force(const LabeledGraph& g);

}  // namespace mlst

#endif  // MLST_EXACT_H_
