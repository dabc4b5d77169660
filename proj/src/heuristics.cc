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

#include "mlst/heuristics.h"

#include <limits>
#include <stdexcept>
#include <utility>

namespace mlst {
namespace {

using Clock = std::chrono::steady_clock;

void finish(const LabeledGraph& g, SolveResult& result, Clock::time_point start) {
  result.feasible = component_count(g, result.colors) == 1;
  result.objective = result.colors.size();
  if (result.feasible) result.tree = spanning_tree(g, result.colors);
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      Clock::now() - start);
}

}  // namespace

std::string Variant::name() const {
  if (random_first_color) return post_optimize ? "A12" : "A2";
  return post_optimize ? "A1" : "A";
}

std::vector<Label> comp_minimizers(const LabeledGraph& g,
                                   const ComponentLabeling& labeling,
                                   const ColorSet& colors,
                                   int* min_components) {
  std::vector<Label> best;
  int best_count = std::numeric_limits<int>::max();
  auto member = colors.begin();
  for (Label c = 0; c < g.label_count(); ++c) {
    if (member != colors.end() && *member == c) {
      ++member;
      continue;
    }
    const int count = labeling.count_with(g, c);
    if (count < best_count) {
      best_count = count;
      best.clear();
    }
    if (count == best_count) best.push_back(c);
  }
  if (min_components) *min_components = best_count;
  return best;
}

void complete_greedy(const LabeledGraph& g, ColorSet& colors,
                     ComponentLabeling& labeling, TieBreak tie, Rng* rng,
                     std::vector<TraceStep>* trace) {
  if (tie == TieBreak::kUniformRandom && rng == nullptr) {
    throw std::invalid_argument("uniform tie-breaking needs a random source");
  }
  while (labeling.component_count() > 1) {
    const std::vector<Label> candidates = comp_minimizers(g, labeling, colors);
    if (candidates.empty()) break;  // every label already used
    Label pick = candidates.front();
    if (tie == TieBreak::kUniformRandom && candidates.size() > 1) {
      pick = candidates[uniform_index(*rng, static_cast<int>(candidates.size()))];
    }
    colors.insert(pick);
    labeling.add_label(g, pick);
    if (trace) trace->push_back({pick, labeling.component_count()});
  }
}

SolveResult mvca_original(const LabeledGraph& g) {
  const auto start = Clock::now();
  SolveResult result;
  const int n = g.vertex_count();
  std::vector<bool> covered(n, false);
  int uncovered = n;
  ComponentLabeling labeling(n);

  // Stops once nothing is left to cover or no label covers anything new. On
  // a connected graph the second case cannot arise while vertices remain
  // uncovered, but the guard keeps the loop finite for relaxed inputs.
  while (uncovered > 0) {
    int best_gain = 0;
    Label best = -1;
    for (Label c = 0; c < g.label_count(); ++c) {
      if (result.colors.contains(c)) continue;
      const int gain = uncovered_gain(g, covered, c);
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best < 0) break;
    result.colors.insert(best);
    for (int idx : g.edges_with_label(best)) {
      for (Vertex x : {g.edges()[idx].u, g.edges()[idx].v}) {
        if (!covered[x]) {
          covered[x] = true;
          --uncovered;
        }
      }
    }
    labeling.add_label(g, best);
    result.trace.push_back({best, labeling.component_count()});
  }
  finish(g, result, start);
  return result;
}

SolveResult mvca_revised(const LabeledGraph& g, TieBreak tie, uint64_t seed) {
  if (tie == TieBreak::kUniformRandom) {
    return solve_variant(g, Variant::A(), seed);
  }
  const auto start = Clock::now();
  SolveResult result;
  result.seed = seed;
  ComponentLabeling labeling(g.vertex_count());
  complete_greedy(g, result.colors, labeling, TieBreak::kFirstFound, nullptr,
                  &result.trace);
  finish(g, result, start);
  return result;
}

ColorSet post_optimize(const LabeledGraph& g, ColorSet colors) {
  if (component_count(g, colors) != 1) {
    throw std::invalid_argument("post_optimize: labels " + colors.to_string() +
                                " do not connect the graph");
  }
  bool removed = true;
  while (removed) {
    removed = false;
    for (Label c : colors) {
      ColorSet trial = colors;
      trial.erase(c);
      if (component_count(g, trial) == 1) {
        colors = std::move(trial);
        removed = true;
        break;
      }
    }
  }
  return colors;
}

SolveResult solve_variant(const LabeledGraph& g, Variant variant,
                          uint64_t seed) {
  const auto start = Clock::now();
  SolveResult result;
  result.seed = seed;
  Rng rng(seed);
  ComponentLabeling labeling(g.vertex_count());

  if (variant.random_first_color) {
    const Label first = uniform_index(rng, g.label_count());
    result.colors.insert(first);
    labeling.add_label(g, first);
    result.trace.push_back({first, labeling.component_count()});
  }
  complete_greedy(g, result.colors, labeling, TieBreak::kUniformRandom, &rng,
                  &result.trace);
  if (variant.post_optimize && labeling.component_count() == 1) {
    result.colors = post_optimize(g, std::move(result.colors));
  }
  finish(g, result, start);
  return result;
}

}  // namespace mlst
