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

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace mlst {
namespace {

using Clock = std::chrono::steady_clock;

std::chrono::nanoseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                              start);
}

// Labels sorted by descending frequency, ties by ascending id.
std::vector<Label> frequency_order(const LabeledGraph& g) {
  std::vector<Label> order(g.label_count());
  for (Label c = 0; c < g.label_count(); ++c) order[c] = c;
  std::stable_sort(order.begin(), order.end(), [&](Label a, Label b) {
    return g.frequency(a) > g.frequency(b);
  });
  return order;
}

// Depth-first subset search. Frame k holds the labeling of the partial set
// made of the first k entries of `path_`; a frame branches on the labels at
// order positions >= `next`, so every subset is generated exactly once.
class BranchAndBound {
 public:
  BranchAndBound(const LabeledGraph& g, const AstarOptions& options,
                 ColorSet incumbent)
      : g_(g),
        options_(options),
        order_(frequency_order(g)),
        best_(std::move(incumbent)) {}

  SearchResult run() {
    const auto start = Clock::now();
    ComponentLabeling root(g_.vertex_count());
    if (enter(root)) frames_.push_back({std::move(root), 0});

    while (!frames_.empty()) {
      Frame& frame = frames_.back();
      const int size = static_cast<int>(path_.size());
      if (frame.next >= static_cast<int>(order_.size()) ||
          size >= best_size() - 1) {
        pop();
        continue;
      }
      const Label c = order_[frame.next++];
      const int comps = frame.labeling.component_count();

      if (size == best_size() - 2) {
        // Children are leaves: they can only matter by connecting the graph.
        if (options_.frequency_prune && g_.frequency(c) < comps - 1) {
          ++stats_.pruned_by_frequency;
          continue;
        }
        ++stats_.nodes_expanded;
        if (frame.labeling.count_with(g_, c) == 1) {
          path_.push_back(c);
          best_ = ColorSet(path_);
          path_.pop_back();
        } else {
          ++stats_.pruned_by_bound;
        }
        continue;
      }

      ComponentLabeling child = frame.labeling;
      child.add_label(g_, c);
      const int child_next = frame.next;
      path_.push_back(c);
      if (enter(child)) {
        if (options_.gain_bound && !gain_feasible(child, child_next)) {
          ++stats_.pruned_by_gain;
          path_.pop_back();
        } else {
          frames_.push_back({std::move(child), child_next});
        }
      } else {
        path_.pop_back();
      }
    }
    stats_.elapsed = since(start);
    return {best_, stats_};
  }

 private:
  struct Frame {
    ComponentLabeling labeling;
    int next = 0;
  };

  int best_size() const { return best_.size(); }

  void pop() {
    frames_.pop_back();
    if (!path_.empty()) path_.pop_back();
  }

  // The body of one visit to the current path. Returns true when the node
  // should branch.
  bool enter(const ComponentLabeling& labeling) {
    const int size = static_cast<int>(path_.size());
    if (size >= best_size()) {
      ++stats_.pruned_by_bound;
      return false;
    }
    ++stats_.nodes_expanded;
    if (labeling.component_count() == 1) {
      best_ = ColorSet(path_);
      return false;
    }
    if (size >= best_size() - 1) {
      ++stats_.pruned_by_bound;
      return false;
    }
    return true;
  }

  // Whether the labels at positions >= next can possibly finish the current
  // set within the remaining budget. Only meaningful with budget >= 2.
  bool gain_feasible(const ComponentLabeling& labeling, int next) {
    const int budget = best_size() - 1 - static_cast<int>(path_.size());
    if (budget < 2) return true;
    const int comps = labeling.component_count();
    gains_.clear();
    for (int p = next; p < static_cast<int>(order_.size()); ++p) {
      const int gain = comps - labeling.count_with(g_, order_[p]);
      if (gain > 0) gains_.push_back(gain);
    }
    const int take = std::min<int>(budget, gains_.size());
    std::partial_sort(gains_.begin(), gains_.begin() + take, gains_.end(),
                      std::greater<>());
    int total = 0;
    for (int i = 0; i < take; ++i) total += gains_[i];
    return total >= comps - 1;
  }

  const LabeledGraph& g_;
  const AstarOptions& options_;
  std::vector<Label> order_;
  ColorSet best_;
  std::vector<Label> path_;
  std::vector<Frame> frames_;
  std::vector<int> gains_;
  SearchStats stats_;
};

}  // namespace

SearchResult astar(const LabeledGraph& g, const AstarOptions& options) {
  const auto start = Clock::now();
  ColorSet incumbent;
  if (options.initial_upper_bound) {
    incumbent = *options.initial_upper_bound;
    if (!incumbent.valid_for(g.label_count()) ||
        component_count(g, incumbent) != 1) {
      throw InvalidUpperBound("initial upper bound " + incumbent.to_string() +
                              " is not feasible");
    }
  } else if (options.upper_bound_source == UpperBoundSource::kRevisedMvca) {
    incumbent = mvca_revised(g, TieBreak::kFirstFound, 0).colors;
  } else {
    incumbent = ColorSet::all(g.label_count());
  }
  SearchResult result = BranchAndBound(g, options, incumbent).run();
  result.stats.elapsed = since(start);
  return result;
}

PilotConfig PilotConfig::parse(std::string_view text) {
  PilotConfig config;
  if (text.starts_with("pilot:")) text.remove_prefix(6);
  while (!text.empty()) {
    const size_t comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view()
                                           : text.substr(comma + 1);
    const size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("pilot option without '=': " +
                                  std::string(item));
    }
    const std::string_view key = item.substr(0, eq);
    const std::string value(item.substr(eq + 1));
    if (key == "first") {
      if (value == "all") {
        config.first_stage = FirstStage::kAllLabels;
      } else if (value == "minimizers") {
        config.first_stage = FirstStage::kCompMinimizers;
      } else if (value.starts_with("frac")) {
        size_t used = 0;
        double f = 0.0;
        try {
          f = std::stod(value.substr(4), &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || used != value.size() - 4 || !(f > 0.0) || f > 1.0) {
          throw std::invalid_argument("pilot fraction must be in (0,1]: " +
                                      value);
        }
        config.first_stage = FirstStage::kTopFraction;
        config.fraction = f;
      } else {
        throw std::invalid_argument("unknown pilot first stage: " + value);
      }
    } else if (key == "rec") {
      if (value == "greedy") {
        config.recursion = Recursion::kSingleGreedy;
      } else if (value == "all") {
        config.recursion = Recursion::kAllMinimizers;
      } else {
        throw std::invalid_argument("unknown pilot recursion: " + value);
      }
    } else {
      throw std::invalid_argument("unknown pilot option: " + std::string(key));
    }
  }
  return config;
}

std::string PilotConfig::name() const {
  std::ostringstream out;
  out << "pilot:first=";
  switch (first_stage) {
    case FirstStage::kAllLabels:
      out << "all";
      break;
    case FirstStage::kCompMinimizers:
      out << "minimizers";
      break;
    case FirstStage::kTopFraction:
      out << "frac" << fraction;
      break;
  }
  out << ",rec="
      << (recursion == Recursion::kSingleGreedy ? "greedy" : "all");
  return out.str();
}

std::vector<Label> pilot_first_stage(const LabeledGraph& g,
                                     const PilotConfig& config) {
  switch (config.first_stage) {
    case PilotConfig::FirstStage::kAllLabels: {
      std::vector<Label> labels(g.label_count());
      for (Label c = 0; c < g.label_count(); ++c) labels[c] = c;
      return labels;
    }
    case PilotConfig::FirstStage::kTopFraction: {
      std::vector<Label> labels = frequency_order(g);
      // The epsilon keeps e.g. 0.3 * 20 from rounding up to 7.
      const int keep = std::clamp(
          static_cast<int>(std::ceil(config.fraction * g.label_count() - 1e-9)),
          1, g.label_count());
      labels.resize(keep);
      return labels;
    }
    case PilotConfig::FirstStage::kCompMinimizers: {
      const ComponentLabeling empty(g.vertex_count());
      return comp_minimizers(g, empty, ColorSet());
    }
  }
  return {};
}

SearchResult pilot(const LabeledGraph& g, const PilotConfig& config,
                   TieBreak tie, uint64_t seed) {
  const auto start = Clock::now();
  SearchStats stats;
  ColorSet best = ColorSet::all(g.label_count());
  if (g.vertex_count() == 1) best = ColorSet();
  Rng rng(seed);

  if (config.recursion == PilotConfig::Recursion::kSingleGreedy) {
    for (Label first : pilot_first_stage(g, config)) {
      ColorSet colors{first};
      ComponentLabeling labeling = restricted_components(g, colors);
      complete_greedy(g, colors, labeling, tie, &rng, nullptr);
      ++stats.nodes_expanded;
      if (colors.size() < best.size()) best = std::move(colors);
    }
  } else {
    // Every set reachable by Comp-minimising steps from a first-stage label.
    // A set's subtree only depends on the set itself and the incumbent size,
    // which never grows, so each set is expanded at most once.
    std::set<std::vector<Label>> visited;
    std::function<void(const ColorSet&, const ComponentLabeling&)> visit =
        [&](const ColorSet& colors, const ComponentLabeling& labeling) {
          if (colors.size() >= best.size()) {
            ++stats.pruned_by_bound;
            return;
          }
          if (!visited.insert(colors.labels()).second) return;
          ++stats.nodes_expanded;
          if (labeling.component_count() == 1) {
            best = colors;
            return;
          }
          if (colors.size() >= best.size() - 1) {
            ++stats.pruned_by_bound;
            return;
          }
          for (Label c : comp_minimizers(g, labeling, colors)) {
            ColorSet next = colors;
            next.insert(c);
            ComponentLabeling next_labeling = labeling;
            next_labeling.add_label(g, c);
            visit(next, next_labeling);
          }
        };
    for (Label first : pilot_first_stage(g, config)) {
      const ColorSet colors{first};
      visit(colors, restricted_components(g, colors));
    }
  }
  stats.elapsed = since(start);
  return {best, stats};
}

ColorSet brute_force(const LabeledGraph& g) {
  const int l = g.label_count();
  if (l > kBruteForceMaxLabels) {
    throw std::invalid_argument("brute_force: " + std::to_string(l) +
                                " labels exceeds the limit of " +
                                std::to_string(kBruteForceMaxLabels));
  }
  for (int k = 0; k <= l; ++k) {
    // Lexicographic k-combinations of [0, l).
    std::vector<Label> combo(k);
    for (int i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      const ColorSet colors(combo);
      if (component_count(g, colors) == 1) return colors;
      int i = k - 1;
      while (i >= 0 && combo[i] == l - k + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  }
  throw std::invalid_argument("brute_force: graph is disconnected");
}

}  // namespace mlst
