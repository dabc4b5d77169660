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

// Edge-labelled graphs and the connectivity queries every solver is built on.
//
// A solution to the minimum labelling spanning tree problem is a ColorSet:
// the set of labels whose edges, taken together, connect every vertex. The
// number of connected components of that restricted subgraph, Comp(C), drives
// both the greedy rules and the exact search, so it is computed here in two
// flavours: from scratch for an arbitrary set, and incrementally for "the
// current set plus one more label".

#ifndef MLST_GRAPH_H_
#define MLST_GRAPH_H_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlst {

using Vertex = int32_t;
using Label = int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Label label = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Malformed graph input: out-of-range ids, self-loops, or a disconnected
// graph where a connected one is required.
class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A spanning tree was requested for a label set whose edges do not connect
// the graph.
class DisconnectedRestriction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Connectivity { kRequired, kRelaxed };

// Immutable undirected multigraph whose every edge carries one label in
// [0, label_count). Parallel edges are allowed.
class LabeledGraph {
 public:
  int vertex_count() const { return vertex_count_; }
  int label_count() const { return label_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const { return edges_; }

  // Indices into edges() of the edges carrying label c, in ascending order.
  std::span<const int> edges_with_label(Label c) const {
    return std::span<const int>(by_label_).subspan(
        label_offset_[c], label_offset_[c + 1] - label_offset_[c]);
  }

  int frequency(Label c) const {
    return label_offset_[c + 1] - label_offset_[c];
  }

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertex_count_ == b.vertex_count_ &&
           a.label_count_ == b.label_count_ && a.edges_ == b.edges_;
  }

 private:
  friend LabeledGraph build_graph(int, int, std::vector<Edge>, Connectivity);

  LabeledGraph() = default;

  int vertex_count_ = 0;
  int label_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> by_label_;
  std::vector<int> label_offset_;
};

// Validates and indexes a graph. Throws InvalidGraph on out-of-range ids,
// self-loops, n < 1, l < 1, or (with kRequired) a disconnected graph.
LabeledGraph build_graph(int vertex_count, int label_count,
                         std::vector<Edge> edges,
                         Connectivity connectivity = Connectivity::kRequired);

// A set of labels, kept sorted and duplicate-free.
class ColorSet {
 public:
  ColorSet() = default;
  ColorSet(std::initializer_list<Label> labels);
  explicit ColorSet(std::vector<Label> labels);

  // {0, 1, ..., label_count - 1}
  static ColorSet all(int label_count);

  bool contains(Label c) const;
  // Returns false when c was already present.
  bool insert(Label c);
  // Returns false when c was absent.
  bool erase(Label c);

  int size() const { return static_cast<int>(labels_.size()); }
  bool empty() const { return labels_.empty(); }
  const std::vector<Label>& labels() const { return labels_; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }

  // True when every member is a valid label of a graph with label_count labels.
  bool valid_for(int label_count) const;

  std::string to_string() const;

  friend bool operator==(const ColorSet&, const ColorSet&) = default;
  friend auto operator<=>(const ColorSet&, const ColorSet&) = default;

 private:
  std::vector<Label> labels_;
};

// Per-vertex component ids of the subgraph H = (V, E(C)) for some label set
// C, plus a union-find view that supports merging in one more label.
//
// Ids are contiguous in [0, component_count()) and are renumbered in order of
// first appearance by vertex after every change, so identical inputs produce
// identical labelings.
//
// count_with() reuses an internal scratch buffer: a labeling must not be
// queried from two threads at once.
class ComponentLabeling {
 public:
  // Every vertex in its own component.
  explicit ComponentLabeling(int vertex_count);

  const std::vector<int>& component_of() const { return component_of_; }
  int component_count() const { return component_count_; }

  // Comp(C ∪ {c}) where C is the set this labeling was built from. Touches
  // only the edges of label c.
  int count_with(const LabeledGraph& g, Label c) const;

  // Merges the edges of label c into the labeling.
  void add_label(const LabeledGraph& g, Label c);

 private:
  friend ComponentLabeling restricted_components(const LabeledGraph&,
                                                 const ColorSet&);

  int find_scratch(int x) const;

  std::vector<int> component_of_;
  int component_count_ = 0;
  mutable std::vector<int> scratch_parent_;
  mutable std::vector<int> scratch_touched_;
};

// Labeling of H = (V, E(C)). C must be valid for g.
ComponentLabeling restricted_components(const LabeledGraph& g,
                                        const ColorSet& colors);

// Comp(C ∪ {c}) given the labeling of C; equal to
// restricted_components(g, C ∪ {c}).component_count().
int components_with_extra(const ComponentLabeling& base, const LabeledGraph& g,
                          Label c);

// Shorthand for restricted_components(g, colors).component_count().
int component_count(const LabeledGraph& g, const ColorSet& colors);

struct SpanningTree {
  std::vector<Edge> edges;
};

// A spanning tree of H = (V, E(C)), built by scanning edges in input order
// and keeping each one that joins two components. Throws
// DisconnectedRestriction when Comp(C) > 1.
SpanningTree spanning_tree(const LabeledGraph& g, const ColorSet& colors);

// frequency[c] = number of edges labelled c.
std::vector<int> label_frequencies(const LabeledGraph& g);

// Number of distinct vertices touched by a c-labelled edge that are not yet
// marked in `covered` (indexed by vertex).
int uncovered_gain(const LabeledGraph& g, const std::vector<bool>& covered,
                   Label c);

}  // namespace mlst

#endif  // MLST_GRAPH_H_
