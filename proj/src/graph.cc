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

#include <algorithm>
#include <sstream>
#include <utility>

#include "mlst/disjoint_set.h"

namespace mlst {

LabeledGraph build_graph(int vertex_count, int label_count,
                         std::vector<Edge> edges, Connectivity connectivity) {
  if (vertex_count < 1) throw InvalidGraph("vertex count must be positive");
  if (label_count < 1) throw InvalidGraph("label count must be positive");

  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count) {
      throw InvalidGraph("edge " + std::to_string(i) +
                         ": endpoint out of range");
    }
    if (e.label < 0 || e.label >= label_count) {
      throw InvalidGraph("edge " + std::to_string(i) + ": label out of range");
    }
    if (e.u == e.v) {
      throw InvalidGraph("edge " + std::to_string(i) + ": self-loop");
    }
  }

  LabeledGraph g;
  g.vertex_count_ = vertex_count;
  g.label_count_ = label_count;
  g.edges_ = std::move(edges);

  // Counting sort of edge indices by label.
  g.label_offset_.assign(label_count + 1, 0);
  for (const Edge& e : g.edges_) ++g.label_offset_[e.label + 1];
  for (int c = 0; c < label_count; ++c) {
    g.label_offset_[c + 1] += g.label_offset_[c];
  }
  g.by_label_.resize(g.edges_.size());
  std::vector<int> cursor(g.label_offset_.begin(), g.label_offset_.end() - 1);
  for (int i = 0; i < g.edge_count(); ++i) {
    g.by_label_[cursor[g.edges_[i].label]++] = i;
  }

  if (connectivity == Connectivity::kRequired) {
    DisjointSet dsu(vertex_count);
    for (const Edge& e : g.edges_) dsu.unite(e.u, e.v);
    if (dsu.set_count() != 1) {
      throw InvalidGraph("graph is disconnected (" +
                         std::to_string(dsu.set_count()) + " components)");
    }
  }
  return g;
}

ColorSet::ColorSet(std::initializer_list<Label> labels)
    : ColorSet(std::vector<Label>(labels)) {}

ColorSet::ColorSet(std::vector<Label> labels) : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
}

ColorSet ColorSet::all(int label_count) {
  ColorSet s;
  s.labels_.resize(label_count);
  for (int c = 0; c < label_count; ++c) s.labels_[c] = c;
  return s;
}

bool ColorSet::contains(Label c) const {
  return std::binary_search(labels_.begin(), labels_.end(), c);
}

bool ColorSet::insert(Label c) {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), c);
  if (it != labels_.end() && *it == c) return false;
  labels_.insert(it, c);
  return true;
}

bool ColorSet::erase(Label c) {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), c);
  if (it == labels_.end() || *it != c) return false;
  labels_.erase(it);
  return true;
}

bool ColorSet::valid_for(int label_count) const {
  return labels_.empty() ||
         (labels_.front() >= 0 && labels_.back() < label_count);
}

std::string ColorSet::to_string() const {
  std::ostringstream out;
  out << '{';
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (i) out << ',';
    out << labels_[i];
  }
  out << '}';
  return out.str();
}

ComponentLabeling::ComponentLabeling(int vertex_count)
    : component_of_(vertex_count), component_count_(vertex_count) {
  for (int v = 0; v < vertex_count; ++v) component_of_[v] = v;
}

int ComponentLabeling::find_scratch(int x) const {
  while (scratch_parent_[x] != x) {
    scratch_parent_[x] = scratch_parent_[scratch_parent_[x]];
    x = scratch_parent_[x];
  }
  return x;
}

int ComponentLabeling::count_with(const LabeledGraph& g, Label c) const {
  if (component_count_ <= 1) return component_count_;
  if (static_cast<int>(scratch_parent_.size()) < component_count_) {
    const int old = static_cast<int>(scratch_parent_.size());
    scratch_parent_.resize(component_count_);
    for (int i = old; i < component_count_; ++i) scratch_parent_[i] = i;
  }
  int merges = 0;
  const auto edges = g.edges();
  for (int idx : g.edges_with_label(c)) {
    const int a = component_of_[edges[idx].u];
    const int b = component_of_[edges[idx].v];
    if (a == b) continue;
    const int ra = find_scratch(a);
    const int rb = find_scratch(b);
    if (ra == rb) continue;
    scratch_parent_[rb] = ra;
    scratch_touched_.push_back(rb);
    ++merges;
  }
  // Only roots that were re-parented need restoring; path halving only ever
  // rewrites those same entries.
  for (int x : scratch_touched_) scratch_parent_[x] = x;
  scratch_touched_.clear();
  return component_count_ - merges;
}

void ComponentLabeling::add_label(const LabeledGraph& g, Label c) {
  DisjointSet dsu(component_count_);
  const auto edges = g.edges();
  for (int idx : g.edges_with_label(c)) {
    dsu.unite(component_of_[edges[idx].u], component_of_[edges[idx].v]);
  }
  if (dsu.set_count() == component_count_) return;
  std::vector<int> new_id(component_count_, -1);
  int next = 0;
  for (int& comp : component_of_) {
    const int root = dsu.find(comp);
    if (new_id[root] < 0) new_id[root] = next++;
    comp = new_id[root];
  }
  component_count_ = next;
}

ComponentLabeling restricted_components(const LabeledGraph& g,
                                        const ColorSet& colors) {
  const int n = g.vertex_count();
  DisjointSet dsu(n);
  const auto edges = g.edges();
  for (Label c : colors) {
    for (int idx : g.edges_with_label(c)) dsu.unite(edges[idx].u, edges[idx].v);
  }
  ComponentLabeling labeling(n);
  std::vector<int> new_id(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    const int root = dsu.find(v);
    if (new_id[root] < 0) new_id[root] = next++;
    labeling.component_of_[v] = new_id[root];
  }
  labeling.component_count_ = next;
  return labeling;
}

int components_with_extra(const ComponentLabeling& base, const LabeledGraph& g,
                          Label c) {
  return base.count_with(g, c);
}

int component_count(const LabeledGraph& g, const ColorSet& colors) {
  DisjointSet dsu(g.vertex_count());
  const auto edges = g.edges();
  for (Label c : colors) {
    for (int idx : g.edges_with_label(c)) dsu.unite(edges[idx].u, edges[idx].v);
  }
  return dsu.set_count();
}

SpanningTree spanning_tree(const LabeledGraph& g, const ColorSet& colors) {
  const int n = g.vertex_count();
  DisjointSet dsu(n);
  SpanningTree tree;
  tree.edges.reserve(n - 1);
  for (const Edge& e : g.edges()) {
    if (colors.contains(e.label) && dsu.unite(e.u, e.v)) {
      tree.edges.push_back(e);
    }
  }
  if (dsu.set_count() != 1) {
    throw DisconnectedRestriction(
        "labels " + colors.to_string() + " leave " +
        std::to_string(dsu.set_count()) + " components");
  }
  return tree;
}

std::vector<int> label_frequencies(const LabeledGraph& g) {
  std::vector<int> freq(g.label_count());
  for (Label c = 0; c < g.label_count(); ++c) freq[c] = g.frequency(c);
  return freq;
}

int uncovered_gain(const LabeledGraph& g, const std::vector<bool>& covered,
                   Label c) {
  std::vector<bool> seen(g.vertex_count(), false);
  int gain = 0;
  const auto edges = g.edges();
  for (int idx : g.edges_with_label(c)) {
    for (Vertex x : {edges[idx].u, edges[idx].v}) {
      if (!covered[x] && !seen[x]) {
        seen[x] = true;
        ++gain;
      }
    }
  }
  return gain;
}

}  // namespace mlst
