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

#ifndef MLST_DISJOINT_SET_H_
#define MLST_DISJOINT_SET_H_

#include <numeric>
#include <utility>
#include <vector>

namespace mlst {

// Union-find with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(int size = 0) { reset(size); }

  void reset(int size) {
    parent_.resize(size);
    std::iota(parent_.begin(), parent_.end(), 0);
    size_.assign(size, 1);
    sets_ = size;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when x and y were in different sets.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
    --sets_;
    return true;
  }

  int set_count() const { return sets_; }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_ = 0;
};

}  // namespace mlst

#endif  // MLST_DISJOINT_SET_H_
