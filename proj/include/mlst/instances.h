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

// Random benchmark instances and the .mlst text format.
//
// File layout (LF line endings, 0-based ids, single spaces on write):
//
//   n m l
//   u v label      <- m lines
//
// An optional companion "<stem>.opt" holds the optimum as one integer.

#ifndef MLST_INSTANCES_H_
#define MLST_INSTANCES_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "mlst/graph.h"

namespace mlst {

struct InstanceSpec {
  int n = 0;
  int l = 0;
  double density = 0.0;
  uint64_t seed = 0;
  int index = 1;
};

inline constexpr int kMaxGenerationAttempts = 1000;

// floor(d * n(n-1)/2), tolerant to the representation error of decimal
// densities such as 0.2.
int64_t edge_count_for(int n, double density);

// Exactly edge_count_for(n, d) distinct vertex pairs drawn uniformly without
// replacement, each given a uniform label. Redrawn with a derived seed until
// connected. Throws std::invalid_argument for a bad spec (n < 1, l < 1,
// d outside (0,1], m < n-1) and std::runtime_error when no connected draw is
// found within kMaxGenerationAttempts.
LabeledGraph generate(const InstanceSpec& spec);

// Seed for the index-th instance of the (n, l, d) class under a base seed.
uint64_t class_seed(uint64_t base_seed, int n, int l, double density,
                    int index);

// "<n>_<d>_<index>.mlst", d printed in shortest form (0.8, 0.25).
std::string instance_file_name(int n, double density, int index);

class InstanceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_instance(const LabeledGraph& g, std::ostream& out);
void write_instance(const LabeledGraph& g, const std::filesystem::path& path);

// Throws InstanceFormatError on a malformed header, out-of-range ids,
// self-loops, or an edge-line count different from the header's m; also
// (with kRequired) on a disconnected graph.
LabeledGraph read_instance(std::istream& in,
                           Connectivity connectivity = Connectivity::kRequired);
LabeledGraph read_instance(const std::filesystem::path& path,
                           Connectivity connectivity = Connectivity::kRequired);

// "<dir>/<stem>.opt" next to an instance file.
std::filesystem::path optimum_path(const std::filesystem::path& instance);

std::optional<int> read_optimum(const std::filesystem::path& instance);
void write_optimum(const std::filesystem::path& instance, int optimum);

}  // namespace mlst

#endif  // MLST_INSTANCES_H_
