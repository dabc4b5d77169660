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

// Multi-start experiment runner.
//
// Every (instance, algorithm) cell runs R repetitions. Repetition r on the
// i-th instance of a suite uses seed mix_seed(base_seed, i) + r for every
// algorithm in the roster, so A and A1 (and A2 and A12) see the same random
// construction and differ only by post-optimisation.

#ifndef MLST_BENCHMARK_H_
#define MLST_BENCHMARK_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlst/exact.h"
#include "mlst/graph.h"
#include "mlst/heuristics.h"

namespace mlst {

// One entry of a benchmark roster.
struct Algorithm {
  enum class Kind { kMvcaOriginal, kMvcaRevised, kVariant, kPilot, kAstar };

  Kind kind = Kind::kVariant;
  Variant variant;
  PilotConfig pilot;

  // "mvca", "mvca-rev", "A", "A1", "A2", "A12", "astar" (alias "A*") or
  // "pilot:<cfg>". Throws std::invalid_argument.
  static Algorithm parse(std::string_view text);
  std::string name() const;
  // Ignores the seed.
  bool deterministic() const;

  friend bool operator==(const Algorithm&, const Algorithm&) = default;
};

struct AlgorithmRun {
  ColorSet colors;
  bool feasible = false;
  std::chrono::nanoseconds elapsed{0};
};

AlgorithmRun run_algorithm(const LabeledGraph& g, const Algorithm& algorithm,
                           uint64_t seed);

struct RunRecord {
  std::string instance_id;
  int n = 0;
  double density = 0.0;
  int index = 0;
  std::string algorithm;
  int repetitions = 0;
  std::vector<int> objectives;
  int infeasible_runs = 0;
  double mean_objective = 0.0;
  int best_objective = 0;
  std::optional<int> optimum;
  // Set only when the optimum is known.
  std::optional<int> optima_hits;
  std::chrono::nanoseconds total_elapsed{0};
};

// Runs seeds base_seed, ..., base_seed + reps - 1. Deterministic algorithms
// are executed once and their objective repeated; total_elapsed is the time
// actually spent.
RunRecord multi_start(const LabeledGraph& g, const Algorithm& algorithm,
                      int reps, uint64_t base_seed,
                      std::optional<int> optimum = std::nullopt);

struct SuiteInstance {
  std::string id;
  int n = 0;
  double density = 0.0;
  int index = 0;
  std::filesystem::path path;
  // Used instead of reading `path` when present.
  std::optional<LabeledGraph> graph;
};

struct SuiteConfig {
  std::vector<SuiteInstance> instances;
  std::vector<Algorithm> algorithms;
  int repetitions = 100;
  uint64_t base_seed = 1;
  // Run astar on every instance that has no .opt companion.
  bool compute_optimum = false;
  // When false, timing columns are written as 0 so reruns are byte-identical.
  bool record_timing = true;
  int jobs = 1;
};

// Thrown when an instance cannot be loaded; the message names the instance.
class SuiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One record per (instance, algorithm), ordered by (n, d, index, roster
// position). Throws std::invalid_argument for repetitions < 1.
std::vector<RunRecord> run_suite(const SuiteConfig& config);

// Columns n,d,index,algorithm,reps,optimum,mean,best,optima_hits,ms_total;
// unknown optimum and hits are left empty.
void write_csv(const std::vector<RunRecord>& records, std::ostream& out);
// Array of objects with the CSV column names as keys (null when unknown).
void write_json(const std::vector<RunRecord>& records, std::ostream& out);

// Manifest: one instance per line, "<path> [n d index]", '#' comments. Paths
// are relative to the manifest's directory. Without the trailing fields n is
// read from the file and d and index from a "<n>_<d>_<i>" file stem, falling
// back to m / (n(n-1)/2) and the line position.
std::vector<SuiteInstance> read_manifest(const std::filesystem::path& path);
void write_manifest(const std::vector<SuiteInstance>& instances,
                    const std::filesystem::path& path);

}  // namespace mlst

#endif  // MLST_BENCHMARK_H_
