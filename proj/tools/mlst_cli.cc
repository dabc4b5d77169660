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

// mlst: generate instances, solve them, benchmark solvers, compare results.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 the solver reported an
// infeasible result (only the original MVCA can).

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "mlst/benchmark.h"
#include "mlst/exact.h"
#include "mlst/heuristics.h"
#include "mlst/instances.h"
#include "mlst/stats.h"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInfeasible = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string join_labels(const mlst::ColorSet& colors) {
  std::string s;
  for (mlst::Label c : colors) {
    if (!s.empty()) s += ' ';
    s += std::to_string(c);
  }
  return s;
}

double ms(std::chrono::nanoseconds ns) {
  return std::chrono::duration<double, std::milli>(ns).count();
}

// Parses "0.05=3.858,0.01=4.603".
std::map<double, double> parse_table(const std::string& text) {
  std::map<double, double> table;
  for (const std::string& item : split(text, ',')) {
    const size_t eq = item.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("expected alpha=value, got " + item);
    }
    table[std::stod(item.substr(0, eq))] = std::stod(item.substr(eq + 1));
  }
  return table;
}

struct GenFlags {
  int n = 0;
  int l = 0;
  double d = 0.0;
  uint64_t seed = 1;
  int count = 10;
  std::string out_dir;
};

int run_gen(const GenFlags& f) {
  const int l = f.l > 0 ? f.l : f.n;
  fs::create_directories(f.out_dir);
  std::vector<mlst::SuiteInstance> written;
  for (int i = 1; i <= f.count; ++i) {
    const mlst::InstanceSpec spec{f.n, l, f.d,
                                  mlst::class_seed(f.seed, f.n, l, f.d, i), i};
    const mlst::LabeledGraph g = mlst::generate(spec);
    const fs::path path =
        fs::path(f.out_dir) / mlst::instance_file_name(f.n, f.d, i);
    mlst::write_instance(g, path);
    mlst::SuiteInstance inst;
    inst.id = path.stem().string();
    inst.n = f.n;
    inst.density = f.d;
    inst.index = i;
    inst.path = path;
    written.push_back(std::move(inst));
    std::cout << path.string() << ' ' << g.vertex_count() << ' '
              << g.edge_count() << ' ' << g.label_count() << '\n';
  }
  // Merges so several classes can share one manifest.
  const fs::path manifest = fs::path(f.out_dir) / "manifest.txt";
  std::vector<mlst::SuiteInstance> all;
  if (fs::exists(manifest)) {
    for (auto& inst : mlst::read_manifest(manifest)) {
      const bool replaced = std::any_of(
          written.begin(), written.end(),
          [&](const auto& w) { return w.path.filename() == inst.path.filename(); });
      if (!replaced) all.push_back(std::move(inst));
    }
  }
  all.insert(all.end(), written.begin(), written.end());
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.density, a.index) < std::tie(b.n, b.density, b.index);
  });
  mlst::write_manifest(all, manifest);
  return kExitOk;
}

struct SolveFlags {
  std::string instance;
  std::string algo = "mvca-rev";
  uint64_t seed = 1;
  bool tree = false;
};

int run_solve(const SolveFlags& f) {
  const mlst::LabeledGraph g = mlst::read_instance(fs::path(f.instance));
  const auto start = std::chrono::steady_clock::now();
  mlst::ColorSet colors;
  bool feasible = true;
  if (f.algo == "mvca") {
    const mlst::SolveResult r = mlst::mvca_original(g);
    colors = r.colors;
    feasible = r.feasible;
  } else if (f.algo == "mvca-rev") {
    colors = mlst::mvca_revised(g, mlst::TieBreak::kFirstFound, f.seed).colors;
  } else {
    const mlst::Algorithm algo = mlst::Algorithm::parse(f.algo);
    colors = mlst::run_algorithm(g, algo, f.seed).colors;
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;

  std::cout << "objective: " << colors.size() << '\n'
            << "colors: " << join_labels(colors) << '\n'
            << "feasible: " << (feasible ? "yes" : "no") << '\n';
  if (f.tree && feasible) {
    for (const mlst::Edge& e : mlst::spanning_tree(g, colors).edges) {
      std::cout << "edge: " << e.u << ' ' << e.v << ' ' << e.label << '\n';
    }
  }
  std::cerr << "ms: " << ms(elapsed) << '\n';
  return feasible ? kExitOk : kExitInfeasible;
}

struct ExactFlags {
  std::string instance;
  bool no_freq_prune = false;
  bool no_gain_bound = false;
  std::string ub_from = "mvca-rev";
  bool annotate = false;
};

int run_exact(const ExactFlags& f) {
  const fs::path path(f.instance);
  const mlst::LabeledGraph g = mlst::read_instance(path);
  mlst::AstarOptions options;
  options.frequency_prune = !f.no_freq_prune;
  options.gain_bound = !f.no_gain_bound;
  options.upper_bound_source = f.ub_from == "none"
                                   ? mlst::UpperBoundSource::kNone
                                   : mlst::UpperBoundSource::kRevisedMvca;
  const mlst::SearchResult r = mlst::astar(g, options);
  std::cout << "objective: " << r.colors.size() << '\n'
            << "colors: " << join_labels(r.colors) << '\n'
            << "nodes_expanded: " << r.stats.nodes_expanded << '\n'
            << "pruned_by_bound: " << r.stats.pruned_by_bound << '\n'
            << "pruned_by_frequency: " << r.stats.pruned_by_frequency << '\n'
            << "pruned_by_gain: " << r.stats.pruned_by_gain << '\n';
  std::cerr << "ms: " << ms(r.stats.elapsed) << '\n';
  if (f.annotate) mlst::write_optimum(path, r.colors.size());
  return kExitOk;
}

struct BenchFlags {
  std::string manifest;
  std::string algos = "A*,A,A1,A2,A12";
  int reps = 100;
  uint64_t seed = 1;
  bool with_optimum = false;
  std::string out = "bench_out";
  int jobs = 1;
  bool no_timing = false;
};

int run_bench(const BenchFlags& f) {
  mlst::SuiteConfig config;
  config.instances = mlst::read_manifest(fs::path(f.manifest));
  // Pilot configs contain commas: a "first=" or "rec=" token continues the
  // preceding pilot entry.
  std::vector<std::string> names;
  for (const std::string& token : split(f.algos, ',')) {
    const bool pilot_option =
        !names.empty() && names.back().starts_with("pilot") &&
        (token.starts_with("rec=") || token.starts_with("first="));
    if (pilot_option) {
      names.back() += "," + token;
    } else {
      names.push_back(token);
    }
  }
  for (const std::string& name : names) {
    config.algorithms.push_back(mlst::Algorithm::parse(name));
  }
  config.repetitions = f.reps;
  config.base_seed = f.seed;
  config.compute_optimum = f.with_optimum;
  config.record_timing = !f.no_timing;
  config.jobs = f.jobs;

  const std::vector<mlst::RunRecord> records = mlst::run_suite(config);
  fs::create_directories(f.out);
  {
    std::ofstream csv(fs::path(f.out) / "bench.csv", std::ios::binary);
    mlst::write_csv(records, csv);
  }
  {
    std::ofstream json(fs::path(f.out) / "bench.json", std::ios::binary);
    mlst::write_json(records, json);
  }
  std::cout << records.size() << " rows written to "
            << (fs::path(f.out) / "bench.csv").string() << '\n';
  return kExitOk;
}

struct CompareFlags {
  std::string csv;
  std::string alphas = "0.05,0.01";
  std::string q;
  std::string z;
  std::string json_out;
};

int run_compare(const CompareFlags& f) {
  std::ifstream in(f.csv);
  if (!in) throw std::runtime_error("cannot open " + f.csv);
  const mlst::RankMatrix m = mlst::rank_matrix_from_csv(in);
  std::vector<double> alphas;
  for (const std::string& a : split(f.alphas, ',')) alphas.push_back(std::stod(a));
  const mlst::CompareReport report = mlst::compare_report(
      m, alphas, parse_table(f.q), parse_table(f.z));
  std::cout << mlst::report_text(report);
  const fs::path json_path = f.json_out.empty()
                                 ? fs::path(f.csv).parent_path() / "compare.json"
                                 : fs::path(f.json_out);
  std::ofstream json(json_path, std::ios::binary);
  if (!json) throw std::runtime_error("cannot write " + json_path.string());
  json << mlst::report_json(report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum labelling spanning tree solvers and benchmarks"};
  app.require_subcommand(1);

  GenFlags gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random instances");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--l", gen.l, "Label count (default: n)");
  gen_cmd->add_option("--d", gen.d, "Density in (0,1]")->required();
  gen_cmd->add_option("--seed", gen.seed, "Base seed");
  gen_cmd->add_option("--count", gen.count, "Instances to generate")
      ->check(CLI::PositiveNumber);
  gen_cmd->add_option("--out-dir", gen.out_dir, "Output directory")
      ->required();

  SolveFlags solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run one heuristic");
  solve_cmd->add_option("--instance", solve.instance, "Instance file")
      ->required();
  solve_cmd->add_option("--algo", solve.algo,
                        "mvca | mvca-rev | A | A1 | A2 | A12 | astar | "
                        "pilot:first=<all|minimizers|fracF>,rec=<greedy|all>");
  solve_cmd->add_option("--seed", solve.seed, "Random seed");
  solve_cmd->add_flag("--tree", solve.tree, "Print the spanning tree edges");

  ExactFlags exact;
  auto* exact_cmd = app.add_subcommand("exact", "Solve to optimality");
  exact_cmd->add_option("--instance", exact.instance, "Instance file")
      ->required();
  exact_cmd->add_flag("--no-freq-prune", exact.no_freq_prune,
                      "Disable the final-level frequency prune");
  exact_cmd->add_flag("--no-gain-bound", exact.no_gain_bound,
                      "Disable the component-reduction bound");
  exact_cmd->add_option("--ub-from", exact.ub_from, "Initial upper bound")
      ->check(CLI::IsMember({"none", "mvca-rev"}));
  exact_cmd->add_flag("--annotate", exact.annotate,
                      "Write the optimum to <instance>.opt");

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Multi-start benchmark");
  bench_cmd->add_option("--manifest", bench.manifest, "Instance manifest")
      ->required();
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated roster");
  bench_cmd->add_option("--reps", bench.reps, "Repetitions per cell")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", bench.seed, "Base seed");
  bench_cmd->add_flag("--with-optimum", bench.with_optimum,
                      "Solve each instance exactly for optimum columns");
  bench_cmd->add_option("--out", bench.out, "Output directory");
  bench_cmd->add_option("--jobs", bench.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_flag("--no-timing", bench.no_timing,
                      "Write ms_total as 0 for byte-identical reruns");

  CompareFlags compare;
  auto* compare_cmd = app.add_subcommand("compare", "Rank-based comparison");
  compare_cmd->add_option("--bench-csv", compare.csv, "bench.csv to read")
      ->required();
  compare_cmd->add_option("--alphas", compare.alphas, "Significance levels");
  compare_cmd->add_option("--q", compare.q,
                          "Studentized range quantiles, alpha=q,...");
  compare_cmd->add_option("--z", compare.z, "Normal quantiles, alpha=z,...");
  compare_cmd->add_option("--json", compare.json_out,
                          "JSON report path (default: compare.json next to "
                          "the CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*solve_cmd) return run_solve(solve);
    if (*exact_cmd) return run_exact(exact);
    if (*bench_cmd) return run_bench(bench);
    if (*compare_cmd) return run_compare(compare);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
