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

#include "mlst/benchmark.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "mlst/instances.h"
#include "mlst/rng.h"

namespace mlst {
namespace {

using Clock = std::chrono::steady_clock;

// FNV-1a; stable across platforms, unlike std::hash.
uint64_t fnv1a(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string format_density(double d) {
  std::ostringstream out;
  out << d;
  return out.str();
}

double milliseconds(std::chrono::nanoseconds ns) {
  return std::chrono::duration<double, std::milli>(ns).count();
}

}  // namespace

Algorithm Algorithm::parse(std::string_view text) {
  Algorithm a;
  if (text == "mvca") {
    a.kind = Kind::kMvcaOriginal;
  } else if (text == "mvca-rev") {
    a.kind = Kind::kMvcaRevised;
  } else if (text == "astar" || text == "A*") {
    a.kind = Kind::kAstar;
  } else if (text == "A") {
    a.variant = Variant::A();
  } else if (text == "A1") {
    a.variant = Variant::A1();
  } else if (text == "A2") {
    a.variant = Variant::A2();
  } else if (text == "A12") {
    a.variant = Variant::A12();
  } else if (text.starts_with("pilot")) {
    a.kind = Kind::kPilot;
    if (text != "pilot" && !text.starts_with("pilot:")) {
      throw std::invalid_argument("unknown algorithm: " + std::string(text));
    }
    a.pilot = PilotConfig::parse(text == "pilot" ? "" : text);
  } else {
    throw std::invalid_argument("unknown algorithm: " + std::string(text));
  }
  return a;
}

std::string Algorithm::name() const {
  switch (kind) {
    case Kind::kMvcaOriginal:
      return "mvca";
    case Kind::kMvcaRevised:
      return "mvca-rev";
    case Kind::kVariant:
      return variant.name();
    case Kind::kPilot:
      return pilot.name();
    case Kind::kAstar:
      return "A*";
  }
  return "?";
}

bool Algorithm::deterministic() const { return kind != Kind::kVariant; }

AlgorithmRun run_algorithm(const LabeledGraph& g, const Algorithm& algorithm,
                           uint64_t seed) {
  const auto start = Clock::now();
  AlgorithmRun run;
  switch (algorithm.kind) {
    case Algorithm::Kind::kMvcaOriginal: {
      SolveResult r = mvca_original(g);
      run.colors = std::move(r.colors);
      run.feasible = r.feasible;
      break;
    }
    case Algorithm::Kind::kMvcaRevised:
      run.colors = mvca_revised(g, TieBreak::kFirstFound, seed).colors;
      run.feasible = true;
      break;
    case Algorithm::Kind::kVariant:
      run.colors = solve_variant(g, algorithm.variant, seed).colors;
      run.feasible = true;
      break;
    case Algorithm::Kind::kPilot:
      run.colors = pilot(g, algorithm.pilot).colors;
      run.feasible = true;
      break;
    case Algorithm::Kind::kAstar:
      run.colors = astar(g).colors;
      run.feasible = true;
      break;
  }
  run.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(
      Clock::now() - start);
  return run;
}

RunRecord multi_start(const LabeledGraph& g, const Algorithm& algorithm,
                      int reps, uint64_t base_seed, std::optional<int> optimum) {
  if (reps < 1) throw std::invalid_argument("repetitions must be >= 1");
  RunRecord record;
  record.n = g.vertex_count();
  record.algorithm = algorithm.name();
  record.repetitions = reps;
  record.optimum = optimum;
  record.objectives.reserve(reps);

  for (int r = 0; r < reps; ++r) {
    if (r > 0 && algorithm.deterministic()) {
      record.objectives.push_back(record.objectives.front());
      if (record.infeasible_runs > 0) ++record.infeasible_runs;
      continue;
    }
    const AlgorithmRun run = run_algorithm(g, algorithm, base_seed + r);
    record.objectives.push_back(run.colors.size());
    if (!run.feasible) ++record.infeasible_runs;
    record.total_elapsed += run.elapsed;
  }

  record.best_objective =
      *std::min_element(record.objectives.begin(), record.objectives.end());
  record.mean_objective =
      std::accumulate(record.objectives.begin(), record.objectives.end(), 0.0) /
      reps;
  if (optimum) {
    // Infeasible runs never count as optimal.
    int hits = 0;
    if (record.infeasible_runs == 0) {
      hits = static_cast<int>(std::count(record.objectives.begin(),
                                         record.objectives.end(), *optimum));
    }
    record.optima_hits = hits;
  }
  return record;
}

std::vector<RunRecord> run_suite(const SuiteConfig& config) {
  if (config.repetitions < 1) {
    throw std::invalid_argument("repetitions must be >= 1");
  }
  std::vector<size_t> order(config.instances.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    const SuiteInstance& x = config.instances[a];
    const SuiteInstance& y = config.instances[b];
    return std::tie(x.n, x.density, x.index) <
           std::tie(y.n, y.density, y.index);
  });

  std::vector<std::vector<RunRecord>> cells(config.instances.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&] {
    while (true) {
      const size_t slot = next.fetch_add(1);
      if (slot >= order.size()) return;
      const SuiteInstance& inst = config.instances[order[slot]];
      try {
        LabeledGraph g = inst.graph ? *inst.graph : [&] {
          try {
            return read_instance(inst.path);
          } catch (const std::exception& e) {
            throw SuiteError("instance " + inst.id + ": " + e.what());
          }
        }();
        std::optional<int> optimum;
        if (!inst.path.empty()) optimum = read_optimum(inst.path);
        if (!optimum && config.compute_optimum) optimum = astar(g).colors.size();

        const uint64_t cell_seed = mix_seed({config.base_seed, fnv1a(inst.id)});
        for (const Algorithm& algorithm : config.algorithms) {
          RunRecord record = multi_start(g, algorithm, config.repetitions,
                                         cell_seed, optimum);
          record.instance_id = inst.id;
          record.n = inst.n;
          record.density = inst.density;
          record.index = inst.index;
          if (!config.record_timing) record.total_elapsed = {};
          cells[slot].push_back(std::move(record));
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(order.size());
        return;
      }
    }
  };

  const int jobs = std::max(1, config.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::jthread> workers;
    for (int j = 0; j < jobs; ++j) workers.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<RunRecord> records;
  for (auto& cell : cells) {
    for (auto& record : cell) records.push_back(std::move(record));
  }
  return records;
}

void write_csv(const std::vector<RunRecord>& records, std::ostream& out) {
  out << "n,d,index,algorithm,reps,optimum,mean,best,optima_hits,ms_total\n";
  for (const RunRecord& r : records) {
    out << r.n << ',' << format_density(r.density) << ',' << r.index << ','
        << r.algorithm << ',' << r.repetitions << ',';
    if (r.optimum) out << *r.optimum;
    out << ',' << format_fixed(r.mean_objective, 4) << ',' << r.best_objective
        << ',';
    if (r.optima_hits) out << *r.optima_hits;
    out << ',' << format_fixed(milliseconds(r.total_elapsed), 3) << '\n';
  }
}

void write_json(const std::vector<RunRecord>& records, std::ostream& out) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const RunRecord& r : records) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["d"] = r.density;
    row["index"] = r.index;
    row["algorithm"] = r.algorithm;
    row["reps"] = r.repetitions;
    row["optimum"] = r.optimum ? nlohmann::ordered_json(*r.optimum) : nullptr;
    row["mean"] = r.mean_objective;
    row["best"] = r.best_objective;
    row["optima_hits"] =
        r.optima_hits ? nlohmann::ordered_json(*r.optima_hits) : nullptr;
    row["ms_total"] = milliseconds(r.total_elapsed);
    rows.push_back(std::move(row));
  }
  out << rows.dump(2) << '\n';
}

std::vector<SuiteInstance> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SuiteError("cannot open manifest " + path.string());
  const std::filesystem::path base = path.parent_path();
  std::vector<SuiteInstance> instances;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream fields(line);
    std::string file;
    if (!(fields >> file)) continue;

    SuiteInstance inst;
    inst.path = std::filesystem::path(file).is_absolute()
                    ? std::filesystem::path(file)
                    : base / file;
    inst.id = std::filesystem::path(file).stem().string();
    if (fields >> inst.n) {
      if (!(fields >> inst.density >> inst.index)) {
        throw SuiteError(path.string() + ":" + std::to_string(line_no) +
                         ": expected '<path> n d index'");
      }
      instances.push_back(std::move(inst));
      continue;
    }

    // Derive metadata from the stem or the graph itself.
    const std::string& stem = inst.id;
    const size_t a = stem.find('_');
    const size_t b = a == std::string::npos ? a : stem.find('_', a + 1);
    bool parsed = false;
    if (b != std::string::npos) {
      try {
        size_t used_n = 0, used_d = 0, used_i = 0;
        const std::string sn = stem.substr(0, a);
        const std::string sd = stem.substr(a + 1, b - a - 1);
        const std::string si = stem.substr(b + 1);
        inst.n = std::stoi(sn, &used_n);
        inst.density = std::stod(sd, &used_d);
        inst.index = std::stoi(si, &used_i);
        parsed = used_n == sn.size() && used_d == sd.size() &&
                 used_i == si.size();
      } catch (const std::exception&) {
        parsed = false;
      }
    }
    if (!parsed) {
      LabeledGraph g = [&] {
        try {
          return read_instance(inst.path);
        } catch (const std::exception& e) {
          throw SuiteError("instance " + inst.id + ": " + e.what());
        }
      }();
      inst.n = g.vertex_count();
      const double pairs = 0.5 * g.vertex_count() * (g.vertex_count() - 1);
      inst.density = pairs > 0 ? g.edge_count() / pairs : 0.0;
      inst.index = static_cast<int>(instances.size()) + 1;
      inst.graph = std::move(g);
    }
    instances.push_back(std::move(inst));
  }
  return instances;
}

void write_manifest(const std::vector<SuiteInstance>& instances,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SuiteError("cannot write manifest " + path.string());
  for (const SuiteInstance& inst : instances) {
    out << inst.path.filename().string() << ' ' << inst.n << ' '
        << format_density(inst.density) << ' ' << inst.index << '\n';
  }
}

}  // namespace mlst
