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

// Runs the mlst executable end to end.

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

// stderr is discarded; it only carries timing and diagnostics.
Run mlst(const std::string& args) {
  const std::string command = std::string(MLST_CLI_PATH) + " " + args + " 2>/dev/null";
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) run.out.append(buffer, got);
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("mlst_cli_" + std::to_string(reinterpret_cast<uintptr_t>(this)));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

const std::string kWitness = std::string(MLST_DATA_DIR) + "/witness.mlst";

TEST_CASE("usage errors exit 1") {
  CHECK(mlst("").code == 1);
  CHECK(mlst("frobnicate").code == 1);
  CHECK(mlst("solve").code == 1);
  CHECK(mlst("solve --instance /nonexistent.mlst --algo A").code == 1);
  CHECK(mlst("solve --instance " + kWitness + " --algo A3").code == 1);
  CHECK(mlst("gen --n 5 --d 0.2 --out-dir /tmp/never").code == 1);
}

TEST_CASE("solve on the witness") {
  const Run original = mlst("solve --instance " + kWitness + " --algo mvca");
  CHECK(original.code == 2);
  CHECK(original.out.find("feasible: no") != std::string::npos);

  const Run revised = mlst("solve --instance " + kWitness + " --algo mvca-rev");
  CHECK(revised.code == 0);
  CHECK(revised.out == "objective: 3\ncolors: 0 1 2\nfeasible: yes\n");

  const Run tree = mlst("solve --instance " + kWitness + " --algo A1 --seed 3 --tree");
  CHECK(tree.code == 0);
  int edges = 0;
  for (size_t p = tree.out.find("edge:"); p != std::string::npos;
       p = tree.out.find("edge:", p + 1)) {
    ++edges;
  }
  CHECK(edges == 6);

  CHECK(mlst("solve --instance " + kWitness + " --algo A12 --seed 11").out ==
        mlst("solve --instance " + kWitness + " --algo A12 --seed 11").out);
}

TEST_CASE("exact and annotate") {
  TempDir dir;
  fs::copy_file(kWitness, dir.path / "w.mlst");
  const Run run = mlst("exact --instance " + (dir.path / "w.mlst").string() +
                       " --annotate --no-freq-prune --ub-from none");
  CHECK(run.code == 0);
  CHECK(run.out.rfind("objective: 2\ncolors: 1 2\n", 0) == 0);
  CHECK(slurp(dir.path / "w.opt") == "2\n");
}

TEST_CASE("gen, bench, compare pipeline") {
  TempDir dir;
  const std::string inst = (dir.path / "inst").string();
  REQUIRE(mlst("gen --n 10 --d 0.5 --count 3 --seed 5 --out-dir " + inst).code == 0);
  REQUIRE(mlst("gen --n 12 --d 0.8 --count 3 --seed 5 --out-dir " + inst).code == 0);
  CHECK(fs::exists(dir.path / "inst" / "10_0.5_1.mlst"));
  CHECK(fs::exists(dir.path / "inst" / "12_0.8_3.mlst"));
  const std::string manifest = slurp(dir.path / "inst" / "manifest.txt");
  CHECK(std::count(manifest.begin(), manifest.end(), '\n') == 6);

  // Regenerating is byte-identical and does not duplicate manifest lines.
  const std::string first = slurp(dir.path / "inst" / "10_0.5_2.mlst");
  REQUIRE(mlst("gen --n 10 --d 0.5 --count 3 --seed 5 --out-dir " + inst).code == 0);
  CHECK(slurp(dir.path / "inst" / "10_0.5_2.mlst") == first);
  CHECK(slurp(dir.path / "inst" / "manifest.txt") == manifest);

  const std::string bench_args = "bench --manifest " + inst +
                                 "/manifest.txt --reps 10 --seed 3 "
                                 "--with-optimum --no-timing --out ";
  REQUIRE(mlst(bench_args + (dir.path / "b1").string()).code == 0);
  REQUIRE(mlst(bench_args + (dir.path / "b2").string() + " --jobs 3").code == 0);
  const std::string csv = slurp(dir.path / "b1" / "bench.csv");
  CHECK(csv == slurp(dir.path / "b2" / "bench.csv"));
  CHECK(slurp(dir.path / "b1" / "bench.json") == slurp(dir.path / "b2" / "bench.json"));
  CHECK(csv.rfind("n,d,index,algorithm,reps,optimum,mean,best,optima_hits,ms_total\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 6 * 5);
  CHECK(csv.find(",A*,") != std::string::npos);

  const std::string csv_path = (dir.path / "b1" / "bench.csv").string();
  const Run report = mlst("compare --bench-csv " + csv_path + " --alphas 0.05,0.01");
  CHECK(report.code == 0);
  CHECK(report.out.find("friedman") != std::string::npos);
  CHECK(report.out == mlst("compare --bench-csv " + csv_path + " --alphas 0.05,0.01").out);
  const nlohmann::json j = nlohmann::json::parse(slurp(dir.path / "b1" / "compare.json"));
  CHECK(j["instances"] == 6);
  CHECK(j["mean_ranks"].size() == 5);

  // Pilot tokens contain commas of their own.
  REQUIRE(mlst("bench --manifest " + inst + "/manifest.txt --reps 2 --algos "
               "A,pilot:first=frac0.3,rec=all --no-timing --out " +
               (dir.path / "b3").string()).code == 0);
  CHECK(slurp(dir.path / "b3" / "bench.csv").find("pilot:first=frac0.3,rec=all") !=
        std::string::npos);
}

TEST_CASE("compare rejects malformed input") {
  TempDir dir;
  std::ofstream(dir.path / "bad.csv") << "n,d\n1,2\n";
  CHECK(mlst("compare --bench-csv " + (dir.path / "bad.csv").string()).code == 1);
  CHECK(mlst("compare --bench-csv " + (dir.path / "none.csv").string()).code == 1);
}

}  // namespace
