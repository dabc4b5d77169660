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

#include "mlst/instances.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "mlst/disjoint_set.h"
#include "mlst/rng.h"

namespace mlst {

int64_t edge_count_for(int n, double density) {
  const int64_t pairs = static_cast<int64_t>(n) * (n - 1) / 2;
  return static_cast<int64_t>(std::floor(density * pairs + 1e-9));
}

LabeledGraph generate(const InstanceSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("n must be positive");
  if (spec.l < 1) throw std::invalid_argument("l must be positive");
  if (!(spec.density > 0.0) || spec.density > 1.0) {
    throw std::invalid_argument("density must be in (0,1]");
  }
  const int n = spec.n;
  const int64_t pairs = static_cast<int64_t>(n) * (n - 1) / 2;
  const int64_t m = edge_count_for(n, spec.density);
  if (m < n - 1) {
    throw std::invalid_argument(
        "m = " + std::to_string(m) + " edges cannot connect " +
        std::to_string(n) + " vertices");
  }
  if (m > pairs) throw std::invalid_argument("m exceeds n(n-1)/2");

  std::vector<std::pair<Vertex, Vertex>> all_pairs;
  all_pairs.reserve(pairs);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  }

  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    Rng rng(mix_seed({spec.seed, static_cast<uint64_t>(attempt)}));
    // Partial Fisher-Yates: the first m slots become a uniform m-subset.
    for (int64_t i = 0; i < m; ++i) {
      const int64_t j =
          i + std::uniform_int_distribution<int64_t>(0, pairs - 1 - i)(rng);
      std::swap(all_pairs[i], all_pairs[j]);
    }
    std::vector<std::pair<Vertex, Vertex>> chosen(all_pairs.begin(),
                                                  all_pairs.begin() + m);
    std::sort(chosen.begin(), chosen.end());

    DisjointSet dsu(n);
    for (const auto& [u, v] : chosen) dsu.unite(u, v);
    if (dsu.set_count() != 1) continue;

    std::vector<Edge> edges;
    edges.reserve(m);
    for (const auto& [u, v] : chosen) {
      edges.push_back({u, v, uniform_index(rng, spec.l)});
    }
    return build_graph(n, spec.l, std::move(edges));
  }
  throw std::runtime_error("no connected graph after " +
                           std::to_string(kMaxGenerationAttempts) +
                           " attempts");
}

uint64_t class_seed(uint64_t base_seed, int n, int l, double density,
                    int index) {
  const auto per_mille = static_cast<uint64_t>(std::llround(density * 1000));
  return mix_seed({base_seed, static_cast<uint64_t>(n),
                   static_cast<uint64_t>(l), per_mille,
                   static_cast<uint64_t>(index)});
}

std::string instance_file_name(int n, double density, int index) {
  std::ostringstream out;
  out << n << '_' << density << '_' << index << ".mlst";
  return out.str();
}

void write_instance(const LabeledGraph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << ' ' << g.label_count()
      << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.label << '\n';
  }
}

void write_instance(const LabeledGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_instance(g, out);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

namespace {

// Splits a line into integers; false on any non-integer token.
bool parse_ints(const std::string& line, std::vector<long long>& out) {
  out.clear();
  std::istringstream in(line);
  std::string token;
  while (in >> token) {
    size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      return false;
    }
    if (used != token.size()) return false;
    out.push_back(value);
  }
  return true;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

LabeledGraph read_instance(std::istream& in, Connectivity connectivity) {
  std::string line;
  int line_no = 0;
  std::vector<long long> fields;

  auto fail = [&](const std::string& what) -> InstanceFormatError {
    return InstanceFormatError("line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) break;
  }
  if (line_no == 0 || blank(line)) throw fail("missing header");
  if (!parse_ints(line, fields) || fields.size() != 3) {
    throw fail("header must be 'n m l'");
  }
  const long long n = fields[0], m = fields[1], l = fields[2];
  if (n < 1 || l < 1 || m < 0 || n > (1 << 30) || l > (1 << 30)) {
    throw fail("header values out of range");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(std::min<long long>(m, 1 << 20)));
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    if (static_cast<long long>(edges.size()) == m) {
      throw fail("more edge lines than the declared " + std::to_string(m));
    }
    if (!parse_ints(line, fields) || fields.size() != 3) {
      throw fail("edge line must be 'u v label'");
    }
    const long long u = fields[0], v = fields[1], c = fields[2];
    if (u < 0 || u >= n || v < 0 || v >= n) throw fail("vertex out of range");
    if (c < 0 || c >= l) throw fail("label out of range");
    if (u == v) throw fail("self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v),
                     static_cast<Label>(c)});
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw InstanceFormatError("declared " + std::to_string(m) +
                              " edges but found " +
                              std::to_string(edges.size()));
  }
  try {
    return build_graph(static_cast<int>(n), static_cast<int>(l),
                       std::move(edges), connectivity);
  } catch (const InvalidGraph& e) {
    throw InstanceFormatError(e.what());
  }
}

LabeledGraph read_instance(const std::filesystem::path& path,
                           Connectivity connectivity) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return read_instance(in, connectivity);
  } catch (const InstanceFormatError& e) {
    throw InstanceFormatError(path.string() + ": " + e.what());
  }
}

std::filesystem::path optimum_path(const std::filesystem::path& instance) {
  std::filesystem::path p = instance;
  p.replace_extension(".opt");
  return p;
}

std::optional<int> read_optimum(const std::filesystem::path& instance) {
  std::ifstream in(optimum_path(instance));
  if (!in) return std::nullopt;
  int value = 0;
  if (!(in >> value) || value < 0) {
    throw InstanceFormatError(optimum_path(instance).string() +
                              ": expected a single non-negative integer");
  }
  return value;
}

void write_optimum(const std::filesystem::path& instance, int optimum) {
  std::ofstream out(optimum_path(instance), std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + optimum_path(instance).string());
  }
  out << optimum << '\n';
}

}  // namespace mlst
