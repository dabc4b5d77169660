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

#include "mlst/stats.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace mlst {
namespace {

constexpr int kTableMinK = 2;
constexpr int kTableMaxK = 10;

// q(alpha; k, inf), k = 2..10.
constexpr double kQ10[] = {2.326, 2.902, 3.240, 3.478, 3.661,
                           3.808, 3.931, 4.037, 4.129};
constexpr double kQ05[] = {2.772, 3.314, 3.633, 3.858, 4.030,
                           4.170, 4.286, 4.387, 4.474};
constexpr double kQ01[] = {3.643, 4.120, 4.403, 4.603, 4.757,
                           4.882, 4.987, 5.078, 5.157};

bool same_alpha(double a, double b) { return std::abs(a - b) < 1e-12; }

std::optional<double> lookup(const std::map<double, double>& table,
                             double alpha) {
  for (const auto& [key, value] : table) {
    if (same_alpha(key, alpha)) return value;
  }
  return std::nullopt;
}

// Continued fraction for the incomplete beta (modified Lentz).
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 500;
  constexpr double kEps = 1e-15;
  constexpr double kTiny = 1e-300;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) {
    if (!field.empty() && field.back() == '\r') field.pop_back();
    out.push_back(field);
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

void RankMatrix::validate() const {
  const int k = algorithm_count();
  if (k < 2) throw std::invalid_argument("need at least 2 algorithms");
  if (instance_count() < 2) {
    throw std::invalid_argument("need at least 2 instances");
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (static_cast<int>(values[i].size()) != k) {
      throw std::invalid_argument("row " + std::to_string(i) + " has " +
                                  std::to_string(values[i].size()) +
                                  " values, expected " + std::to_string(k));
    }
    for (double v : values[i]) {
      if (!std::isfinite(v)) {
        throw std::invalid_argument("row " + std::to_string(i) +
                                    " has a non-finite value");
      }
    }
  }
}

std::vector<double> row_ranks(std::span<const double> row,
                              Direction direction) {
  const int k = static_cast<int>(row.size());
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  auto better = [&](int a, int b) {
    return direction == Direction::kLowerIsBetter ? row[a] < row[b]
                                                  : row[a] > row[b];
  };
  std::stable_sort(idx.begin(), idx.end(), better);
  std::vector<double> ranks(k);
  for (int start = 0; start < k;) {
    int end = start + 1;
    while (end < k && row[idx[end]] == row[idx[start]]) ++end;
    // Positions start+1 .. end share their mean.
    const double rank = 0.5 * (start + 1 + end);
    for (int p = start; p < end; ++p) ranks[idx[p]] = rank;
    start = end;
  }
  return ranks;
}

std::vector<double> mean_ranks(const RankMatrix& m, Direction direction) {
  m.validate();
  const int k = m.algorithm_count();
  std::vector<double> sums(k, 0.0);
  for (const auto& row : m.values) {
    const std::vector<double> ranks = row_ranks(row, direction);
    for (int j = 0; j < k; ++j) sums[j] += ranks[j];
  }
  for (double& s : sums) s /= m.instance_count();
  return sums;
}

FriedmanResult friedman(const RankMatrix& m, Direction direction) {
  const std::vector<double> ranks = mean_ranks(m, direction);
  const double n = m.instance_count();
  const double k = m.algorithm_count();
  double sum_sq = 0.0;
  for (double r : ranks) sum_sq += r * r;

  FriedmanResult result;
  result.chi_square =
      12.0 * n / (k * (k + 1.0)) * (sum_sq - k * (k + 1.0) * (k + 1.0) / 4.0);
  // Rounding can leave a tiny negative value for all-tied rows.
  if (result.chi_square < 0.0 && result.chi_square > -1e-9) {
    result.chi_square = 0.0;
  }
  result.df1 = static_cast<int>(k) - 1;
  result.df2 = (static_cast<int>(k) - 1) * (static_cast<int>(n) - 1);

  const double denominator = n * (k - 1.0) - result.chi_square;
  if (denominator <= 1e-9 * n * (k - 1.0)) {
    result.saturated = true;
    result.iman_davenport_f = std::numeric_limits<double>::infinity();
    result.p_value = 0.0;
    return result;
  }
  result.iman_davenport_f = (n - 1.0) * result.chi_square / denominator;
  result.p_value = f_survival(result.iman_davenport_f, result.df1, result.df2);
  return result;
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("incomplete beta needs a, b > 0");
  }
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) -
                           std::lgamma(b) + a * std::log(x) +
                           b * std::log1p(-x);
  const double front = std::exp(log_front);
  // The continued fraction converges fast for x < (a+1)/(a+b+2); use the
  // symmetry I_x(a,b) = 1 - I_{1-x}(b,a) otherwise.
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_continued_fraction(a, b, x) / a;
  }
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double f_survival(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0)) {
    throw std::invalid_argument("F distribution needs positive df");
  }
  if (f <= 0.0) return 1.0;
  if (std::isinf(f)) return 0.0;
  return regularized_incomplete_beta(df2 / 2.0, df1 / 2.0,
                                     df2 / (df2 + df1 * f));
}

double nemenyi_se(int k, int n) {
  return std::sqrt(static_cast<double>(k) * (k + 1) / (6.0 * n));
}

double nemenyi_cd(int k, int n, double q_alpha) {
  return q_alpha / std::sqrt(2.0) * nemenyi_se(k, n);
}

int sign_test_threshold(int n, double z) {
  const double bound = n / 2.0 + z * std::sqrt(static_cast<double>(n)) / 2.0;
  // Guard against bound landing a rounding error above an integer.
  return static_cast<int>(std::ceil(bound - 1e-9));
}

std::optional<double> studentized_range_quantile(double alpha, int k) {
  if (k < kTableMinK || k > kTableMaxK) return std::nullopt;
  const int i = k - kTableMinK;
  if (same_alpha(alpha, 0.10)) return kQ10[i];
  if (same_alpha(alpha, 0.05)) return kQ05[i];
  if (same_alpha(alpha, 0.01)) return kQ01[i];
  return std::nullopt;
}

std::optional<double> normal_quantile(double alpha) {
  if (same_alpha(alpha, 0.10)) return 1.6449;
  if (same_alpha(alpha, 0.05)) return 1.96;
  if (same_alpha(alpha, 0.01)) return 2.576;
  return std::nullopt;
}

CompareReport compare_report(const RankMatrix& m,
                             const std::vector<double>& alphas,
                             const std::map<double, double>& q_table,
                             const std::map<double, double>& z_table,
                             Direction direction) {
  m.validate();
  const int k = m.algorithm_count();
  const int n = m.instance_count();
  const std::vector<double> ranks = mean_ranks(m, direction);

  CompareReport report;
  report.instance_count = n;
  report.friedman = friedman(m, direction);
  report.alphas = alphas;

  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return ranks[a] < ranks[b]; });
  for (int j : order) {
    report.algorithms.push_back(m.algorithms[j]);
    report.mean_ranks.push_back(ranks[j]);
  }

  for (double alpha : alphas) {
    report.friedman_rejects.push_back(report.friedman.p_value < alpha);
    std::optional<double> q = lookup(q_table, alpha);
    if (!q) q = studentized_range_quantile(alpha, k);
    report.critical_differences.push_back(
        q ? std::optional<double>(nemenyi_cd(k, n, *q)) : std::nullopt);
    std::optional<double> z = lookup(z_table, alpha);
    if (!z) z = normal_quantile(alpha);
    // A threshold above N can never be met.
    report.sign_thresholds.push_back(z ? sign_test_threshold(n, *z) : n + 1);
  }

  auto compare = [&](int a, int b) {
    PairComparison pc;
    pc.better = m.algorithms[a];
    pc.worse = m.algorithms[b];
    pc.rank_difference = ranks[b] - ranks[a];
    for (const auto& row : m.values) {
      const bool a_better = direction == Direction::kLowerIsBetter
                                ? row[a] < row[b]
                                : row[a] > row[b];
      if (row[a] == row[b]) {
        ++pc.ties;
      } else if (a_better) {
        ++pc.wins;
      } else {
        ++pc.losses;
      }
    }
    // Ties count half to each side; an odd one out is dropped.
    const int credited = pc.wins + pc.ties / 2;
    for (size_t i = 0; i < alphas.size(); ++i) {
      const auto& cd = report.critical_differences[i];
      pc.nemenyi_significant.push_back(cd && pc.rank_difference > *cd);
      pc.sign_significant.push_back(credited >= report.sign_thresholds[i]);
    }
    return pc;
  };

  for (int i = 0; i + 1 < k; ++i) {
    report.adjacent.push_back(compare(order[i], order[i + 1]));
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      report.pairs.push_back(compare(order[i], order[j]));
    }
  }
  return report;
}

std::string report_text(const CompareReport& r) {
  std::ostringstream out;
  out << "instances: " << r.instance_count
      << "  algorithms: " << r.algorithms.size() << "\n\n";
  out << "mean ranks\n";
  size_t width = 9;
  for (const auto& a : r.algorithms) width = std::max(width, a.size() + 2);
  for (size_t i = 0; i < r.algorithms.size(); ++i) {
    out << "  " << r.algorithms[i]
        << std::string(width - r.algorithms[i].size(), ' ')
        << fixed(r.mean_ranks[i], 3) << '\n';
  }
  const FriedmanResult& f = r.friedman;
  out << "\nfriedman\n  chi2 = " << fixed(f.chi_square, 4)
      << "  F = " << (f.saturated ? std::string("inf")
                                  : fixed(f.iman_davenport_f, 4))
      << "  df = (" << f.df1 << ", " << f.df2 << ")  p = "
      << (f.p_value < 1e-4 && f.p_value > 0 ? std::string("<1e-4")
                                            : fixed(f.p_value, 4))
      << (f.saturated ? "  (saturated)" : "") << '\n';
  for (size_t i = 0; i < r.alphas.size(); ++i) {
    out << "  alpha " << fixed(r.alphas[i], 2) << ": "
        << (r.friedman_rejects[i] ? "reject equivalence"
                                  : "no significant difference")
        << '\n';
  }

  out << "\nnemenyi critical differences\n";
  for (size_t i = 0; i < r.alphas.size(); ++i) {
    out << "  alpha " << fixed(r.alphas[i], 2) << ": CD = "
        << (r.critical_differences[i] ? fixed(*r.critical_differences[i], 4)
                                      : std::string("n/a"))
        << "  sign-test threshold = " << r.sign_thresholds[i] << " of "
        << r.instance_count << '\n';
  }

  auto flags = [&](const std::vector<bool>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ' ';
      s += v[i] ? '*' : '-';
    }
    return s;
  };
  auto pair_line = [&](const PairComparison& p) {
    std::ostringstream line;
    line << "  " << p.worse << " - " << p.better << " = "
         << fixed(p.rank_difference, 3) << "  nemenyi [" << flags(p.nemenyi_significant)
         << "]  wins " << p.wins << '/' << p.ties << '/' << p.losses
         << "  sign [" << flags(p.sign_significant) << "]\n";
    return line.str();
  };
  out << "\nadjacent differences (significance per alpha: * yes, - no)\n";
  for (const auto& p : r.adjacent) out << pair_line(p);
  out << "\nall pairs (wins/ties/losses of the better-ranked)\n";
  for (const auto& p : r.pairs) out << pair_line(p);
  return out.str();
}

std::string report_json(const CompareReport& r) {
  using nlohmann::ordered_json;
  auto pair_json = [](const PairComparison& p) {
    ordered_json j;
    j["better"] = p.better;
    j["worse"] = p.worse;
    j["rank_difference"] = p.rank_difference;
    j["wins"] = p.wins;
    j["ties"] = p.ties;
    j["losses"] = p.losses;
    j["nemenyi_significant"] = p.nemenyi_significant;
    j["sign_significant"] = p.sign_significant;
    return j;
  };
  ordered_json j;
  j["instances"] = r.instance_count;
  ordered_json ranks = ordered_json::array();
  for (size_t i = 0; i < r.algorithms.size(); ++i) {
    ranks.push_back({{"algorithm", r.algorithms[i]},
                     {"mean_rank", r.mean_ranks[i]}});
  }
  j["mean_ranks"] = ranks;
  ordered_json f;
  f["chi_square"] = r.friedman.chi_square;
  f["iman_davenport_f"] = r.friedman.saturated
                              ? ordered_json(nullptr)
                              : ordered_json(r.friedman.iman_davenport_f);
  f["df1"] = r.friedman.df1;
  f["df2"] = r.friedman.df2;
  f["p_value"] = r.friedman.p_value;
  f["saturated"] = r.friedman.saturated;
  j["friedman"] = f;
  ordered_json per_alpha = ordered_json::array();
  for (size_t i = 0; i < r.alphas.size(); ++i) {
    ordered_json a;
    a["alpha"] = r.alphas[i];
    a["friedman_rejects"] = static_cast<bool>(r.friedman_rejects[i]);
    a["critical_difference"] = r.critical_differences[i]
                                   ? ordered_json(*r.critical_differences[i])
                                   : ordered_json(nullptr);
    a["sign_threshold"] = r.sign_thresholds[i];
    per_alpha.push_back(a);
  }
  j["alphas"] = per_alpha;
  ordered_json adjacent = ordered_json::array();
  for (const auto& p : r.adjacent) adjacent.push_back(pair_json(p));
  j["adjacent"] = adjacent;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : r.pairs) pairs.push_back(pair_json(p));
  j["pairs"] = pairs;
  return j.dump(2) + "\n";
}

RankMatrix rank_matrix_from_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
  const std::vector<std::string> header = split_csv_line(line);
  auto column = [&](const std::string& name) {
    auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw std::invalid_argument("CSV lacks column '" + name + "'");
    }
    return static_cast<size_t>(it - header.begin());
  };
  const size_t col_n = column("n"), col_d = column("d"),
               col_index = column("index"), col_algo = column("algorithm"),
               col_mean = column("mean");

  using Key = std::tuple<int, double, int>;
  std::vector<Key> keys;
  std::map<Key, std::map<std::string, double>> cells;
  RankMatrix m;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> f = split_csv_line(line);
    if (f.size() != header.size()) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": expected " +
                                  std::to_string(header.size()) + " fields");
    }
    Key key;
    double mean = 0.0;
    try {
      key = Key{std::stoi(f[col_n]), std::stod(f[col_d]),
                std::stoi(f[col_index])};
      mean = std::stod(f[col_mean]);
    } catch (const std::exception&) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": non-numeric field");
    }
    const std::string& algo = f[col_algo];
    if (std::find(m.algorithms.begin(), m.algorithms.end(), algo) ==
        m.algorithms.end()) {
      m.algorithms.push_back(algo);
    }
    if (!cells.contains(key)) keys.push_back(key);
    if (!cells[key].emplace(algo, mean).second) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) +
                                  ": duplicate cell for " + algo);
    }
  }
  for (const Key& key : keys) {
    const auto& row = cells[key];
    std::ostringstream name;
    name << std::get<0>(key) << '_' << std::get<1>(key) << '_'
         << std::get<2>(key);
    std::vector<double> values;
    for (const std::string& algo : m.algorithms) {
      auto it = row.find(algo);
      if (it == row.end()) {
        throw std::invalid_argument("missing cell: instance " + name.str() +
                                    ", algorithm " + algo);
      }
      values.push_back(it->second);
    }
    m.instances.push_back(name.str());
    m.values.push_back(std::move(values));
  }
  m.validate();
  return m;
}

}  // namespace mlst
