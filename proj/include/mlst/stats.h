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

// Non-parametric comparison of k algorithms over N instances: mean ranks,
// the Friedman test (chi-square and Iman-Davenport F forms), Nemenyi
// critical differences and the sign test.

#ifndef MLST_STATS_H_
#define MLST_STATS_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlst {

enum class Direction { kLowerIsBetter, kHigherIsBetter };

// values[i][j]: score of algorithm j on instance i.
struct RankMatrix {
  std::vector<std::string> algorithms;
  std::vector<std::string> instances;  // optional row names
  std::vector<std::vector<double>> values;

  int instance_count() const { return static_cast<int>(values.size()); }
  int algorithm_count() const { return static_cast<int>(algorithms.size()); }

  // Throws std::invalid_argument unless N >= 2, k >= 2 and every row has k
  // finite values.
  void validate() const;
};

// Ranks 1..k within one row; tied entries share the mean of their positions.
std::vector<double> row_ranks(std::span<const double> row,
                              Direction direction = Direction::kLowerIsBetter);

std::vector<double> mean_ranks(const RankMatrix& m,
                               Direction direction = Direction::kLowerIsBetter);

struct FriedmanResult {
  double chi_square = 0.0;
  double iman_davenport_f = 0.0;
  int df1 = 0;
  int df2 = 0;
  double p_value = 1.0;
  // Every row ranks the algorithms identically with no ties; F is infinite
  // and p_value is reported as 0.
  bool saturated = false;
};

FriedmanResult friedman(const RankMatrix& m,
                        Direction direction = Direction::kLowerIsBetter);

// I_x(a, b), the regularised incomplete beta function.
double regularized_incomplete_beta(double a, double b, double x);

// P(F > f) for F ~ F(df1, df2).
double f_survival(double f, double df1, double df2);

// sqrt(k(k+1) / (6N)).
double nemenyi_se(int k, int n);

// (q / sqrt(2)) * nemenyi_se(k, n) for a studentized-range quantile q.
double nemenyi_cd(int k, int n, double q_alpha);

// Smallest integer w >= N/2 + z sqrt(N)/2.
int sign_test_threshold(int n, double z);

// Studentized range quantile q(alpha; k, inf) for alpha in {0.10, 0.05,
// 0.01} and 2 <= k <= 10.
std::optional<double> studentized_range_quantile(double alpha, int k);

// Two-sided standard normal quantile z(1 - alpha/2) for alpha in {0.10,
// 0.05, 0.01}.
std::optional<double> normal_quantile(double alpha);

struct PairComparison {
  std::string better;  // lower mean rank
  std::string worse;
  double rank_difference = 0.0;
  int wins = 0;  // instances where `better` strictly beats `worse`
  int losses = 0;
  int ties = 0;
  // Per alpha, in the order of CompareReport::alphas.
  std::vector<bool> nemenyi_significant;
  std::vector<bool> sign_significant;
};

struct CompareReport {
  int instance_count = 0;
  std::vector<std::string> algorithms;  // ascending mean rank
  std::vector<double> mean_ranks;       // aligned with algorithms
  FriedmanResult friedman;
  std::vector<double> alphas;
  std::vector<bool> friedman_rejects;
  std::vector<std::optional<double>> critical_differences;
  std::vector<int> sign_thresholds;
  // Consecutive algorithms in rank order: (0,1), (1,2), ...
  std::vector<PairComparison> adjacent;
  // Every pair, better-ranked first.
  std::vector<PairComparison> pairs;
};

// Missing q entries fall back to studentized_range_quantile(alpha, k) and
// missing z entries to normal_quantile(alpha); when neither exists that
// alpha's test is reported as not significant.
CompareReport compare_report(const RankMatrix& m,
                             const std::vector<double>& alphas,
                             const std::map<double, double>& q_table = {},
                             const std::map<double, double>& z_table = {},
                             Direction direction = Direction::kLowerIsBetter);

std::string report_text(const CompareReport& report);
std::string report_json(const CompareReport& report);

// Reads the benchmark CSV (n,d,index,algorithm,...,mean,...) into a matrix
// with one row per (n, d, index) and one column per algorithm, using the
// mean column. Throws std::invalid_argument on malformed input or a missing
// cell.
RankMatrix rank_matrix_from_csv(std::istream& in);

}  // namespace mlst

#endif  // MLST_STATS_H_
