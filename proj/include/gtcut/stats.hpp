#pragma once

#include <span>
#include <utility>
#include <vector>

namespace gtcut {

// c / c_opt; throws UndefinedRatio when c_opt == 0.
double approx_ratio(double cut, double c_opt);

struct MeanSe {
  double mean = 0.0;
  // Sample standard deviation / sqrt(N); 0 for N < 2.
  double standard_error = 0.0;
  std::size_t count = 0;
};

MeanSe mean_and_standard_error(std::span<const double> values);

struct WilcoxonResult {
  // Rank sum of the positive differences (midranks on ties).
  double w_plus = 0.0;
  // P(W+ >= observed) under H0; alternative a > b.
  double p_one_sided = 1.0;
  double p_two_sided = 1.0;
  // Pairs left after dropping zero differences.
  int n_used = 0;
  bool exact = true;
};

inline constexpr int kWilcoxonExactLimit = 20;

// Paired signed-rank test on d = a - b. Exact null distribution (every sign
// pattern over the observed midranks) for up to kWilcoxonExactLimit nonzero
// differences, otherwise the normal approximation with tie and continuity
// corrections. Throws DegenerateTest if every difference is zero.
WilcoxonResult wilcoxon_signed_rank(std::span<const std::pair<double, double>> pairs);

// Midranks of |values| (1-based).
std::vector<double> abs_midranks(std::span<const double> values);

}  // namespace gtcut
