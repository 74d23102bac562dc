#include "gtcut/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gtcut/error.hpp"

namespace gtcut {

double approx_ratio(double cut, double c_opt) {
  if (c_opt == 0.0) throw UndefinedRatio("approximation ratio undefined for a zero optimum");
  return cut / c_opt;
}

MeanSe mean_and_standard_error(std::span<const double> values) {
  MeanSe out;
  out.count = values.size();
  if (values.empty()) return out;
  out.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  if (values.size() < 2) return out;
  double ss = 0.0;
  for (double v : values) ss += (v - out.mean) * (v - out.mean);
  const double sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  out.standard_error = sd / std::sqrt(static_cast<double>(values.size()));
  return out;
}

std::vector<double> abs_midranks(std::span<const double> values) {
  const std::size_t k = values.size();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return std::abs(values[a]) < std::abs(values[b]); });
  std::vector<double> ranks(k);
  for (std::size_t i = 0; i < k;) {
    std::size_t j = i;
    while (j + 1 < k && std::abs(values[order[j + 1]]) == std::abs(values[order[i]])) ++j;
    const double mid = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t r = i; r <= j; ++r) ranks[order[r]] = mid;
    i = j + 1;
  }
  return ranks;
}

namespace {

double normal_upper_tail(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

}  // namespace

WilcoxonResult wilcoxon_signed_rank(std::span<const std::pair<double, double>> pairs) {
  std::vector<double> d;
  d.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a - b != 0.0) d.push_back(a - b);
  }
  if (d.empty()) throw DegenerateTest("all paired differences are zero");

  const auto ranks = abs_midranks(d);
  const int k = static_cast<int>(d.size());
  WilcoxonResult out;
  out.n_used = k;
  for (int i = 0; i < k; ++i) {
    if (d[i] > 0) out.w_plus += ranks[i];
  }

  if (k <= kWilcoxonExactLimit) {
    // Midranks are multiples of 1/2, so doubled ranks are integers and the
    // null distribution of 2 W+ is a subset-sum count over them.
    std::vector<int> doubled(k);
    int total = 0;
    for (int i = 0; i < k; ++i) {
      doubled[i] = static_cast<int>(std::lround(2.0 * ranks[i]));
      total += doubled[i];
    }
    std::vector<double> count(static_cast<std::size_t>(total) + 1, 0.0);
    count[0] = 1.0;
    for (int r : doubled) {
      for (int s = total; s >= r; --s) count[s] += count[s - r];
    }
    const int observed = static_cast<int>(std::lround(2.0 * out.w_plus));
    const double patterns = std::ldexp(1.0, k);
    double upper = 0.0, lower = 0.0;
    for (int s = 0; s <= total; ++s) {
      if (s >= observed) upper += count[s];
      if (s <= observed) lower += count[s];
    }
    out.p_one_sided = upper / patterns;
    out.p_two_sided = std::min(1.0, 2.0 * std::min(upper, lower) / patterns);
    out.exact = true;
    return out;
  }

  // Normal approximation with tie correction.
  const double kd = static_cast<double>(k);
  const double mean = kd * (kd + 1.0) / 4.0;
  double variance = kd * (kd + 1.0) * (2.0 * kd + 1.0) / 24.0;
  std::vector<double> sorted(ranks);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    variance -= (t * t * t - t) / 48.0;
    i = j;
  }
  const double sd = std::sqrt(variance);
  const double z_upper = (out.w_plus - mean - 0.5) / sd;
  const double z_abs = std::max(0.0, std::abs(out.w_plus - mean) - 0.5) / sd;
  out.p_one_sided = normal_upper_tail(z_upper);
  out.p_two_sided = std::min(1.0, 2.0 * normal_upper_tail(z_abs));
  out.exact = false;
  return out;
}

}  // namespace gtcut
