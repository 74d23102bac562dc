#include "gtcut/solvers.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gtcut/error.hpp"
#include "gtcut/rng.hpp"

namespace gtcut {

using Clock = std::chrono::steady_clock;

SolveResult::SolveResult(const WeightedGraph& g, SpinConfiguration configuration, double claimed_cut,
                         std::int64_t node_flips_examined, std::chrono::nanoseconds wall_time,
                         std::string method_id)
    : configuration_(std::move(configuration)),
      cut_(cut_value(g, configuration_)),
      node_flips_examined_(node_flips_examined),
      wall_time_(wall_time),
      method_id_(std::move(method_id)) {
  if (std::abs(cut_ - claimed_cut) > 1e-9 * (1.0 + std::abs(cut_))) {
    throw std::logic_error(method_id_ + " reported cut " + std::to_string(claimed_cut) +
                           " but its configuration cuts " + std::to_string(cut_));
  }
}

SolveResult exact_brute_force(const WeightedGraph& g, std::size_t node_limit) {
  const auto start = Clock::now();
  const std::size_t n = g.node_count();
  if (n > node_limit) {
    throw CapacityError("exact solver limited to " + std::to_string(node_limit) + " nodes, instance has " +
                        std::to_string(n));
  }
  SpinConfiguration s(n);
  if (n <= 1) return SolveResult(g, s, 0.0, 0, Clock::now() - start, "exact");

  // Gray code over nodes 1..n-1: step k flips node 1 + ctz(k).
  double cut = 0.0;
  double best_cut = 0.0;
  SpinConfiguration best = s;
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  std::int64_t examined = 0;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const NodeId v = NodeId(1 + std::countr_zero(k));
    double delta = 0.0;
    for (const auto& nb : g.neighbors(v)) delta += nb.w * s[nb.node] * s[v];
    s.flip(v);
    cut += delta;
    ++examined;
    if (cut > best_cut) {
      best_cut = cut;
      best = s;
    }
  }
  // Re-sum to drop accumulated rounding before the result check.
  best_cut = cut_value(g, best);
  return SolveResult(g, std::move(best), best_cut, examined, Clock::now() - start, "exact");
}

SolveResult mca(const WeightedGraph& g, const SpinConfiguration& s0, MoveRule rule) {
  const auto start = Clock::now();
  check_size(g, s0);
  const std::size_t n = g.node_count();
  SpinConfiguration s = s0;
  std::vector<double> gain(n);
  for (NodeId v = 0; v < n; ++v) gain[v] = delta_cut_flip(g, s, v);
  std::vector<char> moved(n, 0);
  std::int64_t examined = 0;

  auto admissible = [&](NodeId v) {
    return rule == MoveRule::kAnyFlip || (s[v] == 1 && !moved[v]);
  };

  for (;;) {
    NodeId pick = NodeId(n);
    double best = 0.0;
    for (NodeId v = 0; v < n; ++v) {
      ++examined;
      if (admissible(v) && gain[v] > best) {
        best = gain[v];
        pick = v;
      }
    }
    if (pick == n) break;
    s.flip(pick);
    moved[pick] = 1;
    gain[pick] = -gain[pick];
    for (const auto& nb : g.neighbors(pick)) {
      // Edge (pick, u) switched crossing state: u's gain shifts by 2 w s_u s_pick.
      gain[nb.node] += 2.0 * nb.w * s[nb.node] * s[pick];
    }
  }
  return SolveResult(g, s, cut_value(g, s), examined, Clock::now() - start, "mca");
}

SpinConfiguration random_config(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::int8_t> spins(n);
  for (auto& s : spins) s = (rng.next() >> 63) ? std::int8_t{-1} : std::int8_t{1};
  return SpinConfiguration(std::move(spins));
}

SolveResult ExactSolver::solve(const WeightedGraph& g, const SpinConfiguration& s0) const {
  check_size(g, s0);
  return exact_brute_force(g, node_limit_);
}

}  // namespace gtcut
