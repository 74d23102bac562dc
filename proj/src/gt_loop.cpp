#include "gtcut/gt_loop.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "gtcut/error.hpp"
#include "gtcut/rng.hpp"

namespace gtcut {

using Clock = std::chrono::steady_clock;

void GtConfig::validate() const {
  if (max_iterations < 1) throw ConfigError("max_iterations must be >= 1");
  if (!(tolerance >= 0.0)) throw ConfigError("improvement tolerance must be >= 0");
  if (m_init < 1) throw ConfigError("m_init must be >= 1");
}

GtConfig GtConfig::for_graph(const WeightedGraph& g) {
  GtConfig cfg;
  bool integral = true;
  for (const auto& e : g.edges()) integral = integral && e.w == std::trunc(e.w);
  if (integral) cfg.tolerance = 0.0;
  return cfg;
}

std::pair<SolveResult, GtTrace> gt_solve(const WeightedGraph& g, const Solver& base, const SpinConfiguration& s0,
                                         const GtConfig& cfg) {
  cfg.validate();
  check_size(g, s0);
  const auto start = Clock::now();
  const std::size_t n = g.node_count();

  SpinConfiguration best = s0;
  double best_cut = cut_value(g, s0);
  std::int64_t examined = 0;

  GtTrace trace;
  trace.cumulative_gauge = GaugeVector::identity(n);
  trace.frame_graph = g;
  // Incumbent expressed in the current frame.
  SpinConfiguration frame_best = s0;

  for (int iter = 0; iter < cfg.max_iterations; ++iter) {
    const auto iter_start = Clock::now();
    const GaugeVector t = gauge_to_plus(frame_best);
    trace.frame_graph = apply_gauge(trace.frame_graph, t);
    trace.cumulative_gauge = compose_gauge(trace.cumulative_gauge, t);

    const SolveResult local = base.solve(trace.frame_graph, SpinConfiguration::all_plus(n));
    examined += local.node_flips_examined();
    // The all-plus start cuts nothing in any frame.
    if (local.cut() < -1e-9) {
      throw ContractViolation("solver '" + std::string(base.name()) + "' returned cut " +
                              std::to_string(local.cut()) + " below its all-plus start");
    }
    const SpinConfiguration mapped = apply_gauge(local.configuration(), trace.cumulative_gauge);
    const double c = cut_value(g, mapped);

    trace.cut_sequence.push_back(c);
    trace.frame_cuts.push_back(local.cut());
    trace.frame_offsets.push_back(trace.frame_graph.total_weight() / 2.0);
    trace.iteration_times.push_back(Clock::now() - iter_start);
    trace.gt_iterations = iter + 1;

    if (!(c > best_cut + cfg.tolerance)) break;
    best = mapped;
    best_cut = c;
    frame_best = local.configuration();
  }

  SolveResult result(g, std::move(best), best_cut, examined, Clock::now() - start,
                     std::string(base.name()) + "-gt");
  return {std::move(result), std::move(trace)};
}

SolveResult multi_init_solve(const WeightedGraph& g, const Solver& base, const GtConfig& cfg, std::uint64_t seed,
                             int* gt_iterations) {
  cfg.validate();
  const auto start = Clock::now();
  const std::size_t n = g.node_count();
  std::optional<SolveResult> best;
  int best_iterations = 0;
  std::int64_t examined = 0;
  for (int i = 0; i < cfg.m_init; ++i) {
    const SpinConfiguration s0 =
        i == 0 ? SpinConfiguration::all_plus(n) : random_config(n, derive_seed(seed, static_cast<std::uint64_t>(i)));
    auto [result, trace] = gt_solve(g, base, s0, cfg);
    examined += result.node_flips_examined();
    if (!best || result.cut() > best->cut()) {
      best_iterations = trace.gt_iterations;
      best.emplace(std::move(result));
    }
  }
  if (gt_iterations) *gt_iterations = best_iterations;
  return SolveResult(g, best->configuration(), best->cut(), examined, Clock::now() - start, best->method_id());
}

}  // namespace gtcut
