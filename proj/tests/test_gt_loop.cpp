#include <doctest.h>

#include <cmath>

#include "gtcut/error.hpp"
#include "gtcut/gt_loop.hpp"
#include "support.hpp"

using namespace gtcut;
using namespace gtcut::testing;

namespace {

// Flips the node whose flip lowers the cut the most; breaks the contract
// whenever such a node exists.
class WorseningSolver final : public Solver {
 public:
  SolveResult solve(const WeightedGraph& g, const SpinConfiguration& s0) const override {
    SpinConfiguration s = s0;
    NodeId worst = 0;
    double worst_delta = 0.0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      const double d = delta_cut_flip(g, s, v);
      if (d < worst_delta) {
        worst_delta = d;
        worst = v;
      }
    }
    if (worst_delta < 0.0) s.flip(worst);
    return SolveResult(g, s, cut_value(g, s), 0, {}, "worsening");
  }
  std::string_view name() const override { return "worsening"; }
};

double half_total(const WeightedGraph& g) { return g.total_weight() / 2.0; }

}  // namespace

TEST_CASE("path example stops after the second iteration") {
  const McaSolver base;
  const auto [result, trace] = gt_solve(path3(), base, SpinConfiguration(3));
  CHECK(result.cut() == 2.0);
  CHECK(trace.gt_iterations == 2);
  CHECK(trace.cut_sequence == std::vector<double>{2.0, 2.0});
  CHECK(result.method_id() == "mca-gt");
}

TEST_CASE("already optimal start takes one iteration") {
  const McaSolver base;
  const auto [result, trace] = gt_solve(WeightedGraph(2, {{0, 1, -1.0}}), base, SpinConfiguration(2));
  CHECK(result.cut() == 0.0);
  CHECK(trace.gt_iterations == 1);
}

TEST_CASE("gauge loop invariants on random graphs") {
  Rng rng(51);
  const McaSolver base;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(63);
    const auto g = random_graph(rng, n, rng.uniform(0.05, 0.5), Weights::kNormal);
    const auto s0 = trial % 4 == 0 ? random_spins(rng, n) : SpinConfiguration(n);
    const auto [result, trace] = gt_solve(g, base, s0);

    REQUIRE(trace.gt_iterations == static_cast<int>(trace.cut_sequence.size()));
    CHECK(trace.gt_iterations >= 1);
    CHECK(trace.gt_iterations <= GtConfig{}.max_iterations);
    for (std::size_t i = 1; i < trace.cut_sequence.size(); ++i) {
      CHECK(trace.cut_sequence[i] >= trace.cut_sequence[i - 1]);
    }
    // Dominance over a single base run from the same start.
    CHECK(result.cut() >= base.solve(g, s0).cut() - 1e-12);
    CHECK(result.cut() >= cut_value(g, s0) - 1e-12);

    // Frame consistency: the same configuration scores differently only by
    // the change in offset.
    for (std::size_t i = 0; i < trace.frame_cuts.size(); ++i) {
      const double lhs = trace.frame_cuts[i] - trace.cut_sequence[i];
      const double rhs = trace.frame_offsets[i] - half_total(g);
      CHECK(std::abs(lhs - rhs) <= 1e-9);
    }

    // The iteratively built frame equals one application of the cumulative gauge.
    CHECK(trace.frame_graph == apply_gauge(g, trace.cumulative_gauge));
    CHECK(apply_gauge(apply_gauge(g, trace.cumulative_gauge), trace.cumulative_gauge) == g);
  }
}

TEST_CASE("loop terminates early on integer weights") {
  Rng rng(53);
  const McaSolver base;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng, 5 + rng.below(40), 0.3, Weights::kDiscrete);
    const auto cfg = GtConfig::for_graph(g);
    CHECK(cfg.tolerance == 0.0);
    const auto trace = gt_solve(g, base, SpinConfiguration(g.node_count()), cfg).second;
    CHECK(trace.gt_iterations < cfg.max_iterations);
  }
  CHECK(GtConfig::for_graph(path3(0.5, 1.0)).tolerance == 1e-9);
}

TEST_CASE("max_iterations bounds the loop") {
  Rng rng(57);
  const McaSolver base;
  GtConfig cfg;
  cfg.max_iterations = 1;
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_graph(rng, 20, 0.3, Weights::kNormal);
    CHECK(gt_solve(g, base, SpinConfiguration(20), cfg).second.gt_iterations == 1);
  }
}

TEST_CASE("a solver that lowers the cut is reported") {
  const WorseningSolver bad;
  try {
    gt_solve(WeightedGraph(2, {{0, 1, -1.0}}), bad, SpinConfiguration(2));
    FAIL("expected a contract violation");
  } catch (const ContractViolation& e) {
    CHECK(std::string(e.what()).find("worsening") != std::string::npos);
  }
}

TEST_CASE("invalid configs are rejected") {
  const McaSolver base;
  GtConfig cfg;
  cfg.max_iterations = 0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.tolerance = -1.0;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg = {};
  cfg.m_init = 0;
  CHECK_THROWS_AS(multi_init_solve(path3(), base, cfg, 1), ConfigError);
  CHECK_THROWS_AS(gt_solve(path3(), base, SpinConfiguration(4)), InvalidInput);
}

TEST_CASE("multi-start gauge loop") {
  Rng rng(59);
  const McaSolver base;
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = random_graph(rng, 10 + rng.below(30), 0.3, Weights::kNormal);
    const std::size_t n = g.node_count();
    GtConfig cfg;
    const auto single = gt_solve(g, base, SpinConfiguration(n), cfg);
    int iterations = 0;
    const auto one = multi_init_solve(g, base, cfg, 5, &iterations);
    CHECK(one.configuration() == single.first.configuration());
    CHECK(iterations == single.second.gt_iterations);

    cfg.m_init = 10;
    const double ten = multi_init_solve(g, base, cfg, 5).cut();
    cfg.m_init = 100;
    const double hundred = multi_init_solve(g, base, cfg, 5).cut();
    CHECK(ten >= one.cut());
    CHECK(hundred >= ten);
  }
}
