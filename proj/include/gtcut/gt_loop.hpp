#pragma once

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

#include "gtcut/gauge.hpp"
#include "gtcut/graph.hpp"
#include "gtcut/solvers.hpp"

namespace gtcut {

struct GtConfig {
  int max_iterations = 50;
  // A restart must beat the incumbent by more than this to continue.
  double tolerance = 1e-9;
  int m_init = 1;

  void validate() const;

  // Default config with tolerance 0 when every weight is an integer.
  static GtConfig for_graph(const WeightedGraph& g);
};

struct GtTrace {
  // Original-frame cut of the base solver's output, one per iteration.
  std::vector<double> cut_sequence;
  // The same configuration scored in the frame it was solved in, and that
  // frame's Ising offset (sum W / 2).
  std::vector<double> frame_cuts;
  std::vector<double> frame_offsets;
  int gt_iterations = 0;
  // Product of every gauge applied; maps original-frame spins to the last frame.
  GaugeVector cumulative_gauge;
  // Last transformed graph, built iteratively one gauge at a time.
  WeightedGraph frame_graph;
  std::vector<std::chrono::nanoseconds> iteration_times;
};

// Repeatedly gauges the incumbent to all-plus, reruns base from all-plus in
// that frame, maps the answer back and keeps it while the original-frame cut
// improves. Throws ContractViolation if base returns a configuration that
// cuts less than the all-plus start of its frame.
std::pair<SolveResult, GtTrace> gt_solve(const WeightedGraph& g, const Solver& base, const SpinConfiguration& s0,
                                         const GtConfig& cfg = {});

// gt_solve from m_init starts: start 0 is all-plus, start i > 0 is
// random_config(n, derive_seed(seed, i)). Best cut wins, lowest start on ties.
SolveResult multi_init_solve(const WeightedGraph& g, const Solver& base, const GtConfig& cfg, std::uint64_t seed,
                             int* gt_iterations = nullptr);

// Adapts a solver so every call runs through gt_solve.
class GaugeLoopSolver final : public Solver {
 public:
  GaugeLoopSolver(const Solver& base, GtConfig cfg) : base_(base), cfg_(cfg) {}
  SolveResult solve(const WeightedGraph& g, const SpinConfiguration& s0) const override {
    return gt_solve(g, base_, s0, cfg_).first;
  }
  std::string_view name() const override { return "gt"; }

 private:
  const Solver& base_;
  GtConfig cfg_;
};

}  // namespace gtcut
