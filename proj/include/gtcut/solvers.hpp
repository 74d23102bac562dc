#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

#include "gtcut/graph.hpp"

namespace gtcut {

// Outcome of one solver call, in the frame of the graph it was solved on.
// The constructor re-evaluates the cut and throws std::logic_error if the
// claimed value disagrees by more than 1e-9 (1 + |cut|).
class SolveResult {
 public:
  SolveResult(const WeightedGraph& g, SpinConfiguration configuration, double claimed_cut,
               std::int64_t node_flips_examined, std::chrono::nanoseconds wall_time, std::string method_id);

  const SpinConfiguration& configuration() const noexcept { return configuration_; }
  double cut() const noexcept { return cut_; }
  std::int64_t node_flips_examined() const noexcept { return node_flips_examined_; }
  std::chrono::nanoseconds wall_time() const noexcept { return wall_time_; }
  const std::string& method_id() const noexcept { return method_id_; }

 private:
  SpinConfiguration configuration_;
  double cut_;
  std::int64_t node_flips_examined_;
  std::chrono::nanoseconds wall_time_;
  std::string method_id_;
};

// Contract: solve(g, s0).cut() >= cut_value(g, s0). The gauge loop relies on
// it for monotonicity.
class Solver {
 public:
  virtual ~Solver() = default;
  virtual SolveResult solve(const WeightedGraph& g, const SpinConfiguration& s0) const = 0;
  virtual std::string_view name() const = 0;
};

inline constexpr std::size_t kDefaultExactNodeLimit = 24;

// Exhaustive search over the 2^(n-1) partitions with node 0 pinned to +1,
// visited in Gray-code order with O(deg) cut updates. Returns the first
// optimum encountered.
SolveResult exact_brute_force(const WeightedGraph& g, std::size_t node_limit = kDefaultExactNodeLimit);

// Which moves MaxcutApprox may make.
enum class MoveRule {
  // Only U -> T moves (+1 to -1), each node at most once: the constructive
  // greedy that starts from a set and grows T.
  kInsertOnly,
  // Any single flip; terminates at a 1-flip local optimum.
  kAnyFlip,
};

// Greedy: repeatedly flip the admissible node with the largest strictly
// positive cut gain, lowest index on ties, until none remains.
SolveResult mca(const WeightedGraph& g, const SpinConfiguration& s0, MoveRule rule = MoveRule::kInsertOnly);

// Independent fair +-1 spins, deterministic in seed.
SpinConfiguration random_config(std::size_t n, std::uint64_t seed);

class ExactSolver final : public Solver {
 public:
  explicit ExactSolver(std::size_t node_limit = kDefaultExactNodeLimit) : node_limit_(node_limit) {}
  SolveResult solve(const WeightedGraph& g, const SpinConfiguration& s0) const override;
  std::string_view name() const override { return "exact"; }

 private:
  std::size_t node_limit_;
};

class McaSolver final : public Solver {
 public:
  explicit McaSolver(MoveRule rule = MoveRule::kInsertOnly) : rule_(rule) {}
  SolveResult solve(const WeightedGraph& g, const SpinConfiguration& s0) const override {
    return mca(g, s0, rule_);
  }
  std::string_view name() const override { return "mca"; }

 private:
  MoveRule rule_;
};

}  // namespace gtcut
