#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "gtcut/graph.hpp"
#include "gtcut/solvers.hpp"

namespace gtcut {

// structure2vec embedding + Q head. All seven blocks live in one flat
// buffer (theta1..theta7, row-major) so that SGD and finite differences can
// treat the parameters as a single vector; the block accessors below are
// views into it.
//
//   mu_v^{t+1} = relu(theta1 x_v + theta2 sum_{u~v} mu_u^t + theta3 sum_{u~v} relu(theta4 w_vu))
//   Q(v)       = theta5 . relu([theta6 sum_u mu_u^T ; theta7 mu_v^T])
class AgentParams {
 public:
  AgentParams() = default;
  // All-zero parameters.
  AgentParams(int embed_dim, int rounds);

  // Entries uniform in [-1/sqrt(p), 1/sqrt(p)].
  static AgentParams random(int embed_dim, int rounds, std::uint64_t seed);

  int embed_dim() const noexcept { return p_; }
  int rounds() const noexcept { return rounds_; }

  std::span<double> theta1() { return block(0, p_); }
  std::span<double> theta2() { return block(off2(), p_ * p_); }
  std::span<double> theta3() { return block(off3(), p_ * p_); }
  std::span<double> theta4() { return block(off4(), p_); }
  std::span<double> theta5() { return block(off5(), 2 * p_); }
  std::span<double> theta6() { return block(off6(), p_ * p_); }
  std::span<double> theta7() { return block(off7(), p_ * p_); }
  std::span<const double> theta1() const { return block(0, p_); }
  std::span<const double> theta2() const { return block(off2(), p_ * p_); }
  std::span<const double> theta3() const { return block(off3(), p_ * p_); }
  std::span<const double> theta4() const { return block(off4(), p_); }
  std::span<const double> theta5() const { return block(off5(), 2 * p_); }
  std::span<const double> theta6() const { return block(off6(), p_ * p_); }
  std::span<const double> theta7() const { return block(off7(), p_ * p_); }

  std::span<double> flat() noexcept { return data_; }
  std::span<const double> flat() const noexcept { return data_; }

  static std::size_t size_for(int embed_dim) {
    const auto p = static_cast<std::size_t>(embed_dim);
    return 4 * p * p + 4 * p;
  }

  // Throws InvalidInput on bad dimensions or non-finite entries.
  void validate() const;

  friend bool operator==(const AgentParams&, const AgentParams&) = default;

 private:
  std::size_t off2() const { return p_; }
  std::size_t off3() const { return off2() + p_ * p_; }
  std::size_t off4() const { return off3() + p_ * p_; }
  std::size_t off5() const { return off4() + p_; }
  std::size_t off6() const { return off5() + 2 * p_; }
  std::size_t off7() const { return off6() + p_ * p_; }
  std::span<double> block(std::size_t off, std::size_t len) { return std::span<double>(data_).subspan(off, len); }
  std::span<const double> block(std::size_t off, std::size_t len) const {
    return std::span<const double>(data_).subspan(off, len);
  }

  int p_ = 0;
  int rounds_ = 0;
  std::vector<double> data_;
};

// Partial solution during construction: nodes in `flipped` have been moved
// to T (spin -1).
class EpisodeState {
 public:
  explicit EpisodeState(const WeightedGraph& g);
  // Rebuilds a state from a flipped mask; the trajectory holds only the current cut.
  EpisodeState(const WeightedGraph& g, std::vector<std::uint8_t> flipped);

  const WeightedGraph& graph() const noexcept { return *graph_; }
  std::span<const std::uint8_t> flipped() const noexcept { return flipped_; }
  const SpinConfiguration& spins() const noexcept { return spins_; }
  int step() const noexcept { return step_; }
  const std::vector<double>& cut_trajectory() const noexcept { return cut_trajectory_; }
  bool is_flipped(NodeId v) const { return flipped_[v] != 0; }
  bool terminal() const noexcept { return step_ == static_cast<int>(flipped_.size()); }

  // Moves v to T and returns the change in cut. Throws InvalidInput if v is
  // out of range or already flipped.
  double flip(NodeId v);

 private:
  const WeightedGraph* graph_;
  std::vector<std::uint8_t> flipped_;
  SpinConfiguration spins_;
  int step_ = 0;
  std::vector<double> cut_trajectory_;
};

// Embeddings mu^T, row-major n x p.
std::vector<double> embed(const WeightedGraph& g, std::span<const std::uint8_t> flipped, const AgentParams& params);
std::vector<double> embed(const EpisodeState& state, const AgentParams& params);

// Q per node; flipped nodes are masked with -infinity.
std::vector<double> q_values(const WeightedGraph& g, std::span<const std::uint8_t> flipped, const AgentParams& params);
std::vector<double> q_values(const EpisodeState& state, const AgentParams& params);

// Index of the largest finite entry (lowest index on ties), or -1 if none.
int argmax_action(std::span<const double> q);

// From all-plus, flip the argmax-Q node |V| times and return the best
// prefix of the trajectory (earliest on ties, so the empty prefix wins
// when nothing beats it).
SolveResult greedy_construct(const WeightedGraph& g, const AgentParams& params);

struct ReplayTransition {
  std::shared_ptr<const WeightedGraph> graph;
  std::int64_t instance_id = 0;
  std::vector<std::uint8_t> state;
  NodeId action = 0;
  // sum_{k<K} gamma^k r_{t+k}
  double n_step_return = 0.0;
  std::vector<std::uint8_t> successor;
  bool terminal = false;
  // K: number of rewards folded into n_step_return.
  int discount_power = 1;
};

// y = R + gamma^K max_a Q(successor, a), 0 bootstrap at terminal states.
std::vector<double> td_targets(const AgentParams& params, std::span<const ReplayTransition> batch, double gamma);

// mean_i (y_i - Q(state_i, action_i))^2 with y held fixed.
double td_loss(const AgentParams& params, std::span<const ReplayTransition> batch, std::span<const double> targets);

struct LossAndGrad {
  double loss = 0.0;
  AgentParams grad;
};

// Squared n-step TD error and its gradient by backpropagation through the
// readout and every message-passing round. Targets are treated as constants.
LossAndGrad loss_and_grad(const AgentParams& params, std::span<const ReplayTransition> batch, double gamma);

struct TrainConfig {
  int embed_dim = 64;
  int rounds = 3;
  double gamma = 0.90;
  int n_step = 1;
  int episodes = 1000;
  double epsilon_start = 1.0;
  double epsilon_end = 0.05;
  // Fraction of episodes over which epsilon decays linearly.
  double epsilon_decay_fraction = 0.5;
  double learning_rate = 1e-3;
  int batch_size = 32;
  int replay_capacity = 10000;
  // Rescale the gradient when its L2 norm exceeds this; 0 disables.
  double grad_clip = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

// Supplies the training graph for an episode.
using InstanceSource = std::function<WeightedGraph(std::int64_t episode)>;

struct TrainStats {
  std::vector<double> episode_losses;
  std::int64_t sgd_steps = 0;
};

AgentParams train(const TrainConfig& config, const InstanceSource& source, TrainStats* stats = nullptr);

// Text model format:
//   gtcut-model v1
//   p <p> T <T>
//   theta1..theta7, row-major, one value per line
void save_params(const AgentParams& params, std::ostream& out);
void save_params(const AgentParams& params, const std::filesystem::path& path);
AgentParams load_params(std::istream& in);
AgentParams load_params(const std::filesystem::path& path);

// Greedy construction as a Solver. A non-all-plus start is handled by
// gauging it to all-plus first, so the contract holds for any s0.
class S2vSolver final : public Solver {
 public:
  explicit S2vSolver(AgentParams params) : params_(std::move(params)) {}
  SolveResult solve(const WeightedGraph& g, const SpinConfiguration& s0) const override;
  std::string_view name() const override { return "s2v"; }
  const AgentParams& params() const noexcept { return params_; }

 private:
  AgentParams params_;
};

}  // namespace gtcut
