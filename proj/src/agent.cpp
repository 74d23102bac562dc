#include "gtcut/agent.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include "gtcut/error.hpp"
#include "gtcut/gauge.hpp"
#include "gtcut/numfmt.hpp"
#include "gtcut/rng.hpp"

namespace gtcut {

AgentParams::AgentParams(int embed_dim, int rounds) : p_(embed_dim), rounds_(rounds) {
  if (embed_dim < 1) throw InvalidInput("embedding width must be >= 1");
  if (rounds < 0) throw InvalidInput("message-passing rounds must be >= 0");
  data_.assign(size_for(embed_dim), 0.0);
}

AgentParams AgentParams::random(int embed_dim, int rounds, std::uint64_t seed) {
  AgentParams params(embed_dim, rounds);
  Rng rng(seed);
  const double scale = 1.0 / std::sqrt(static_cast<double>(embed_dim));
  for (auto& x : params.data_) x = rng.uniform(-scale, scale);
  return params;
}

void AgentParams::validate() const {
  if (p_ < 1 || rounds_ < 0) throw InvalidInput("invalid parameter dimensions");
  if (data_.size() != size_for(p_)) throw InvalidInput("parameter buffer does not match embedding width");
  for (double x : data_) {
    if (!std::isfinite(x)) throw InvalidInput("non-finite parameter");
  }
}

EpisodeState::EpisodeState(const WeightedGraph& g)
    : graph_(&g), flipped_(g.node_count(), 0), spins_(g.node_count()), cut_trajectory_{0.0} {}

EpisodeState::EpisodeState(const WeightedGraph& g, std::vector<std::uint8_t> flipped)
    : graph_(&g), flipped_(std::move(flipped)) {
  if (flipped_.size() != g.node_count()) throw InvalidInput("flipped mask does not match graph");
  std::vector<std::int8_t> spins(flipped_.size());
  for (std::size_t v = 0; v < flipped_.size(); ++v) {
    spins[v] = flipped_[v] ? std::int8_t{-1} : std::int8_t{1};
    step_ += flipped_[v] ? 1 : 0;
  }
  spins_ = SpinConfiguration(std::move(spins));
  cut_trajectory_.push_back(cut_value(g, spins_));
}

double EpisodeState::flip(NodeId v) {
  if (v >= flipped_.size()) throw InvalidInput("action " + std::to_string(v) + " out of range");
  if (flipped_[v]) throw InvalidInput("node " + std::to_string(v) + " already flipped");
  const double reward = delta_cut_flip(*graph_, spins_, v);
  spins_.flip(v);
  flipped_[v] = 1;
  ++step_;
  cut_trajectory_.push_back(cut_trajectory_.back() + reward);
  return reward;
}

namespace {

// out += M x, M p x p row-major.
void matvec_add(std::span<const double> m, const double* x, double* out, int p) {
  for (int i = 0; i < p; ++i) {
    const double* row = m.data() + static_cast<std::size_t>(i) * p;
    double acc = 0.0;
    for (int j = 0; j < p; ++j) acc += row[j] * x[j];
    out[i] += acc;
  }
}

// out += M^T x.
void matvec_t_add(std::span<const double> m, const double* x, double* out, int p) {
  for (int i = 0; i < p; ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    const double* row = m.data() + static_cast<std::size_t>(i) * p;
    for (int j = 0; j < p; ++j) out[j] += row[j] * xi;
  }
}

// M += a b^T.
void outer_add(std::span<double> m, const double* a, const double* b, int p) {
  for (int i = 0; i < p; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    double* row = m.data() + static_cast<std::size_t>(i) * p;
    for (int j = 0; j < p; ++j) row[j] += ai * b[j];
  }
}

inline double relu(double x) { return x > 0.0 ? x : 0.0; }

constexpr int kAllNodes = -1;

// Activations of one forward pass, kept for backpropagation.
struct Forward {
  int n = 0;
  int p = 0;
  int rounds = 0;
  // Per node: sum of positive and of negative incident weights. The edge
  // feature relu(theta4_i w) summed over neighbours is theta4_i times one of them.
  std::vector<double> pos_weight, neg_weight;
  std::vector<double> edge_feat;              // n x p
  std::vector<std::vector<double>> nsum;      // per round, n x p (round 0 is all zero)
  std::vector<std::vector<double>> pre;       // per round, n x p
  std::vector<std::vector<double>> mu;        // rounds + 1 entries, n x p
  std::vector<double> pooled;                 // p
  std::vector<double> head_global;            // theta6 pooled
  std::vector<double> head_node;              // n x p, theta7 mu_v (only rows that were requested)
  std::vector<double> q;                      // n, -inf where masked or not requested
};

Forward forward(const WeightedGraph& g, std::span<const std::uint8_t> flipped, const AgentParams& params,
                int only_node) {
  if (flipped.size() != g.node_count()) throw InvalidInput("state does not match graph");
  params.validate();
  Forward f;
  f.n = static_cast<int>(g.node_count());
  f.p = params.embed_dim();
  f.rounds = params.rounds();
  const int n = f.n, p = f.p;
  const std::size_t np = static_cast<std::size_t>(n) * p;

  const auto t1 = params.theta1(), t2 = params.theta2(), t3 = params.theta3(), t4 = params.theta4();
  const auto t5 = params.theta5(), t6 = params.theta6(), t7 = params.theta7();

  f.pos_weight.assign(n, 0.0);
  f.neg_weight.assign(n, 0.0);
  for (int v = 0; v < n; ++v) {
    for (const auto& nb : g.neighbors(NodeId(v))) {
      if (nb.w > 0) f.pos_weight[v] += nb.w;
      else f.neg_weight[v] += nb.w;
    }
  }
  f.edge_feat.assign(np, 0.0);
  std::vector<double> edge_term(np, 0.0);
  for (int v = 0; v < n; ++v) {
    double* e = &f.edge_feat[static_cast<std::size_t>(v) * p];
    for (int i = 0; i < p; ++i) {
      e[i] = t4[i] > 0 ? t4[i] * f.pos_weight[v] : (t4[i] < 0 ? t4[i] * f.neg_weight[v] : 0.0);
    }
    matvec_add(t3, e, &edge_term[static_cast<std::size_t>(v) * p], p);
  }

  f.mu.assign(1, std::vector<double>(np, 0.0));
  for (int t = 0; t < f.rounds; ++t) {
    const auto& prev = f.mu.back();
    std::vector<double> nsum(np, 0.0);
    std::vector<double> pre(edge_term);
    if (t > 0) {
      for (int v = 0; v < n; ++v) {
        double* s = &nsum[static_cast<std::size_t>(v) * p];
        for (const auto& nb : g.neighbors(NodeId(v))) {
          const double* mu_u = &prev[static_cast<std::size_t>(nb.node) * p];
          for (int i = 0; i < p; ++i) s[i] += mu_u[i];
        }
        matvec_add(t2, s, &pre[static_cast<std::size_t>(v) * p], p);
      }
    }
    for (int v = 0; v < n; ++v) {
      if (!flipped[v]) continue;
      double* row = &pre[static_cast<std::size_t>(v) * p];
      for (int i = 0; i < p; ++i) row[i] += t1[i];
    }
    std::vector<double> next(np);
    for (std::size_t k = 0; k < np; ++k) next[k] = relu(pre[k]);
    f.nsum.push_back(std::move(nsum));
    f.pre.push_back(std::move(pre));
    f.mu.push_back(std::move(next));
  }

  const auto& mu = f.mu.back();
  f.pooled.assign(p, 0.0);
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < p; ++i) f.pooled[i] += mu[static_cast<std::size_t>(v) * p + i];
  }
  f.head_global.assign(p, 0.0);
  matvec_add(t6, f.pooled.data(), f.head_global.data(), p);
  double global_term = 0.0;
  for (int i = 0; i < p; ++i) global_term += t5[i] * relu(f.head_global[i]);

  f.head_node.assign(np, 0.0);
  f.q.assign(n, -std::numeric_limits<double>::infinity());
  for (int v = 0; v < n; ++v) {
    if (only_node != kAllNodes && v != only_node) continue;
    if (only_node == kAllNodes && flipped[v]) continue;
    double* h = &f.head_node[static_cast<std::size_t>(v) * p];
    matvec_add(t7, &mu[static_cast<std::size_t>(v) * p], h, p);
    double q = global_term;
    for (int i = 0; i < p; ++i) q += t5[p + i] * relu(h[i]);
    f.q[v] = q;
  }
  return f;
}

// Accumulates dq * dQ(action)/dparams into grad.
void backward(const Forward& f, const WeightedGraph& g, std::span<const std::uint8_t> flipped,
              const AgentParams& params, int action, double dq, AgentParams& grad) {
  const int n = f.n, p = f.p;
  const std::size_t np = static_cast<std::size_t>(n) * p;
  const auto t2 = params.theta2(), t3 = params.theta3(), t4 = params.theta4();
  const auto t5 = params.theta5(), t6 = params.theta6(), t7 = params.theta7();
  auto g1 = grad.theta1(), g2 = grad.theta2(), g3 = grad.theta3(), g4 = grad.theta4();
  auto g5 = grad.theta5(), g6 = grad.theta6(), g7 = grad.theta7();

  const auto& mu_top = f.mu.back();
  const double* h_node = &f.head_node[static_cast<std::size_t>(action) * p];
  const double* mu_a = &mu_top[static_cast<std::size_t>(action) * p];

  std::vector<double> d_global(p, 0.0), d_node(p, 0.0);
  for (int i = 0; i < p; ++i) {
    g5[i] += dq * relu(f.head_global[i]);
    g5[p + i] += dq * relu(h_node[i]);
    if (f.head_global[i] > 0) d_global[i] = dq * t5[i];
    if (h_node[i] > 0) d_node[i] = dq * t5[p + i];
  }
  outer_add(g6, d_global.data(), f.pooled.data(), p);
  outer_add(g7, d_node.data(), mu_a, p);

  std::vector<double> d_pooled(p, 0.0), d_mu_a(p, 0.0);
  matvec_t_add(t6, d_global.data(), d_pooled.data(), p);
  matvec_t_add(t7, d_node.data(), d_mu_a.data(), p);

  std::vector<double> d_mu(np);
  for (int v = 0; v < n; ++v) {
    std::copy(d_pooled.begin(), d_pooled.end(), d_mu.begin() + static_cast<std::ptrdiff_t>(v) * p);
  }
  for (int i = 0; i < p; ++i) d_mu[static_cast<std::size_t>(action) * p + i] += d_mu_a[i];

  std::vector<double> d_pre_total(np, 0.0);
  std::vector<double> d_pre(np);
  for (int t = f.rounds - 1; t >= 0; --t) {
    const auto& pre = f.pre[t];
    for (std::size_t k = 0; k < np; ++k) d_pre[k] = pre[k] > 0 ? d_mu[k] : 0.0;
    for (int v = 0; v < n; ++v) {
      const double* dp = &d_pre[static_cast<std::size_t>(v) * p];
      if (flipped[v]) {
        for (int i = 0; i < p; ++i) g1[i] += dp[i];
      }
    }
    for (std::size_t k = 0; k < np; ++k) d_pre_total[k] += d_pre[k];
    if (t == 0) break;
    // Message term theta2 * sum_{u~v} mu_u^t.
    std::vector<double> d_sum(np, 0.0);
    for (int v = 0; v < n; ++v) {
      const double* dp = &d_pre[static_cast<std::size_t>(v) * p];
      outer_add(g2, dp, &f.nsum[t][static_cast<std::size_t>(v) * p], p);
      matvec_t_add(t2, dp, &d_sum[static_cast<std::size_t>(v) * p], p);
    }
    std::fill(d_mu.begin(), d_mu.end(), 0.0);
    for (int u = 0; u < n; ++u) {
      double* dm = &d_mu[static_cast<std::size_t>(u) * p];
      for (const auto& nb : g.neighbors(NodeId(u))) {
        const double* ds = &d_sum[static_cast<std::size_t>(nb.node) * p];
        for (int i = 0; i < p; ++i) dm[i] += ds[i];
      }
    }
  }

  // Edge term theta3 * e_v enters every round with the same e_v.
  std::vector<double> d_edge(p);
  for (int v = 0; v < n; ++v) {
    const double* dp = &d_pre_total[static_cast<std::size_t>(v) * p];
    outer_add(g3, dp, &f.edge_feat[static_cast<std::size_t>(v) * p], p);
    std::fill(d_edge.begin(), d_edge.end(), 0.0);
    matvec_t_add(t3, dp, d_edge.data(), p);
    for (int i = 0; i < p; ++i) {
      const double slope = t4[i] > 0 ? f.pos_weight[v] : (t4[i] < 0 ? f.neg_weight[v] : 0.0);
      g4[i] += d_edge[i] * slope;
    }
  }
}

double max_q(std::span<const double> q) {
  double best = -std::numeric_limits<double>::infinity();
  for (double x : q) best = std::max(best, x);
  return std::isfinite(best) ? best : 0.0;
}

}  // namespace

std::vector<double> embed(const WeightedGraph& g, std::span<const std::uint8_t> flipped, const AgentParams& params) {
  return forward(g, flipped, params, kAllNodes).mu.back();
}

std::vector<double> embed(const EpisodeState& state, const AgentParams& params) {
  return embed(state.graph(), state.flipped(), params);
}

std::vector<double> q_values(const WeightedGraph& g, std::span<const std::uint8_t> flipped, const AgentParams& params) {
  return forward(g, flipped, params, kAllNodes).q;
}

std::vector<double> q_values(const EpisodeState& state, const AgentParams& params) {
  return q_values(state.graph(), state.flipped(), params);
}

int argmax_action(std::span<const double> q) {
  int best = -1;
  for (int v = 0; v < static_cast<int>(q.size()); ++v) {
    if (!std::isfinite(q[v])) continue;
    if (best < 0 || q[v] > q[best]) best = v;
  }
  return best;
}

SolveResult greedy_construct(const WeightedGraph& g, const AgentParams& params) {
  const auto start = std::chrono::steady_clock::now();
  EpisodeState state(g);
  std::vector<NodeId> actions;
  std::int64_t examined = 0;
  while (!state.terminal()) {
    const auto q = q_values(state, params);
    examined += static_cast<std::int64_t>(q.size());
    const int a = argmax_action(q);
    if (a < 0) break;
    state.flip(NodeId(a));
    actions.push_back(NodeId(a));
  }
  const auto& traj = state.cut_trajectory();
  const auto best_step = static_cast<std::size_t>(std::max_element(traj.begin(), traj.end()) - traj.begin());
  std::vector<std::uint8_t> flipped(g.node_count(), 0);
  for (std::size_t k = 0; k < best_step; ++k) flipped[actions[k]] = 1;
  EpisodeState best(g, std::move(flipped));
  return SolveResult(g, best.spins(), traj[best_step], examined, std::chrono::steady_clock::now() - start, "s2v");
}

std::vector<double> td_targets(const AgentParams& params, std::span<const ReplayTransition> batch, double gamma) {
  std::vector<double> targets;
  targets.reserve(batch.size());
  for (const auto& tr : batch) {
    double y = tr.n_step_return;
    if (!tr.terminal) {
      const auto q = q_values(*tr.graph, tr.successor, params);
      y += std::pow(gamma, tr.discount_power) * max_q(q);
    }
    targets.push_back(y);
  }
  return targets;
}

double td_loss(const AgentParams& params, std::span<const ReplayTransition> batch, std::span<const double> targets) {
  if (batch.empty()) throw InvalidInput("empty batch");
  if (targets.size() != batch.size()) throw InvalidInput("target count does not match batch");
  double loss = 0.0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const auto& tr = batch[i];
    const auto f = forward(*tr.graph, tr.state, params, static_cast<int>(tr.action));
    const double err = targets[i] - f.q[tr.action];
    loss += err * err;
  }
  return loss / static_cast<double>(batch.size());
}

LossAndGrad loss_and_grad(const AgentParams& params, std::span<const ReplayTransition> batch, double gamma) {
  if (batch.empty()) throw InvalidInput("empty batch");
  const auto targets = td_targets(params, batch, gamma);
  LossAndGrad out{0.0, AgentParams(params.embed_dim(), params.rounds())};
  const double scale = 1.0 / static_cast<double>(batch.size());
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const auto& tr = batch[i];
    if (tr.action >= tr.graph->node_count() || tr.state[tr.action]) {
      throw InvalidInput("transition action is not an available node");
    }
    const int a = static_cast<int>(tr.action);
    const auto f = forward(*tr.graph, tr.state, params, a);
    const double err = targets[i] - f.q[a];
    out.loss += err * err * scale;
    backward(f, *tr.graph, tr.state, params, a, -2.0 * err * scale, out.grad);
  }
  return out;
}

void TrainConfig::validate() const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw ConfigError("gamma must lie in [0, 1]");
  if (embed_dim < 1 || rounds < 0) throw ConfigError("invalid network dimensions");
  if (n_step < 1 || episodes < 1 || batch_size < 1 || replay_capacity < 1) {
    throw ConfigError("n_step, episodes, batch size and replay capacity must be positive");
  }
  if (!(learning_rate > 0.0)) throw ConfigError("learning rate must be positive");
  if (!(epsilon_decay_fraction > 0.0 && epsilon_decay_fraction <= 1.0)) {
    throw ConfigError("epsilon decay fraction must lie in (0, 1]");
  }
  if (!(epsilon_start >= 0.0 && epsilon_start <= 1.0 && epsilon_end >= 0.0 && epsilon_end <= 1.0)) {
    throw ConfigError("epsilon bounds must lie in [0, 1]");
  }
  if (grad_clip < 0.0) throw ConfigError("gradient clip must be >= 0");
}

AgentParams train(const TrainConfig& config, const InstanceSource& source, TrainStats* stats) {
  config.validate();
  AgentParams params = AgentParams::random(config.embed_dim, config.rounds, derive_seed(config.seed, 0));
  Rng explore(derive_seed(config.seed, 1));
  Rng sampler(derive_seed(config.seed, 2));

  std::vector<ReplayTransition> replay;
  replay.reserve(static_cast<std::size_t>(config.replay_capacity));
  std::size_t replay_next = 0;
  auto push = [&](ReplayTransition tr) {
    if (replay.size() < static_cast<std::size_t>(config.replay_capacity)) {
      replay.push_back(std::move(tr));
    } else {
      replay[replay_next] = std::move(tr);
      replay_next = (replay_next + 1) % replay.size();
    }
  };

  const double decay_episodes = config.epsilon_decay_fraction * config.episodes;
  std::vector<ReplayTransition> batch(static_cast<std::size_t>(config.batch_size));

  for (int ep = 0; ep < config.episodes; ++ep) {
    auto graph = std::make_shared<const WeightedGraph>(source(ep));
    const int n = static_cast<int>(graph->node_count());
    const double frac = std::min(1.0, static_cast<double>(ep) / decay_episodes);
    const double epsilon = config.epsilon_start + (config.epsilon_end - config.epsilon_start) * frac;

    EpisodeState state(*graph);
    std::vector<std::vector<std::uint8_t>> states{{state.flipped().begin(), state.flipped().end()}};
    std::vector<NodeId> actions;
    std::vector<double> rewards;
    double loss_sum = 0.0;
    int loss_count = 0;

    // Transition starting at step t, folding up to n_step rewards.
    auto emit = [&](int t) {
      const int k = std::min(config.n_step, n - t);
      double ret = 0.0, discount = 1.0;
      for (int j = 0; j < k; ++j) {
        ret += discount * rewards[t + j];
        discount *= config.gamma;
      }
      ReplayTransition tr;
      tr.graph = graph;
      tr.instance_id = ep;
      tr.state = states[t];
      tr.action = actions[t];
      tr.n_step_return = ret;
      tr.successor = states[t + k];
      tr.terminal = t + k == n;
      tr.discount_power = k;
      push(std::move(tr));
    };

    for (int step = 0; step < n; ++step) {
      int a;
      if (explore.uniform() < epsilon) {
        const int remaining = n - step;
        int pick = static_cast<int>(explore.below(static_cast<std::uint64_t>(remaining)));
        a = 0;
        for (int v = 0; v < n; ++v) {
          if (state.is_flipped(NodeId(v))) continue;
          if (pick-- == 0) {
            a = v;
            break;
          }
        }
      } else {
        a = argmax_action(q_values(state, params));
      }
      rewards.push_back(state.flip(NodeId(a)));
      actions.push_back(NodeId(a));
      states.emplace_back(state.flipped().begin(), state.flipped().end());
      if (step + 1 >= config.n_step) emit(step + 1 - config.n_step);

      if (replay.size() >= static_cast<std::size_t>(config.batch_size)) {
        for (auto& slot : batch) slot = replay[sampler.below(replay.size())];
        auto lg = loss_and_grad(params, batch, config.gamma);
        auto grad = lg.grad.flat();
        double scale = config.learning_rate;
        if (config.grad_clip > 0.0) {
          double norm = 0.0;
          for (double x : grad) norm += x * x;
          norm = std::sqrt(norm);
          if (norm > config.grad_clip) scale *= config.grad_clip / norm;
        }
        auto theta = params.flat();
        for (std::size_t i = 0; i < theta.size(); ++i) theta[i] -= scale * grad[i];
        loss_sum += lg.loss;
        ++loss_count;
        if (stats) ++stats->sgd_steps;
      }
    }
    // Tail transitions whose n-step window runs past the last step.
    for (int t = std::max(0, n - config.n_step + 1); t < n; ++t) emit(t);
    if (stats) stats->episode_losses.push_back(loss_count ? loss_sum / loss_count : 0.0);
  }
  params.validate();
  return params;
}

void save_params(const AgentParams& params, std::ostream& out) {
  params.validate();
  out << "gtcut-model v1\n";
  out << "p " << params.embed_dim() << " T " << params.rounds() << "\n";
  for (double x : params.flat()) out << format_double(x) << "\n";
  if (!out) throw IoError("failed writing model");
}

void save_params(const AgentParams& params, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  save_params(params, out);
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

AgentParams load_params(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw LoadError("empty model file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::string magic = "gtcut-model v";
  if (line.rfind(magic, 0) != 0) throw LoadError("not a gtcut model file");
  if (line != "gtcut-model v1") throw LoadError("unsupported model version '" + line.substr(magic.size()) + "'");

  if (!std::getline(in, line)) throw LoadError("missing dimension line");
  std::istringstream dims(line);
  std::string p_tag, t_tag;
  long long p = 0, rounds = -1;
  if (!(dims >> p_tag >> p >> t_tag >> rounds) || p_tag != "p" || t_tag != "T" || p < 1 || rounds < 0 || p > 4096) {
    throw LoadError("malformed dimension line '" + line + "'");
  }
  AgentParams params(static_cast<int>(p), static_cast<int>(rounds));
  auto data = params.flat();
  std::size_t count = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (count == data.size()) throw LoadError("more values than p = " + std::to_string(p) + " implies");
    const auto value = parse_double(line);
    if (!value) throw LoadError("malformed value '" + line + "'");
    if (!std::isfinite(*value)) throw LoadError("non-finite parameter value");
    data[count++] = *value;
  }
  if (count != data.size()) {
    throw LoadError("expected " + std::to_string(data.size()) + " values, found " + std::to_string(count));
  }
  return params;
}

AgentParams load_params(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open model " + path.string());
  return load_params(in);
}

SolveResult S2vSolver::solve(const WeightedGraph& g, const SpinConfiguration& s0) const {
  check_size(g, s0);
  if (s0.is_all_plus()) return greedy_construct(g, params_);
  const auto start = std::chrono::steady_clock::now();
  const GaugeVector t = gauge_to_plus(s0);
  const SolveResult framed = greedy_construct(apply_gauge(g, t), params_);
  SpinConfiguration mapped = apply_gauge(framed.configuration(), t);
  const double cut = cut_value(g, mapped);
  return SolveResult(g, std::move(mapped), cut, framed.node_flips_examined(), std::chrono::steady_clock::now() - start,
                     "s2v");
}

}  // namespace gtcut
