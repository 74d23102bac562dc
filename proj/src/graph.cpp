#include "gtcut/graph.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "gtcut/error.hpp"

namespace gtcut {

WeightedGraph::WeightedGraph(std::size_t node_count, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(node_count) {
  for (auto& e : edges_) {
    if (e.u >= node_count || e.v >= node_count) {
      throw InvalidInput("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ") has an endpoint outside [0, " + std::to_string(node_count) + ")");
    }
    if (e.u == e.v) throw InvalidInput("self-loop on node " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw InvalidInput("duplicate edge (" + std::to_string(edges_[i].u) + ", " +
                         std::to_string(edges_[i].v) + ")");
    }
  }
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.w});
    adjacency_[e.v].push_back({e.u, e.w});
  }
}

double WeightedGraph::total_weight() const noexcept {
  double total = 0.0;
  for (const auto& e : edges_) total += e.w;
  return total;
}

WeightedGraph WeightedGraph::with_weights(std::span<const double> weights) const {
  if (weights.size() != edges_.size()) throw InvalidInput("weight count does not match edge count");
  std::vector<Edge> edges(edges_);
  for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = weights[i];
  return WeightedGraph(node_count(), std::move(edges));
}

SpinConfiguration::SpinConfiguration(std::vector<std::int8_t> spins) : spins_(std::move(spins)) {
  for (std::size_t i = 0; i < spins_.size(); ++i) {
    if (spins_[i] != 1 && spins_[i] != -1) {
      throw InvalidInput("spin " + std::to_string(i) + " is not +1 or -1");
    }
  }
}

SpinConfiguration SpinConfiguration::negated() const {
  SpinConfiguration out(*this);
  for (auto& s : out.spins_) s = static_cast<std::int8_t>(-s);
  return out;
}

bool SpinConfiguration::is_all_plus() const noexcept {
  return std::all_of(spins_.begin(), spins_.end(), [](std::int8_t s) { return s == 1; });
}

void check_size(const WeightedGraph& g, const SpinConfiguration& s) {
  if (s.size() != g.node_count()) {
    throw InvalidInput("configuration has " + std::to_string(s.size()) + " spins, graph has " +
                       std::to_string(g.node_count()) + " nodes");
  }
}

double cut_value(const WeightedGraph& g, const SpinConfiguration& s) {
  check_size(g, s);
  double cut = 0.0;
  for (const auto& e : g.edges()) {
    if (s[e.u] != s[e.v]) cut += e.w;
  }
  return cut;
}

double delta_cut_flip(const WeightedGraph& g, const SpinConfiguration& s, NodeId v) {
  check_size(g, s);
  if (v >= g.node_count()) throw InvalidInput("node " + std::to_string(v) + " out of range");
  // Crossing edges (s_u s_v = -1) stop crossing and vice versa.
  double delta = 0.0;
  for (const auto& nb : g.neighbors(v)) delta += nb.w * s[nb.node] * s[v];
  return delta;
}

}  // namespace gtcut
