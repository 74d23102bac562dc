#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gtcut {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
  double w;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  NodeId node;
  double w;
};

// Undirected weighted graph with dense node ids 0..n-1. Immutable once
// built; the constructor validates endpoints, self-loops and duplicates,
// and stores edges in canonical order (u < v, ascending by (u, v)).
class WeightedGraph {
 public:
  WeightedGraph() = default;
  WeightedGraph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(NodeId v) const { return adjacency_[v]; }
  std::size_t degree(NodeId v) const { return adjacency_[v].size(); }

  // Sum of all edge weights.
  double total_weight() const noexcept;

  // Same topology, new weights (indexed like edges()).
  WeightedGraph with_weights(std::span<const double> weights) const;

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    return a.node_count() == b.node_count() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

// Spin per node, +1 for the U side and -1 for the cut set T.
class SpinConfiguration {
 public:
  SpinConfiguration() = default;
  // All-plus configuration (T empty).
  explicit SpinConfiguration(std::size_t n) : spins_(n, 1) {}
  // Throws InvalidInput unless every entry is +1 or -1.
  explicit SpinConfiguration(std::vector<std::int8_t> spins);

  static SpinConfiguration all_plus(std::size_t n) { return SpinConfiguration(n); }

  std::size_t size() const noexcept { return spins_.size(); }
  std::int8_t operator[](std::size_t i) const { return spins_[i]; }
  void flip(std::size_t i) { spins_[i] = static_cast<std::int8_t>(-spins_[i]); }
  std::span<const std::int8_t> values() const noexcept { return spins_; }

  // Global flip s -> -s.
  SpinConfiguration negated() const;
  bool is_all_plus() const noexcept;

  friend bool operator==(const SpinConfiguration&, const SpinConfiguration&) = default;

 private:
  std::vector<std::int8_t> spins_;
};

// Total weight of edges whose endpoints have opposite spins.
double cut_value(const WeightedGraph& g, const SpinConfiguration& s);

// cut(s with s_v negated) - cut(s), in O(deg v).
double delta_cut_flip(const WeightedGraph& g, const SpinConfiguration& s, NodeId v);

// Throws InvalidInput if s does not match g.
void check_size(const WeightedGraph& g, const SpinConfiguration& s);

}  // namespace gtcut
