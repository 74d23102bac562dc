#pragma once

#include <cstdint>
#include <vector>

#include "gtcut/gauge.hpp"
#include "gtcut/graph.hpp"
#include "gtcut/rng.hpp"

namespace gtcut::testing {

enum class Weights { kUniform, kNormal, kDiscrete };

// Each pair present with probability density; independent of instance-gen.
inline WeightedGraph random_graph(Rng& rng, std::size_t n, double density, Weights weights) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (!rng.coin(density)) continue;
      double w = 0.0;
      switch (weights) {
        case Weights::kUniform: w = rng.uniform(); break;
        case Weights::kNormal: w = rng.normal(); break;
        case Weights::kDiscrete: w = static_cast<double>(rng.between(-1, 1)); break;
      }
      edges.push_back({u, v, w});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

inline SpinConfiguration random_spins(Rng& rng, std::size_t n) {
  std::vector<std::int8_t> s(n);
  for (auto& x : s) x = rng.coin(0.5) ? 1 : -1;
  return SpinConfiguration(std::move(s));
}

inline GaugeVector random_gauge(Rng& rng, std::size_t n) {
  std::vector<std::int8_t> t(n);
  for (auto& x : t) x = rng.coin(0.5) ? 1 : -1;
  return GaugeVector(std::move(t));
}

// Configuration number `mask` (bit i set -> node i in T).
inline SpinConfiguration spins_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<std::int8_t> s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i) & 1 ? -1 : 1;
  return SpinConfiguration(std::move(s));
}

// Straight edge-list sum; shares no code with cut_value.
inline double naive_cut(const WeightedGraph& g, std::uint64_t mask) {
  double cut = 0.0;
  for (const auto& e : g.edges()) {
    if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) cut += e.w;
  }
  return cut;
}

// Optimum over all 2^n masks.
inline double naive_max_cut(const WeightedGraph& g) {
  double best = 0.0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.node_count()); ++mask) {
    best = std::max(best, naive_cut(g, mask));
  }
  return best;
}

inline WeightedGraph path3(double w01 = 1.0, double w12 = 1.0) {
  return WeightedGraph(3, {{0, 1, w01}, {1, 2, w12}});
}

inline WeightedGraph unit_triangle() { return WeightedGraph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}}); }

inline SpinConfiguration spins(std::initializer_list<int> values) {
  std::vector<std::int8_t> s;
  for (int v : values) s.push_back(static_cast<std::int8_t>(v));
  return SpinConfiguration(std::move(s));
}

}  // namespace gtcut::testing
