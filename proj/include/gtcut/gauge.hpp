#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "gtcut/graph.hpp"
#include "gtcut/ising.hpp"

namespace gtcut {

// Z2 gauge: one generator t_u in {+1, -1} per node. Applying it maps
// W(u,v) -> W(u,v) t_u t_v and s_u -> s_u t_u, which leaves the Ising
// energy unchanged.
class GaugeVector {
 public:
  GaugeVector() = default;
  // Identity gauge.
  explicit GaugeVector(std::size_t n) : generators_(n, 1) {}
  // Throws InvalidInput unless every entry is +1 or -1.
  explicit GaugeVector(std::vector<std::int8_t> generators);

  static GaugeVector identity(std::size_t n) { return GaugeVector(n); }

  std::size_t size() const noexcept { return generators_.size(); }
  std::int8_t operator[](std::size_t i) const { return generators_[i]; }
  std::span<const std::int8_t> values() const noexcept { return generators_; }
  bool is_identity() const noexcept;

  friend bool operator==(const GaugeVector&, const GaugeVector&) = default;

 private:
  std::vector<std::int8_t> generators_;
};

// t_u = s_u, so the transformed configuration is all-plus.
GaugeVector gauge_to_plus(const SpinConfiguration& s);

struct GaugedInstance {
  WeightedGraph graph;
  SpinConfiguration spins;
};

GaugedInstance apply_gauge(const WeightedGraph& g, const SpinConfiguration& s, const GaugeVector& t);
WeightedGraph apply_gauge(const WeightedGraph& g, const GaugeVector& t);
SpinConfiguration apply_gauge(const SpinConfiguration& s, const GaugeVector& t);

// J_a -> J_a prod_{i in a} t_i.
HyperEnergyModel apply_gauge(const HyperEnergyModel& model, const GaugeVector& t);

// Elementwise product; applying first then second equals applying the result.
GaugeVector compose_gauge(const GaugeVector& first, const GaugeVector& second);

}  // namespace gtcut
