#include "gtcut/gauge.hpp"

#include <algorithm>
#include <string>

#include "gtcut/error.hpp"

namespace gtcut {

GaugeVector::GaugeVector(std::vector<std::int8_t> generators) : generators_(std::move(generators)) {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i] != 1 && generators_[i] != -1) {
      throw InvalidInput("gauge generator " + std::to_string(i) + " is not +1 or -1");
    }
  }
}

bool GaugeVector::is_identity() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(), [](std::int8_t t) { return t == 1; });
}

GaugeVector gauge_to_plus(const SpinConfiguration& s) {
  return GaugeVector(std::vector<std::int8_t>(s.values().begin(), s.values().end()));
}

WeightedGraph apply_gauge(const WeightedGraph& g, const GaugeVector& t) {
  if (t.size() != g.node_count()) throw InvalidInput("gauge length does not match graph");
  std::vector<double> weights;
  weights.reserve(g.edge_count());
  for (const auto& e : g.edges()) weights.push_back(e.w * (t[e.u] * t[e.v]));
  return g.with_weights(weights);
}

SpinConfiguration apply_gauge(const SpinConfiguration& s, const GaugeVector& t) {
  if (t.size() != s.size()) throw InvalidInput("gauge length does not match configuration");
  std::vector<std::int8_t> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = static_cast<std::int8_t>(s[i] * t[i]);
  return SpinConfiguration(std::move(out));
}

GaugedInstance apply_gauge(const WeightedGraph& g, const SpinConfiguration& s, const GaugeVector& t) {
  check_size(g, s);
  return {apply_gauge(g, t), apply_gauge(s, t)};
}

HyperEnergyModel apply_gauge(const HyperEnergyModel& model, const GaugeVector& t) {
  if (t.size() != model.node_count()) throw InvalidInput("gauge length does not match model");
  std::vector<Interaction> terms = model.interactions();
  for (auto& term : terms) {
    int sign = 1;
    for (NodeId m : term.members) sign *= t[m];
    term.j *= sign;
  }
  return HyperEnergyModel(model.node_count(), std::move(terms));
}

GaugeVector compose_gauge(const GaugeVector& first, const GaugeVector& second) {
  if (first.size() != second.size()) throw InvalidInput("cannot compose gauges of different length");
  std::vector<std::int8_t> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = static_cast<std::int8_t>(first[i] * second[i]);
  return GaugeVector(std::move(out));
}

}  // namespace gtcut
