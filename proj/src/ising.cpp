#include "gtcut/ising.hpp"

#include <string>
#include <utility>

#include "gtcut/error.hpp"

namespace gtcut {

IsingView ising_view(const WeightedGraph& g) {
  IsingView view;
  view.node_count = g.node_count();
  view.couplings.reserve(g.edge_count());
  for (const auto& e : g.edges()) {
    view.couplings.push_back({e.u, e.v, -e.w / 2.0});
    view.offset += e.w / 2.0;
  }
  return view;
}

double energy(const IsingView& view, const SpinConfiguration& s) {
  if (s.size() != view.node_count) throw InvalidInput("configuration length does not match Ising view");
  double e = 0.0;
  for (const auto& c : view.couplings) e -= c.j * s[c.u] * s[c.v];
  return e;
}

HyperEnergyModel::HyperEnergyModel(std::size_t node_count, std::vector<Interaction> interactions)
    : node_count_(node_count), interactions_(std::move(interactions)) {
  for (std::size_t a = 0; a < interactions_.size(); ++a) {
    const auto& members = interactions_[a].members;
    if (members.empty()) throw InvalidInput("interaction " + std::to_string(a) + " has no members");
    for (NodeId m : members) {
      if (m >= node_count_) {
        throw InvalidInput("interaction " + std::to_string(a) + " references node " + std::to_string(m));
      }
    }
  }
}

HyperEnergyModel HyperEnergyModel::from_graph(const WeightedGraph& g) {
  std::vector<Interaction> terms;
  terms.reserve(g.edge_count());
  for (const auto& e : g.edges()) terms.push_back({-e.w / 2.0, {e.u, e.v}});
  return HyperEnergyModel(g.node_count(), std::move(terms));
}

double hyper_energy(const HyperEnergyModel& model, const SpinConfiguration& s) {
  if (s.size() != model.node_count()) throw InvalidInput("configuration length does not match model");
  double e = 0.0;
  for (const auto& term : model.interactions()) {
    int sign = 1;
    for (NodeId m : term.members) sign *= s[m];
    e -= term.j * sign;
  }
  return e;
}

}  // namespace gtcut
