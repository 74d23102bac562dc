#pragma once

#include <cstddef>
#include <vector>

#include "gtcut/graph.hpp"

namespace gtcut {

struct Coupling {
  NodeId u;
  NodeId v;
  double j;
};

// Ising rewrite of the cut objective: cut(s) = -energy(s) + offset, with
// J(u,v) = -W(u,v)/2 per edge and offset = sum W / 2.
struct IsingView {
  std::size_t node_count = 0;
  std::vector<Coupling> couplings;
  double offset = 0.0;
};

IsingView ising_view(const WeightedGraph& g);

// E(s) = -sum J(u,v) s_u s_v.
double energy(const IsingView& view, const SpinConfiguration& s);

// One k-body term J_a * s_{a_1} ... s_{a_k}.
struct Interaction {
  double j;
  std::vector<NodeId> members;
};

// Energy with arbitrary-order interactions; validated on construction.
class HyperEnergyModel {
 public:
  HyperEnergyModel(std::size_t node_count, std::vector<Interaction> interactions);

  // Pairwise model equivalent to ising_view(g).
  static HyperEnergyModel from_graph(const WeightedGraph& g);

  std::size_t node_count() const noexcept { return node_count_; }
  const std::vector<Interaction>& interactions() const noexcept { return interactions_; }

 private:
  std::size_t node_count_;
  std::vector<Interaction> interactions_;
};

// E(s) = -sum_a J_a prod_{i in a} s_i.
double hyper_energy(const HyperEnergyModel& model, const SpinConfiguration& s);

}  // namespace gtcut
