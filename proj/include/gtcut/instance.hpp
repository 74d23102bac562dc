#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "gtcut/graph.hpp"

namespace gtcut {

struct ErdosRenyi {
  double p = 0.15;
};

// Preferential attachment: a clique on m_attach seed nodes, then every new
// node attaches to m_attach distinct existing nodes chosen proportionally to
// degree. |E| = C(m,2) + m (n - m); mean degree tends to 2 m.
struct BarabasiAlbert {
  int m_attach = 2;
};

// Ring lattice with k/2 neighbours per side, each lattice edge rewired with
// probability p_rewire to a uniformly chosen non-adjacent endpoint.
struct WattsStrogatz {
  int k = 4;
  double p_rewire = 0.1;
};

struct TopologySpec {
  std::variant<ErdosRenyi, BarabasiAlbert, WattsStrogatz> kind = BarabasiAlbert{};
  int n_min = 15;
  int n_max = 20;

  // Throws ConfigError on out-of-range parameters.
  void validate() const;
};

enum class WeightDistribution { kUniform01, kNormal01, kDiscreteUniform };

struct InstanceSpec {
  TopologySpec topology;
  WeightDistribution weights = WeightDistribution::kUniform01;
  int count = 1;
  std::uint64_t base_seed = 0;

  void validate() const;
};

// Deterministic in (spec.base_seed, index): the instance stream is seeded with
// derive_seed(base_seed, index). Draw order is node count, topology, then one
// weight per edge in canonical edge order.
WeightedGraph generate_instance(const InstanceSpec& spec, int index);

// Parsing helpers shared with the CLI.
WeightDistribution parse_weight_distribution(const std::string& name);
std::string to_string(WeightDistribution d);

// Native text format:
//   # gtcut-instance v1
//   n <nodes>
//   m <edges>
//   e <u> <v> <w>      (m lines, u < v, canonical order)
void write_instance(const WeightedGraph& g, std::ostream& out);
void write_instance(const WeightedGraph& g, const std::filesystem::path& path);

// Reads the native format or a Gset-style file ("<n> <m>" then 1-indexed
// "<u> <v> <w>" lines); the format is detected from the first non-comment line.
WeightedGraph read_instance(std::istream& in);
WeightedGraph read_instance(const std::filesystem::path& path);

}  // namespace gtcut
