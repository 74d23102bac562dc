#include <doctest.h>

#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "gtcut/error.hpp"
#include "gtcut/instance.hpp"
#include "support.hpp"

using namespace gtcut;
using namespace gtcut::testing;

namespace {

bool connected(const WeightedGraph& g) {
  if (g.node_count() == 0) return true;
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(v)) {
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        ++count;
        stack.push_back(nb.node);
      }
    }
  }
  return count == g.node_count();
}

std::string to_text(const WeightedGraph& g) {
  std::ostringstream out;
  write_instance(g, out);
  return out.str();
}

WeightedGraph from_text(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

}  // namespace

TEST_CASE("BA with m_attach 2 is connected with 2n-3 edges") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    InstanceSpec spec;
    spec.topology = {BarabasiAlbert{2}, 50, 100};
    spec.weights = WeightDistribution::kNormal01;
    spec.base_seed = seed == 0 ? 7 : seed;
    const auto g = generate_instance(spec, 0);
    const std::size_t n = g.node_count();
    CHECK(n >= 50);
    CHECK(n <= 100);
    CHECK(g.edge_count() == 2 * (n - 2) + 1);
    CHECK(connected(g));
    for (NodeId v = 0; v < n; ++v) CHECK(g.degree(v) >= 2);
  }
}

TEST_CASE("ER edge count matches p C(n,2) on average") {
  InstanceSpec spec;
  spec.topology = {ErdosRenyi{0.15}, 20, 20};
  spec.count = 1000;
  spec.base_seed = 3;
  double total = 0.0;
  for (int i = 0; i < 1000; ++i) total += static_cast<double>(generate_instance(spec, i).edge_count());
  const double mean = total / 1000.0;
  CHECK(std::abs(mean - 28.5) <= 0.05 * 28.5);
}

TEST_CASE("WS keeps degree k without rewiring and the degree sum with it") {
  InstanceSpec spec;
  spec.topology = {WattsStrogatz{6, 0.0}, 20, 30};
  spec.count = 20;
  for (int i = 0; i < 20; ++i) {
    const auto g = generate_instance(spec, i);
    for (NodeId v = 0; v < g.node_count(); ++v) CHECK(g.degree(v) == 6);
  }
  spec.topology.kind = WattsStrogatz{6, 0.3};
  for (int i = 0; i < 20; ++i) {
    const auto g = generate_instance(spec, i);
    std::size_t degree_sum = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 6 * g.node_count());
  }
}

TEST_CASE("weights stay in their support") {
  InstanceSpec spec;
  spec.topology = {ErdosRenyi{0.5}, 20, 30};
  spec.count = 20;
  spec.weights = WeightDistribution::kDiscreteUniform;
  int seen[3] = {0, 0, 0};
  for (int i = 0; i < 20; ++i) {
    const auto g = generate_instance(spec, i);
    for (const auto& e : g.edges()) {
      REQUIRE((e.w == 0.0 || e.w == 1.0 || e.w == -1.0));
      ++seen[static_cast<int>(e.w) + 1];
    }
  }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);

  spec.weights = WeightDistribution::kUniform01;
  for (int i = 0; i < 20; ++i) {
    const auto g = generate_instance(spec, i);
    for (const auto& e : g.edges()) CHECK((e.w >= 0.0 && e.w < 1.0));
  }
}

TEST_CASE("normal draws have unit moments") {
  Rng rng(99);
  const int n = 100000;
  double sum = 0.0, sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    sum += z;
    sq += z * z;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) <= 0.02);
  CHECK(std::abs(var - 1.0) <= 0.05);
}

TEST_CASE("generation is deterministic per (seed, index)") {
  InstanceSpec spec;
  spec.topology = {BarabasiAlbert{2}, 15, 20};
  spec.weights = WeightDistribution::kNormal01;
  spec.count = 5;
  spec.base_seed = 42;
  for (int i = 0; i < 5; ++i) CHECK(generate_instance(spec, i) == generate_instance(spec, i));
  CHECK_FALSE(generate_instance(spec, 0) == generate_instance(spec, 1));
  CHECK_THROWS_AS(generate_instance(spec, 5), ConfigError);
}

TEST_CASE("invalid topology specs are rejected") {
  TopologySpec t;
  t = {ErdosRenyi{0.0}, 10, 10};
  CHECK_THROWS_AS(t.validate(), ConfigError);
  t = {ErdosRenyi{0.5}, 10, 5};
  CHECK_THROWS_AS(t.validate(), ConfigError);
  t = {WattsStrogatz{3, 0.1}, 10, 10};
  CHECK_THROWS_AS(t.validate(), ConfigError);
  t = {WattsStrogatz{10, 0.1}, 10, 12};
  CHECK_THROWS_AS(t.validate(), ConfigError);
  t = {BarabasiAlbert{0}, 10, 10};
  CHECK_THROWS_AS(t.validate(), ConfigError);
  InstanceSpec spec;
  spec.count = 0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("instance file format") {
  CHECK(to_text(WeightedGraph(2, {{0, 1, 1.0}})) == "# gtcut-instance v1\nn 2\nm 1\ne 0 1 1\n");

  const auto g = from_text("# gtcut-instance v1\nn 2\nm 1\ne 0 1 1\n");
  CHECK(g.node_count() == 2);
  REQUIRE(g.edge_count() == 1);
  CHECK(g.edges()[0] == Edge{0, 1, 1.0});

  const auto tenth = from_text(to_text(WeightedGraph(2, {{0, 1, 0.1}})));
  CHECK(tenth.edges()[0].w == 0.1);

  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const auto r = random_graph(rng, 1 + rng.below(25), 0.3, i % 2 ? Weights::kNormal : Weights::kUniform);
    const auto text = to_text(r);
    const auto back = from_text(text);
    CHECK(back == r);
    CHECK(to_text(back) == text);
  }
}

TEST_CASE("Gset-style files are read 1-indexed") {
  std::ostringstream gset;
  gset << "800 800\n";
  for (int u = 1; u <= 800; ++u) gset << u << ' ' << (u % 800) + 1 << " 1\n";
  const auto g = from_text(gset.str());
  CHECK(g.node_count() == 800);
  CHECK(g.edge_count() == 800);
  CHECK(g.edges()[0] == Edge{0, 1, 1.0});
  CHECK(g.edges()[1] == Edge{0, 799, 1.0});
}

TEST_CASE("malformed files name the offending line") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      from_text(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("6 1\n5 5 1.0\n") == 2);
  CHECK(line_of("n 3\nm 2\ne 0 1 1\ne 1 0 2\n") == 4);
  CHECK(line_of("n 3\nm 1\ne 0 3 1\n") == 3);
  CHECK(line_of("n 3\nm 1\ne 0 x 1\n") == 3);
  CHECK(line_of("n 3\nm 2\ne 0 1 1\n") == 4);
  CHECK(line_of("# c\nn 3\nq 1\n") == 3);
  CHECK(line_of("n 2\nm 1\ne 0 1 1\ne 0 1 1\n") == 4);
  CHECK(line_of("3 1\n0 1 1\n") == 2);
}
