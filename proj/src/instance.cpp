#include "gtcut/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>
#include <vector>

#include "gtcut/error.hpp"
#include "gtcut/numfmt.hpp"
#include "gtcut/rng.hpp"

namespace gtcut {

namespace {

std::uint64_t pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<Edge> erdos_renyi(int n, const ErdosRenyi& er, Rng& rng) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin(er.p)) edges.push_back({NodeId(u), NodeId(v), 0.0});
    }
  }
  return edges;
}

std::vector<Edge> barabasi_albert(int n, const BarabasiAlbert& ba, Rng& rng) {
  const int m = ba.m_attach;
  std::vector<Edge> edges;
  // One entry per edge endpoint, so a uniform pick is degree-proportional.
  std::vector<NodeId> endpoints;
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      edges.push_back({NodeId(u), NodeId(v), 0.0});
      endpoints.push_back(NodeId(u));
      endpoints.push_back(NodeId(v));
    }
  }
  std::vector<NodeId> targets;
  for (int v = m; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      const NodeId pick = endpoints.empty() ? NodeId(rng.below(NodeId(v)))
                                            : endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
    }
    for (NodeId t : targets) {
      edges.push_back({t, NodeId(v), 0.0});
      endpoints.push_back(t);
      endpoints.push_back(NodeId(v));
    }
  }
  return edges;
}

std::vector<Edge> watts_strogatz(int n, const WattsStrogatz& ws, Rng& rng) {
  const int half = ws.k / 2;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> present;
  std::vector<int> degree(n, 0);
  for (int j = 1; j <= half; ++j) {
    for (int u = 0; u < n; ++u) {
      const NodeId a = NodeId(u), b = NodeId((u + j) % n);
      edges.push_back({a, b, 0.0});
      present.insert(pair_key(a, b));
      ++degree[a];
      ++degree[b];
    }
  }
  // Rewire the far endpoint of each lattice edge in construction order.
  for (auto& e : edges) {
    if (!rng.coin(ws.p_rewire)) continue;
    const NodeId u = e.u;
    if (degree[u] >= n - 1) continue;
    NodeId w;
    do {
      w = NodeId(rng.below(NodeId(n)));
    } while (w == u || present.count(pair_key(u, w)));
    present.erase(pair_key(u, e.v));
    --degree[e.v];
    e.v = w;
    present.insert(pair_key(u, w));
    ++degree[w];
  }
  return edges;
}

double draw_weight(WeightDistribution d, Rng& rng) {
  switch (d) {
    case WeightDistribution::kUniform01:
      return rng.uniform();
    case WeightDistribution::kNormal01:
      return rng.normal();
    case WeightDistribution::kDiscreteUniform:
      return static_cast<double>(rng.between(-1, 1));
  }
  return 0.0;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

}  // namespace

void TopologySpec::validate() const {
  if (n_min < 1 || n_min > n_max) throw ConfigError("node range must satisfy 1 <= n_min <= n_max");
  if (const auto* er = std::get_if<ErdosRenyi>(&kind)) {
    if (!(er->p > 0.0 && er->p < 1.0)) throw ConfigError("ER edge probability must lie in (0, 1)");
  } else if (const auto* ba = std::get_if<BarabasiAlbert>(&kind)) {
    if (ba->m_attach < 1) throw ConfigError("BA attachment count must be >= 1");
    if (n_min <= ba->m_attach) throw ConfigError("BA needs n_min > m_attach");
  } else if (const auto* ws = std::get_if<WattsStrogatz>(&kind)) {
    if (ws->k < 2 || ws->k % 2 != 0) throw ConfigError("WS neighbour count k must be even and >= 2");
    if (ws->k >= n_min) throw ConfigError("WS needs k < n_min");
    if (!(ws->p_rewire >= 0.0 && ws->p_rewire <= 1.0)) throw ConfigError("WS rewiring probability must lie in [0, 1]");
  }
}

void InstanceSpec::validate() const {
  topology.validate();
  if (count < 1) throw ConfigError("instance count must be >= 1");
}

WeightedGraph generate_instance(const InstanceSpec& spec, int index) {
  spec.validate();
  if (index < 0 || index >= spec.count) throw ConfigError("instance index out of range");
  Rng rng(derive_seed(spec.base_seed, static_cast<std::uint64_t>(index)));
  const int n = static_cast<int>(rng.between(spec.topology.n_min, spec.topology.n_max));
  std::vector<Edge> edges = std::visit(
      [&](const auto& kind) -> std::vector<Edge> {
        using Kind = std::decay_t<decltype(kind)>;
        if constexpr (std::is_same_v<Kind, ErdosRenyi>) return erdos_renyi(n, kind, rng);
        else if constexpr (std::is_same_v<Kind, BarabasiAlbert>) return barabasi_albert(n, kind, rng);
        else return watts_strogatz(n, kind, rng);
      },
      spec.topology.kind);
  // Canonicalise before drawing weights so the draw order is topology-agnostic.
  WeightedGraph topology(static_cast<std::size_t>(n), std::move(edges));
  std::vector<double> weights(topology.edge_count());
  for (auto& w : weights) w = draw_weight(spec.weights, rng);
  return topology.with_weights(weights);
}

WeightDistribution parse_weight_distribution(const std::string& name) {
  if (name == "uniform") return WeightDistribution::kUniform01;
  if (name == "normal") return WeightDistribution::kNormal01;
  if (name == "du" || name == "discrete") return WeightDistribution::kDiscreteUniform;
  throw ConfigError("unknown weight distribution '" + name + "' (expected uniform, normal or du)");
}

std::string to_string(WeightDistribution d) {
  switch (d) {
    case WeightDistribution::kUniform01: return "uniform";
    case WeightDistribution::kNormal01: return "normal";
    case WeightDistribution::kDiscreteUniform: return "du";
  }
  return "?";
}

void write_instance(const WeightedGraph& g, std::ostream& out) {
  out << "# gtcut-instance v1\n";
  out << "n " << g.node_count() << "\n";
  out << "m " << g.edge_count() << "\n";
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << ' ' << format_double(e.w) << "\n";
  if (!out) throw IoError("failed writing instance");
}

void write_instance(const WeightedGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_instance(g, out);
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

WeightedGraph read_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> tokens;

  // First non-comment, non-blank line decides the format.
  while (std::getline(in, line)) {
    ++line_no;
    tokens = split(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    break;
  }
  if (tokens.empty()) throw ParseError(line_no, "empty instance");

  std::size_t n = 0, m = 0;
  const bool native = tokens[0] == "n";
  if (native) {
    auto count = tokens.size() == 2 ? parse_int<std::size_t>(tokens[1]) : std::nullopt;
    if (!count) throw ParseError(line_no, "expected 'n <node_count>'");
    n = *count;
    if (!std::getline(in, line)) throw ParseError(line_no + 1, "missing 'm <edge_count>' line");
    ++line_no;
    tokens = split(line);
    auto edges = tokens.size() == 2 && tokens[0] == "m" ? parse_int<std::size_t>(tokens[1]) : std::nullopt;
    if (!edges) throw ParseError(line_no, "expected 'm <edge_count>'");
    m = *edges;
  } else {
    auto nodes = tokens.size() == 2 ? parse_int<std::size_t>(tokens[0]) : std::nullopt;
    auto edges = tokens.size() == 2 ? parse_int<std::size_t>(tokens[1]) : std::nullopt;
    if (!nodes || !edges) throw ParseError(line_no, "expected '<n> <m>' header");
    n = *nodes;
    m = *edges;
  }
  if (n > UINT32_MAX) throw ParseError(line_no, "node count too large");

  std::vector<Edge> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  while (edges.size() < m) {
    if (!std::getline(in, line)) {
      throw ParseError(line_no + 1, "expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    }
    ++line_no;
    tokens = split(line);
    if (tokens.empty()) throw ParseError(line_no, "blank line inside edge list");
    if (native) {
      if (tokens[0] != "e") throw ParseError(line_no, "expected 'e <u> <v> <w>'");
      tokens.erase(tokens.begin());
    }
    if (tokens.size() != 3) throw ParseError(line_no, "expected '<u> <v> <w>'");
    auto u = parse_int<std::uint64_t>(tokens[0]);
    auto v = parse_int<std::uint64_t>(tokens[1]);
    auto w = parse_double(tokens[2]);
    if (!u || !v || !w) throw ParseError(line_no, "malformed edge line");
    if (!native) {
      if (*u == 0 || *v == 0) throw ParseError(line_no, "Gset node ids are 1-indexed");
      --*u;
      --*v;
    }
    if (*u >= n || *v >= n) throw ParseError(line_no, "node index out of range");
    if (*u == *v) throw ParseError(line_no, "self-loop");
    if (!std::isfinite(*w)) throw ParseError(line_no, "non-finite weight");
    if (!seen.insert(pair_key(NodeId(*u), NodeId(*v))).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back({NodeId(*u), NodeId(*v), *w});
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!split(line).empty()) throw ParseError(line_no, "unexpected content after edge list");
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph read_instance(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_instance(in);
}

}  // namespace gtcut
