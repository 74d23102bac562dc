#include "gtcut/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "gtcut/agent.hpp"
#include "gtcut/error.hpp"
#include "gtcut/gt_loop.hpp"
#include "gtcut/instance.hpp"
#include "gtcut/numfmt.hpp"
#include "gtcut/rng.hpp"
#include "gtcut/solvers.hpp"

namespace gtcut {

Method parse_method(const std::string& name) {
  if (name == "mca") return Method::kMca;
  if (name == "mca-gt") return Method::kMcaGt;
  if (name == "s2v") return Method::kS2v;
  if (name == "s2v-gt") return Method::kS2vGt;
  if (name == "exact") return Method::kExact;
  throw ConfigError("unknown method '" + name + "' (expected mca, mca-gt, s2v, s2v-gt or exact)");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kMca: return "mca";
    case Method::kMcaGt: return "mca-gt";
    case Method::kS2v: return "s2v";
    case Method::kS2vGt: return "s2v-gt";
    case Method::kExact: return "exact";
  }
  return "?";
}

std::vector<Method> parse_method_list(const std::string& csv) {
  std::vector<Method> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const Method m = parse_method(item);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  if (out.empty()) throw ConfigError("no methods given");
  return out;
}

namespace {

bool needs_model(Method m) { return m == Method::kS2v || m == Method::kS2vGt; }

struct InstanceOutcome {
  std::vector<BenchRow> rows;
  std::vector<std::string> errors;
};

InstanceOutcome run_instance(const std::filesystem::path& file, std::size_t index, const BenchOptions& options,
                             const S2vSolver* s2v) {
  InstanceOutcome out;
  const std::string id = file.stem().string();
  const std::uint64_t seed = derive_seed(options.seed, index);

  WeightedGraph g;
  try {
    g = read_instance(file);
  } catch (const std::exception& e) {
    out.errors.push_back(id + ": " + e.what());
    return out;
  }

  GtConfig gt_cfg = GtConfig::for_graph(g);
  gt_cfg.max_iterations = options.max_iterations;
  gt_cfg.m_init = options.m_init;
  const McaSolver mca_solver;
  const auto all_plus = SpinConfiguration::all_plus(g.node_count());

  std::optional<double> exact_cut;
  if (options.opt == OptSource::kExact) {
    try {
      exact_cut = exact_brute_force(g, options.exact_node_limit).cut();
    } catch (const std::exception& e) {
      out.errors.push_back(id + ": " + e.what());
      return out;
    }
  }

  for (Method method : options.methods) {
    if (needs_model(method) && !s2v) continue;
    BenchRow row;
    row.instance = id;
    row.method = to_string(method);
    row.n = g.node_count();
    row.m = g.edge_count();
    row.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    try {
      std::optional<SolveResult> result;
      switch (method) {
        case Method::kMca:
          result.emplace(mca_solver.solve(g, all_plus));
          break;
        case Method::kMcaGt:
          result.emplace(multi_init_solve(g, mca_solver, gt_cfg, seed, &row.gt_iterations));
          break;
        case Method::kS2v:
          result.emplace(s2v->solve(g, all_plus));
          break;
        case Method::kS2vGt:
          result.emplace(multi_init_solve(g, *s2v, gt_cfg, seed, &row.gt_iterations));
          break;
        case Method::kExact:
          result.emplace(exact_brute_force(g, options.exact_node_limit));
          break;
      }
      const auto elapsed = std::chrono::steady_clock::now() - start;
      if (options.timing) row.wall_time_ms = std::chrono::duration<double, std::milli>(elapsed).count();
      row.cut = result->cut();
      row.configuration = result->configuration();
    } catch (const std::exception& e) {
      out.errors.push_back(id + " / " + row.method + ": " + e.what());
      continue;
    }
    out.rows.push_back(std::move(row));
  }

  double c_opt = 0.0;
  bool best_known = false;
  if (exact_cut) {
    c_opt = *exact_cut;
  } else {
    best_known = true;
    GtConfig restart_cfg = gt_cfg;
    restart_cfg.m_init = options.best_known_restarts;
    c_opt = multi_init_solve(g, mca_solver, restart_cfg, derive_seed(seed, 0xb357)).cut();
    for (const auto& row : out.rows) c_opt = std::max(c_opt, row.cut);
  }
  for (auto& row : out.rows) {
    row.c_opt = c_opt;
    row.best_known = best_known;
    if (c_opt != 0.0) row.ar = approx_ratio(row.cut, c_opt);
  }
  return out;
}

}  // namespace

BenchReport run_benchmark(const BenchOptions& options) {
  if (options.methods.empty()) throw ConfigError("no methods given");
  if (options.jobs < 1) throw ConfigError("--jobs must be >= 1");
  BenchReport report;

  std::vector<std::filesystem::path> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(options.dataset, ec)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  if (ec) throw IoError("cannot list dataset " + options.dataset.string() + ": " + ec.message());
  if (files.empty()) throw IoError("dataset " + options.dataset.string() + " has no instance files");
  std::sort(files.begin(), files.end());

  std::unique_ptr<S2vSolver> s2v;
  const bool wants_model = std::any_of(options.methods.begin(), options.methods.end(), needs_model);
  if (wants_model) {
    try {
      if (!options.model) throw LoadError("s2v methods need --model");
      s2v = std::make_unique<S2vSolver>(load_params(*options.model));
    } catch (const std::exception& e) {
      report.errors.push_back(std::string("model: ") + e.what());
    }
  }

  std::vector<InstanceOutcome> outcomes(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      outcomes[i] = run_instance(files[i], i, options, s2v.get());
    }
  };
  const int threads = std::min<int>(options.jobs, static_cast<int>(files.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (auto& outcome : outcomes) {
    for (auto& row : outcome.rows) report.rows.push_back(std::move(row));
    for (auto& err : outcome.errors) report.errors.push_back(std::move(err));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const BenchRow& a, const BenchRow& b) {
    return a.instance != b.instance ? a.instance < b.instance : a.method < b.method;
  });
  summarize(report, options.methods);
  return report;
}

void summarize(BenchReport& report, const std::vector<Method>& methods) {
  report.summaries.clear();
  report.comparisons.clear();
  std::map<std::string, std::map<std::string, double>> cuts;  // method -> instance -> cut
  for (Method m : methods) {
    const std::string name = to_string(m);
    MethodSummary s;
    s.method = name;
    std::vector<double> ars;
    double iterations = 0.0, wall = 0.0;
    for (const auto& row : report.rows) {
      if (row.method != name) continue;
      ++s.rows;
      if (row.ar) ars.push_back(*row.ar);
      iterations += row.gt_iterations;
      wall += row.wall_time_ms;
      cuts[name][row.instance] = row.cut;
    }
    s.ar = mean_and_standard_error(ars);
    if (s.rows) {
      s.mean_gt_iterations = iterations / static_cast<double>(s.rows);
      s.mean_wall_time_ms = wall / static_cast<double>(s.rows);
    }
    report.summaries.push_back(s);
  }
  for (std::size_t i = 0; i < methods.size(); ++i) {
    for (std::size_t j = i + 1; j < methods.size(); ++j) {
      PairComparison cmp;
      cmp.baseline = to_string(methods[i]);
      cmp.better = to_string(methods[j]);
      std::vector<std::pair<double, double>> pairs;
      for (const auto& [instance, cut] : cuts[cmp.better]) {
        auto it = cuts[cmp.baseline].find(instance);
        if (it != cuts[cmp.baseline].end()) pairs.emplace_back(cut, it->second);
      }
      try {
        if (pairs.empty()) throw DegenerateTest("no paired instances");
        cmp.test = wilcoxon_signed_rank(pairs);
      } catch (const DegenerateTest& e) {
        cmp.note = e.what();
      }
      report.comparisons.push_back(std::move(cmp));
    }
  }
}

void write_csv(const BenchReport& report, std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const auto& r : report.rows) {
    out << r.instance << ',' << r.method << ',' << r.n << ',' << r.m << ',' << format_double(r.cut) << ','
        << format_double(r.c_opt) << ',' << (r.best_known ? "true" : "false") << ','
        << (r.ar ? format_double(*r.ar) : std::string()) << ',' << r.gt_iterations << ','
        << format_double(r.wall_time_ms) << ',' << r.seed << "\n";
  }
}

void write_summary(const BenchReport& report, std::ostream& out) {
  const auto flags = out.flags();
  out << std::fixed << std::setprecision(4);
  out << "method        AR (mean +- se)      gt_iter   wall_ms   rows\n";
  for (const auto& s : report.summaries) {
    out << std::left << std::setw(12) << s.method << std::right << "  " << s.ar.mean << " +- " << s.ar.standard_error
        << "   " << std::setw(7) << std::setprecision(2) << s.mean_gt_iterations << "   " << std::setw(7)
        << s.mean_wall_time_ms << "   " << s.rows << std::setprecision(4) << "\n";
  }
  for (const auto& c : report.comparisons) {
    out << "wilcoxon " << c.better << " > " << c.baseline << ": ";
    if (c.test) {
      out << "W+ = " << c.test->w_plus << ", k = " << c.test->n_used << ", p_one = " << std::scientific
          << c.test->p_one_sided << ", p_two = " << c.test->p_two_sided << std::fixed
          << (c.test->exact ? " (exact)" : " (normal)") << "\n";
    } else {
      out << c.note << "\n";
    }
  }
  out.flags(flags);
}

}  // namespace gtcut
