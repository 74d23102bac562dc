#include "gtcut/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "gtcut/agent.hpp"
#include "gtcut/bench.hpp"
#include "gtcut/error.hpp"
#include "gtcut/gt_loop.hpp"
#include "gtcut/instance.hpp"
#include "gtcut/numfmt.hpp"
#include "gtcut/rng.hpp"
#include "gtcut/solvers.hpp"

namespace gtcut {

namespace {

struct TopologyFlags {
  std::string type = "ba";
  int n_min = 15;
  int n_max = 20;
  int avg_degree = 0;
  int m_attach = 0;
  double p = 0.15;
  int k = 4;
  double p_rewire = 0.1;
  std::string weights = "uniform";

  void add_to(CLI::App& cmd) {
    cmd.add_option("--type", type, "Topology: ba, er or ws")->check(CLI::IsMember({"ba", "er", "ws"}))->capture_default_str();
    cmd.add_option("--n-min", n_min, "Smallest node count (inclusive)")->capture_default_str();
    cmd.add_option("--n-max", n_max, "Largest node count (inclusive)")->capture_default_str();
    cmd.add_option("--avg-degree", avg_degree, "BA average degree; sets m_attach = avg/2 (even values only)");
    cmd.add_option("--m-attach", m_attach, "BA edges added per new node (default 2)");
    cmd.add_option("--p", p, "ER edge probability")->capture_default_str();
    cmd.add_option("--k", k, "WS ring neighbours (even)")->capture_default_str();
    cmd.add_option("--p-rewire", p_rewire, "WS rewiring probability")->capture_default_str();
    cmd.add_option("--weights", weights, "Edge weights: uniform, normal or du")
        ->check(CLI::IsMember({"uniform", "normal", "du"}))
        ->capture_default_str();
  }

  TopologySpec topology() const {
    TopologySpec spec;
    spec.n_min = n_min;
    spec.n_max = n_max;
    if (type == "er") {
      spec.kind = ErdosRenyi{p};
    } else if (type == "ws") {
      spec.kind = WattsStrogatz{k, p_rewire};
    } else {
      int m = 2;
      if (avg_degree) {
        if (avg_degree % 2 != 0 || avg_degree < 2) throw ConfigError("--avg-degree must be an even number >= 2");
        m = avg_degree / 2;
      }
      if (m_attach) m = m_attach;
      spec.kind = BarabasiAlbert{m};
    }
    spec.validate();
    return spec;
  }
};

std::string spins_string(const SpinConfiguration& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ' ';
    out += s[i] > 0 ? "+1" : "-1";
  }
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("GTCUT_JOBS")) {
    if (auto v = parse_int<int>(env); v && *v >= 1) return *v;
  }
  return 1;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"MaxCut solvers with gauge-transformation restarts"};
  app.name(args.empty() ? "gtcut" : std::filesystem::path(args[0]).filename().string());
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "Write seeded synthetic instances");
  TopologyFlags gen_topo;
  gen_topo.add_to(*gen);
  int gen_count = 1;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  gen->add_option("--count", gen_count, "Number of instances")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Base seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output directory")->required();

  // exact
  auto* exact = app.add_subcommand("exact", "Solve one instance by exhaustive search");
  std::string exact_instance;
  std::size_t exact_limit = kDefaultExactNodeLimit;
  exact->add_option("--instance", exact_instance, "Instance file")->required();
  exact->add_option("--limit", exact_limit, "Largest node count to attempt")->capture_default_str();

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance with a chosen method");
  std::string solve_instance, solve_method = "mca-gt", solve_model;
  int solve_m_init = 1, solve_max_iter = 50;
  std::uint64_t solve_seed = 0;
  solve->add_option("--instance", solve_instance, "Instance file")->required();
  solve->add_option("--method", solve_method, "mca, mca-gt, s2v, s2v-gt or exact")->capture_default_str();
  solve->add_option("--model", solve_model, "Model file for s2v methods");
  solve->add_option("--m-init", solve_m_init, "Initial configurations for GT methods")->capture_default_str();
  solve->add_option("--max-iterations", solve_max_iter, "GT iteration bound")->capture_default_str();
  solve->add_option("--seed", solve_seed, "Seed for random starts")->capture_default_str();

  // train
  auto* tr = app.add_subcommand("train", "Train the structure2vec Q-network");
  TopologyFlags tr_topo;
  tr_topo.add_to(*tr);
  TrainConfig tr_cfg;
  std::optional<double> tr_gamma;
  std::optional<int> tr_layers;
  std::string tr_out;
  tr->add_option("--gamma", tr_gamma, "Discount (default by weight distribution: uniform 0.90, otherwise 0.99)");
  tr->add_option("--layers", tr_layers, "Message-passing rounds (default: uniform 3, otherwise 5)");
  tr->add_option("--n-step", tr_cfg.n_step, "n-step return horizon")->capture_default_str();
  tr->add_option("--episodes", tr_cfg.episodes, "Training episodes")->capture_default_str();
  tr->add_option("--embed-dim", tr_cfg.embed_dim, "Embedding width p")->capture_default_str();
  tr->add_option("--lr", tr_cfg.learning_rate, "SGD step size")->capture_default_str();
  tr->add_option("--batch-size", tr_cfg.batch_size, "Replay minibatch size")->capture_default_str();
  tr->add_option("--replay", tr_cfg.replay_capacity, "Replay capacity")->capture_default_str();
  tr->add_option("--eps-fraction", tr_cfg.epsilon_decay_fraction, "Fraction of episodes for epsilon decay")
      ->capture_default_str();
  tr->add_option("--grad-clip", tr_cfg.grad_clip, "Gradient norm clip (0 = off)")->capture_default_str();
  tr->add_option("--seed", tr_cfg.seed, "Seed")->capture_default_str();
  tr->add_option("--out", tr_out, "Model output file")->required();

  // bench
  auto* bench = app.add_subcommand("bench", "Run methods over a dataset and report approximation ratios");
  std::string bench_methods = "mca,mca-gt", bench_model, bench_dataset, bench_opt = "exact", bench_report;
  BenchOptions bench_opts;
  bench_opts.jobs = default_jobs();
  bench->add_option("--methods", bench_methods, "Comma-separated: mca, mca-gt, s2v, s2v-gt, exact")
      ->capture_default_str();
  bench->add_option("--model", bench_model, "Model file for s2v methods");
  bench->add_option("--dataset", bench_dataset, "Directory of instance files")->required();
  bench->add_option("--opt", bench_opt, "Reference optimum: exact or best-known")
      ->check(CLI::IsMember({"exact", "best-known"}))
      ->capture_default_str();
  bench->add_option("--report", bench_report, "CSV output path (default: stdout)");
  bench->add_option("--seed", bench_opts.seed, "Seed")->capture_default_str();
  bench->add_option("--jobs", bench_opts.jobs, "Worker threads (default $GTCUT_JOBS or 1)")->capture_default_str();
  bench->add_option("--m-init", bench_opts.m_init, "Initial configurations for GT methods")->capture_default_str();
  bench->add_option("--max-iterations", bench_opts.max_iterations, "GT iteration bound")->capture_default_str();
  bench->add_flag("--timing", bench_opts.timing, "Record per-solve wall time (report is then not reproducible)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << app.get_name() << ": " << e.what() << "\n";
    err << "run '" << app.get_name() << " --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) {
      InstanceSpec spec;
      spec.topology = gen_topo.topology();
      spec.weights = parse_weight_distribution(gen_topo.weights);
      spec.count = gen_count;
      spec.base_seed = gen_seed;
      spec.validate();
      std::filesystem::create_directories(gen_out);
      const int width = std::max<int>(3, static_cast<int>(std::to_string(gen_count - 1).size()));
      for (int i = 0; i < gen_count; ++i) {
        std::string name = std::to_string(i);
        name = "inst_" + std::string(static_cast<std::size_t>(std::max(0, width - static_cast<int>(name.size()))), '0') + name + ".mc";
        write_instance(generate_instance(spec, i), std::filesystem::path(gen_out) / name);
      }
      out << "wrote " << gen_count << " instances to " << gen_out << "\n";
      return kExitOk;
    }

    if (exact->parsed()) {
      const auto g = read_instance(std::filesystem::path(exact_instance));
      const auto result = exact_brute_force(g, exact_limit);
      out << "cut " << format_double(result.cut()) << "\n";
      out << "spins " << spins_string(result.configuration()) << "\n";
      return kExitOk;
    }

    if (solve->parsed()) {
      const Method method = parse_method(solve_method);
      const auto g = read_instance(std::filesystem::path(solve_instance));
      GtConfig cfg = GtConfig::for_graph(g);
      cfg.m_init = solve_m_init;
      cfg.max_iterations = solve_max_iter;
      const McaSolver mca_solver;
      std::optional<S2vSolver> s2v;
      if (method == Method::kS2v || method == Method::kS2vGt) {
        if (solve_model.empty()) throw ConfigError("s2v methods need --model");
        s2v.emplace(load_params(std::filesystem::path(solve_model)));
      }
      const auto all_plus = SpinConfiguration::all_plus(g.node_count());
      int iterations = 0;
      std::optional<SolveResult> result;
      switch (method) {
        case Method::kMca: result.emplace(mca_solver.solve(g, all_plus)); break;
        case Method::kMcaGt: result.emplace(multi_init_solve(g, mca_solver, cfg, solve_seed, &iterations)); break;
        case Method::kS2v: result.emplace(s2v->solve(g, all_plus)); break;
        case Method::kS2vGt: result.emplace(multi_init_solve(g, *s2v, cfg, solve_seed, &iterations)); break;
        case Method::kExact: result.emplace(exact_brute_force(g)); break;
      }
      out << "method " << solve_method << "\n";
      out << "cut " << format_double(result->cut()) << "\n";
      out << "gt_iterations " << iterations << "\n";
      out << "spins " << spins_string(result->configuration()) << "\n";
      return kExitOk;
    }

    if (tr->parsed()) {
      InstanceSpec spec;
      spec.topology = tr_topo.topology();
      spec.weights = parse_weight_distribution(tr_topo.weights);
      spec.count = tr_cfg.episodes;
      spec.base_seed = derive_seed(tr_cfg.seed, 3);
      const bool uniform = spec.weights == WeightDistribution::kUniform01;
      tr_cfg.gamma = tr_gamma.value_or(uniform ? 0.90 : 0.99);
      tr_cfg.rounds = tr_layers.value_or(uniform ? 3 : 5);
      const auto params = train(tr_cfg, [&](std::int64_t ep) { return generate_instance(spec, static_cast<int>(ep)); });
      save_params(params, std::filesystem::path(tr_out));
      out << "trained " << tr_cfg.episodes << " episodes (p=" << tr_cfg.embed_dim << ", T=" << tr_cfg.rounds
          << ", n_step=" << tr_cfg.n_step << ", gamma=" << format_double(tr_cfg.gamma) << ") -> " << tr_out << "\n";
      return kExitOk;
    }

    if (bench->parsed()) {
      bench_opts.dataset = bench_dataset;
      bench_opts.methods = parse_method_list(bench_methods);
      if (!bench_model.empty()) bench_opts.model = bench_model;
      bench_opts.opt = bench_opt == "exact" ? OptSource::kExact : OptSource::kBestKnown;
      const auto report = run_benchmark(bench_opts);
      if (bench_report.empty()) {
        write_csv(report, out);
      } else {
        std::ofstream csv(bench_report, std::ios::binary);
        if (!csv) throw IoError("cannot open " + bench_report + " for writing");
        write_csv(report, csv);
        if (!csv.flush()) throw IoError("failed writing " + bench_report);
        write_summary(report, out);
      }
      for (const auto& e : report.errors) err << "error: " << e << "\n";
      return report.errors.empty() ? kExitOk : kExitRecordedErrors;
    }
  } catch (const ConfigError& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << app.get_name() << ": " << e.what() << "\n";
    return kExitRecordedErrors;
  }
  return kExitUsage;
}

int cli_main(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cli_main(args, std::cout, std::cerr);
}

}  // namespace gtcut
