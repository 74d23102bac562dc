#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gtcut/agent.hpp"
#include "gtcut/bench.hpp"
#include "gtcut/cli.hpp"
#include "gtcut/error.hpp"
#include "gtcut/instance.hpp"
#include "gtcut/numfmt.hpp"

using namespace gtcut;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "gtcut");
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("gtcut_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

fs::path make_dataset(const std::string& name, int count, const std::string& weights = "normal") {
  const auto dir = scratch(name);
  const auto r = run({"generate", "--type", "ba", "--n-min", "15", "--n-max", "20", "--avg-degree", "4", "--weights",
                      weights, "--count", std::to_string(count), "--seed", "7", "--out", dir.string()});
  REQUIRE(r.code == 0);
  return dir;
}

}  // namespace

TEST_CASE("generate writes numbered instance files") {
  const auto dir = make_dataset("generate", 50);
  CHECK(fs::exists(dir / "inst_000.mc"));
  CHECK(fs::exists(dir / "inst_049.mc"));
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}) == 50);
  const auto g = read_instance(dir / "inst_000.mc");
  CHECK(g.edge_count() == 2 * (g.node_count() - 2) + 1);
}

TEST_CASE("exact and solve subcommands") {
  const auto dir = scratch("exact");
  {
    std::ofstream f(dir / "path.mc");
    f << "n 3\nm 2\ne 0 1 1\ne 1 2 1\n";
  }
  auto r = run({"exact", "--instance", (dir / "path.mc").string()});
  CHECK(r.code == 0);
  CHECK(r.out == "cut 2\nspins +1 -1 +1\n");
  r = run({"solve", "--instance", (dir / "path.mc").string(), "--method", "mca-gt"});
  CHECK(r.code == 0);
  CHECK(r.out.find("cut 2\ngt_iterations 2\n") != std::string::npos);
  r = run({"solve", "--instance", (dir / "missing.mc").string()});
  CHECK(r.code == 1);
  CHECK_FALSE(r.err.empty());
  r = run({"solve", "--instance", (dir / "path.mc").string(), "--method", "s2v"});
  CHECK(r.code != 0);
}

TEST_CASE("usage errors and help") {
  auto r = run({"bench", "--bogus"});
  CHECK(r.code == kExitUsage);
  CHECK_FALSE(r.err.empty());
  CHECK(run({}).code == kExitUsage);
  r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bench") != std::string::npos);
  r = run({"bench", "--help"});
  CHECK(r.code == 0);
  for (const char* flag : {"--methods", "--model", "--dataset", "--opt", "--report", "--seed", "--jobs", "--timing"}) {
    CHECK(r.out.find(flag) != std::string::npos);
  }
  r = run({"generate", "--type", "ba", "--avg-degree", "3", "--out", scratch("odd").string()});
  CHECK(r.code == kExitUsage);
}

TEST_CASE("bench in exact mode") {
  const auto dir = make_dataset("bench_exact", 12);
  const auto out = scratch("bench_exact_out") / "report.csv";
  const auto r = run({"bench", "--methods", "mca,mca-gt,exact", "--dataset", dir.string(), "--opt", "exact",
                      "--report", out.string(), "--seed", "11"});
  REQUIRE(r.code == 0);
  const auto rows = csv_rows(slurp(out));
  REQUIRE(rows.size() == 1 + 12 * 3);
  CHECK(slurp(out).rfind(std::string(kCsvHeader) + "\n", 0) == 0);

  std::map<std::string, std::map<std::string, double>> ar;
  std::map<std::string, std::vector<double>> by_method;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 11);
    const double value = *parse_double(rows[i][7]);
    ar[rows[i][1]][rows[i][0]] = value;
    by_method[rows[i][1]].push_back(value);
    CHECK(rows[i][6] == "false");
    CHECK(rows[i][9] == "0");
    CHECK(value <= 1.0 + 1e-9);
    // The cut re-verifies against the instance file.
    CHECK(*parse_double(rows[i][4]) <= *parse_double(rows[i][5]) + 1e-9);
  }
  for (const auto& [instance, value] : ar["exact"]) CHECK(value == 1.0);
  for (const auto& [instance, value] : ar["mca"]) CHECK(ar["mca-gt"][instance] >= value);

  // Aggregates agree with a naive recomputation from the CSV.
  BenchOptions opts;
  opts.dataset = dir;
  opts.methods = parse_method_list("mca,mca-gt,exact");
  opts.seed = 11;
  const auto report = run_benchmark(opts);
  for (const auto& s : report.summaries) {
    const auto& values = by_method[s.method];
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double se = std::sqrt(ss / static_cast<double>(values.size() - 1)) / std::sqrt(double(values.size()));
    CHECK(std::abs(s.ar.mean - mean) <= 1e-12);
    CHECK(std::abs(s.ar.standard_error - se) <= 1e-12);
  }
  REQUIRE(report.comparisons.size() == 3);
  CHECK(report.comparisons[0].baseline == "mca");
  CHECK(report.comparisons[0].better == "mca-gt");
}

TEST_CASE("bench CSV is reproducible across runs and job counts") {
  const auto dir = make_dataset("bench_det", 10);
  const auto model = scratch("bench_det_model") / "model.gm";
  REQUIRE(run({"train", "--type", "ba", "--n-min", "8", "--n-max", "10", "--weights", "uniform", "--episodes", "20",
               "--embed-dim", "8", "--batch-size", "8", "--seed", "3", "--out", model.string()})
              .code == 0);
  std::vector<std::string> args{"bench",   "--methods", "mca,mca-gt,s2v,s2v-gt", "--model", model.string(),
                                "--dataset", dir.string(), "--opt", "best-known", "--seed", "11"};
  const auto a = run(args);
  const auto b = run(args);
  args.insert(args.end(), {"--jobs", "4"});
  const auto c = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const auto rows = csv_rows(a.out);
  REQUIRE(rows.size() == 41);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i][6] == "true");
}

TEST_CASE("bench records per-item errors and keeps going") {
  const auto dir = make_dataset("bench_err", 3);
  {
    std::ofstream f(dir / "inst_zzz.mc");
    f << "n 2\nm 1\ne 0 0 1\n";
  }
  auto r = run({"bench", "--methods", "mca", "--dataset", dir.string()});
  CHECK(r.code == kExitRecordedErrors);
  CHECK(r.err.find("inst_zzz") != std::string::npos);
  CHECK(csv_rows(r.out).size() == 4);

  r = run({"bench", "--methods", "mca,s2v", "--model", "/nonexistent/model.gm", "--dataset", dir.string()});
  CHECK(r.code == kExitRecordedErrors);
  CHECK(r.err.find("model") != std::string::npos);
  CHECK(csv_rows(r.out).size() == 4);

  fs::remove(dir / "inst_zzz.mc");
  r = run({"bench", "--methods", "exact", "--dataset", dir.string()});
  CHECK(r.code == 0);
  CHECK(run({"bench", "--methods", "nope", "--dataset", dir.string()}).code == kExitUsage);
  CHECK(run({"bench", "--methods", "mca", "--dataset", scratch("empty").string()}).code == kExitRecordedErrors);
}
