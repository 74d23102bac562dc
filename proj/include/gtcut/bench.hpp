#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gtcut/graph.hpp"
#include "gtcut/stats.hpp"

namespace gtcut {

enum class Method { kMca, kMcaGt, kS2v, kS2vGt, kExact };

// Throws ConfigError for unknown names.
Method parse_method(const std::string& name);
std::string to_string(Method m);
std::vector<Method> parse_method_list(const std::string& csv);

enum class OptSource { kExact, kBestKnown };

struct BenchOptions {
  std::filesystem::path dataset;
  std::vector<Method> methods;
  std::optional<std::filesystem::path> model;
  OptSource opt = OptSource::kExact;
  std::uint64_t seed = 0;
  int jobs = 1;
  int m_init = 1;
  int max_iterations = 50;
  // Restarts of multi-start MCA-GT folded into the best-known bound.
  int best_known_restarts = 100;
  std::size_t exact_node_limit = 24;
  // Measure wall time per solve; when off the column is 0 so reports are
  // byte-reproducible.
  bool timing = false;
};

struct BenchRow {
  std::string instance;
  std::string method;
  std::size_t n = 0;
  std::size_t m = 0;
  double cut = 0.0;
  double c_opt = 0.0;
  bool best_known = false;
  std::optional<double> ar;
  int gt_iterations = 0;
  double wall_time_ms = 0.0;
  std::uint64_t seed = 0;
  SpinConfiguration configuration;
};

struct MethodSummary {
  std::string method;
  MeanSe ar;
  double mean_gt_iterations = 0.0;
  double mean_wall_time_ms = 0.0;
  std::size_t rows = 0;
};

// Signed-rank test of cuts, alternative: `better` > `baseline`.
struct PairComparison {
  std::string baseline;
  std::string better;
  std::optional<WilcoxonResult> test;
  std::string note;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<MethodSummary> summaries;
  std::vector<PairComparison> comparisons;
  std::vector<std::string> errors;
};

// Solves every instance in the dataset directory (regular files, sorted by
// name) with every method. Per-item failures are collected in errors and
// the run continues.
BenchReport run_benchmark(const BenchOptions& options);

inline constexpr const char* kCsvHeader = "instance,method,n,m,cut,c_opt,best_known,ar,gt_iterations,wall_time_ms,seed";

void write_csv(const BenchReport& report, std::ostream& out);
void write_summary(const BenchReport& report, std::ostream& out);

// Recomputes summaries and comparisons from rows (used by run_benchmark).
void summarize(BenchReport& report, const std::vector<Method>& methods);

}  // namespace gtcut
