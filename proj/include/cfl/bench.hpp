#pragma once

#include <map>
#include <string>
#include <vector>

#include "cfl/counterfactual.hpp"
#include "cfl/problem.hpp"

namespace cfl {

enum class BenchKind { Cf, MaterialAbsurd, CfAbsurd };

const char* to_string(BenchKind k);

struct BenchRecord {
  std::string problem;
  BenchKind kind;
  ProofStatus status;
  double elapsed_ms = 0;
  CfCounters counters;

  bool operator==(const BenchRecord& o) const;
};

struct KindSummary {
  size_t count = 0;
  double mean_ms = 0;
  double min_ms = 0, max_ms = 0;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  std::map<BenchKind, KindSummary> summary() const;
};

/// Runs every problem of the dataset directory (each .clp in name order, the
/// three conditionals per problem). workers > 1 spreads the problems over
/// OpenMP threads; each record itself runs single-worker.
BenchReport run_benchmark(const std::string& dataset_dir, const CfConfig& cfg);

/// The paper-shaped fixed-width table (Formula / Mean / Min / Max, seconds).
std::string format_bench_table(const BenchReport& report);

std::string bench_report_to_json(const BenchReport& report);
BenchReport bench_report_from_json(const std::string& text);

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> checked;  // one line per passed check group
  bool ok() const { return violations.empty(); }
};

/// Construction-time dataset checks: manifest coverage, premise-count span,
/// provably-counterfactual antecedents, oracle agreement on the
/// propositional problems.
ValidationReport validate_dataset(const std::string& dataset_dir, const Budget& generous);

/// Classifies a dataset query; throws Error for shapes outside the three
/// benchmark kinds.
BenchKind classify_query(const Query& q);

}  // namespace cfl
