#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "cfl/bench.hpp"
#include "cfl/errors.hpp"
#include "cfl/parse.hpp"
#include "support.hpp"

using namespace cfl;

namespace {

std::string data_path(const std::string& rel) { return std::string(CFL_DATA_DIR) + "/" + rel; }

CfConfig bench_config() {
  CfConfig cfg;
  cfg.overall_ms = 30000;
  return cfg;
}

}  // namespace

TEST_CASE("query classification covers exactly the three benchmark kinds") {
  SortedSignature sig = testsupport::prop_signature();
  Problem p = parse_problem(R"((problem k
    (rel a ()) (rel b ())
    (assumptions a)
    (queries (cf (not a) b)
             (entail (implies (not a) false))
             (cf (not a) false)
             (entail a))))");
  CHECK(classify_query(p.queries[0]) == BenchKind::Cf);
  CHECK(classify_query(p.queries[1]) == BenchKind::MaterialAbsurd);
  CHECK(classify_query(p.queries[2]) == BenchKind::CfAbsurd);
  CHECK_THROWS_AS(classify_query(p.queries[3]), Error);
}

TEST_CASE("the shipped dataset validates cleanly") {
  Budget generous;
  generous.wall_ms = 10000;
  ValidationReport rep = validate_dataset(data_path("dataset"), generous);
  for (const auto& v : rep.violations) MESSAGE(v);
  CHECK(rep.ok());
  CHECK(rep.checked.size() == 16);
}

TEST_CASE("validation flags a dataset whose antecedent is not counterfactual") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "cfl_bad_dataset";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "bad.clp");
    // Gamma does not prove (not (not a)): phi is satisfiable alongside Gamma.
    out << R"((problem bad
      (rel a ()) (rel b ())
      (assumptions b)
      (queries (cf (not a) b)
               (entail (implies (not a) false))
               (cf (not a) false))))";
  }
  {
    std::ofstream out(dir / "manifest.json");
    out << R"({"problems":[{"file":"bad.clp","premises":1,
      "expected":{"cf":"Proved","material-absurd":"Proved",
                  "cf-absurd":"NotProvedWithinBudget"}}]})";
  }
  Budget generous;
  ValidationReport rep = validate_dataset(dir.string(), generous);
  CHECK(!rep.ok());
  bool flagged_counterfactuality = false;
  for (const auto& v : rep.violations)
    flagged_counterfactuality =
        flagged_counterfactuality || v.find("not provably counterfactual") != std::string::npos;
  CHECK(flagged_counterfactuality);
  // The oracle disagrees on the queries as well.
  bool oracle_flag = false;
  for (const auto& v : rep.violations)
    oracle_flag = oracle_flag || v.find("oracle") != std::string::npos;
  CHECK(oracle_flag);
  fs::remove_all(dir);
}

TEST_CASE("benchmark: expected statuses and summary orderings on the dataset") {
  BenchReport rep = run_benchmark(data_path("dataset"), bench_config());
  CHECK(rep.records.size() == 48);
  for (const auto& r : rep.records) {
    CAPTURE(r.problem);
    CAPTURE(to_string(r.kind));
    if (r.kind == BenchKind::CfAbsurd)
      CHECK(r.status == ProofStatus::NotProvedWithinBudget);
    else
      CHECK(r.status == ProofStatus::Proved);
  }
  auto sums = rep.summary();
  REQUIRE(sums.count(BenchKind::Cf));
  REQUIRE(sums.count(BenchKind::MaterialAbsurd));
  REQUIRE(sums.count(BenchKind::CfAbsurd));
  CHECK(sums[BenchKind::Cf].mean_ms > sums[BenchKind::MaterialAbsurd].mean_ms);
  CHECK(sums[BenchKind::CfAbsurd].mean_ms > sums[BenchKind::Cf].mean_ms);
}

TEST_CASE("benchmark: single-worker runs are deterministic besides timing") {
  BenchReport a = run_benchmark(data_path("dataset"), bench_config());
  BenchReport b = run_benchmark(data_path("dataset"), bench_config());
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].problem == b.records[i].problem);
    CHECK(a.records[i].kind == b.records[i].kind);
    CHECK(a.records[i].status == b.records[i].status);
    CHECK(a.records[i].counters.subsets_examined == b.records[i].counters.subsets_examined);
    CHECK(a.records[i].counters.entail_calls == b.records[i].counters.entail_calls);
    CHECK(a.records[i].counters.consistency_calls ==
          b.records[i].counters.consistency_calls);
  }
}

TEST_CASE("json report round-trips") {
  BenchReport rep = run_benchmark(data_path("dataset"), bench_config());
  BenchReport again = bench_report_from_json(bench_report_to_json(rep));
  REQUIRE(again.records.size() == rep.records.size());
  for (size_t i = 0; i < rep.records.size(); ++i) CHECK(again.records[i] == rep.records[i]);
}

TEST_CASE("the human table mirrors the published shape") {
  BenchReport rep = run_benchmark(data_path("dataset"), bench_config());
  std::string table = format_bench_table(rep);
  CHECK(table.find("Formula") == 0);
  CHECK(table.find("Mean (s)") != std::string::npos);
  CHECK(table.find("cf") != std::string::npos);
  CHECK(table.find("material-absurd") != std::string::npos);
  CHECK(table.find("cf-absurd") != std::string::npos);
}
