#include "cfl/bench.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cfl/errors.hpp"
#include "cfl/oracle.hpp"
#include "cfl/parse.hpp"
#include "cfl/print.hpp"

namespace cfl {

namespace fs = std::filesystem;
using nlohmann::json;

const char* to_string(BenchKind k) {
  switch (k) {
    case BenchKind::Cf: return "cf";
    case BenchKind::MaterialAbsurd: return "material-absurd";
    case BenchKind::CfAbsurd: return "cf-absurd";
  }
  return "?";
}

bool BenchRecord::operator==(const BenchRecord& o) const {
  return problem == o.problem && kind == o.kind && status == o.status &&
         elapsed_ms == o.elapsed_ms &&
         counters.subsets_examined == o.counters.subsets_examined &&
         counters.entail_calls == o.counters.entail_calls &&
         counters.consistency_calls == o.counters.consistency_calls;
}

BenchKind classify_query(const Query& q) {
  if (q.kind == QueryKind::Entail) {
    const FormulaPtr& goal = q.formulas[0];
    if (goal->kind() == FormulaKind::Implies && goal->subs()[1]->is_falsum())
      return BenchKind::MaterialAbsurd;
    throw Error("dataset query is not one of the three benchmark conditionals: " +
                print_formula(goal));
  }
  if (q.kind == QueryKind::Cf)
    return q.formulas[1]->is_falsum() ? BenchKind::CfAbsurd : BenchKind::Cf;
  throw Error("dataset query is not one of the three benchmark conditionals");
}

namespace {

std::vector<fs::path> dataset_files(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".clp") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw Error("no .clp problems in " + dir);
  return files;
}

BenchRecord run_query(const Problem& p, const Query& q, const CfConfig& cfg) {
  BenchRecord rec;
  rec.problem = p.name;
  rec.kind = classify_query(q);
  CfConfig one = cfg;
  one.workers = 1;  // never parallel inside a record
  if (rec.kind == BenchKind::MaterialAbsurd) {
    Budget b{cfg.overall_ms, cfg.depth, cfg.max_clauses};
    ProofOutcome out = prove(p.signature, p.assumptions, q.formulas[0], b);
    rec.status = out.status;
    rec.elapsed_ms = out.elapsed_ms;
  } else {
    CfResult out =
        prove_counterfactual(p.signature, p.assumptions, q.formulas[0], q.formulas[1], one);
    rec.status = out.status;
    rec.elapsed_ms = out.elapsed_ms;
    rec.counters = out.counters;
  }
  return rec;
}

}  // namespace

BenchReport run_benchmark(const std::string& dataset_dir, const CfConfig& cfg) {
  auto files = dataset_files(dataset_dir);
  std::vector<Problem> problems;
  problems.reserve(files.size());
  for (const auto& f : files) problems.push_back(parse_problem_file(f.string()));

  struct Job {
    const Problem* problem;
    const Query* query;
  };
  std::vector<Job> jobs;
  for (const auto& p : problems)
    for (const auto& q : p.queries) jobs.push_back({&p, &q});

  BenchReport report;
  report.records.resize(jobs.size());
  if (cfg.workers > 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.workers)
#endif
    for (size_t i = 0; i < jobs.size(); ++i)
      report.records[i] = run_query(*jobs[i].problem, *jobs[i].query, cfg);
  } else {
    for (size_t i = 0; i < jobs.size(); ++i)
      report.records[i] = run_query(*jobs[i].problem, *jobs[i].query, cfg);
  }
  return report;
}

std::map<BenchKind, KindSummary> BenchReport::summary() const {
  std::map<BenchKind, KindSummary> out;
  for (const auto& r : records) {
    KindSummary& s = out[r.kind];
    if (s.count == 0) {
      s.min_ms = r.elapsed_ms;
      s.max_ms = r.elapsed_ms;
    } else {
      s.min_ms = std::min(s.min_ms, r.elapsed_ms);
      s.max_ms = std::max(s.max_ms, r.elapsed_ms);
    }
    s.mean_ms += r.elapsed_ms;
    s.count++;
  }
  for (auto& [k, s] : out) {
    (void)k;
    if (s.count) s.mean_ms /= (double)s.count;
  }
  return out;
}

std::string format_bench_table(const BenchReport& report) {
  auto sums = report.summary();
  char line[128];
  std::string out;
  snprintf(line, sizeof line, "%-18s %10s %10s %10s\n", "Formula", "Mean (s)", "Min (s)",
           "Max (s)");
  out += line;
  for (BenchKind k : {BenchKind::Cf, BenchKind::MaterialAbsurd, BenchKind::CfAbsurd}) {
    auto it = sums.find(k);
    if (it == sums.end()) continue;
    const KindSummary& s = it->second;
    snprintf(line, sizeof line, "%-18s %10.3f %10.3f %10.3f\n", to_string(k),
             s.mean_ms / 1000.0, s.min_ms / 1000.0, s.max_ms / 1000.0);
    out += line;
  }
  return out;
}

namespace {

json record_to_json(const BenchRecord& r) {
  return json{{"problem", r.problem},
              {"kind", to_string(r.kind)},
              {"status", to_string(r.status)},
              {"elapsed_ms", r.elapsed_ms},
              {"subsets_examined", r.counters.subsets_examined},
              {"entail_calls", r.counters.entail_calls},
              {"consistency_calls", r.counters.consistency_calls}};
}

BenchKind kind_from_string(const std::string& s) {
  if (s == "cf") return BenchKind::Cf;
  if (s == "material-absurd") return BenchKind::MaterialAbsurd;
  if (s == "cf-absurd") return BenchKind::CfAbsurd;
  throw Error("unknown benchmark kind: " + s);
}

ProofStatus status_from_string(const std::string& s) {
  if (s == "Proved") return ProofStatus::Proved;
  if (s == "NotProvedWithinBudget") return ProofStatus::NotProvedWithinBudget;
  throw Error("unknown status: " + s);
}

}  // namespace

std::string bench_report_to_json(const BenchReport& report) {
  json records = json::array();
  for (const auto& r : report.records) records.push_back(record_to_json(r));
  json sums = json::object();
  for (const auto& [k, s] : report.summary())
    sums[to_string(k)] = {{"count", s.count},
                          {"mean_ms", s.mean_ms},
                          {"min_ms", s.min_ms},
                          {"max_ms", s.max_ms}};
  return json{{"records", records}, {"summary", sums}}.dump(2);
}

BenchReport bench_report_from_json(const std::string& text) {
  json j = json::parse(text);
  BenchReport report;
  for (const auto& r : j.at("records")) {
    BenchRecord rec;
    rec.problem = r.at("problem").get<std::string>();
    rec.kind = kind_from_string(r.at("kind").get<std::string>());
    rec.status = status_from_string(r.at("status").get<std::string>());
    rec.elapsed_ms = r.at("elapsed_ms").get<double>();
    rec.counters.subsets_examined = r.at("subsets_examined").get<uint64_t>();
    rec.counters.entail_calls = r.at("entail_calls").get<uint64_t>();
    rec.counters.consistency_calls = r.at("consistency_calls").get<uint64_t>();
    report.records.push_back(std::move(rec));
  }
  return report;
}

ValidationReport validate_dataset(const std::string& dataset_dir, const Budget& generous) {
  ValidationReport report;
  auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };

  std::vector<fs::path> files;
  try {
    files = dataset_files(dataset_dir);
  } catch (const Error& e) {
    flag(e.what());
    return report;
  }

  json manifest;
  fs::path mpath = fs::path(dataset_dir) / "manifest.json";
  std::map<std::string, json> expected_by_file;
  if (!fs::exists(mpath)) {
    flag("manifest.json missing");
  } else {
    std::ifstream in(mpath);
    try {
      manifest = json::parse(in);
      for (const auto& e : manifest.at("problems"))
        expected_by_file[e.at("file").get<std::string>()] = e;
    } catch (const std::exception& e) {
      flag(std::string("manifest.json unreadable: ") + e.what());
    }
  }

  if (files.size() < 16)
    flag("dataset has " + std::to_string(files.size()) + " problems, need at least 16");

  std::set<size_t> premise_counts;
  for (const auto& path : files) {
    std::string fname = path.filename().string();
    Problem p;
    try {
      p = parse_problem_file(path.string());
    } catch (const Error& e) {
      flag(fname + ": " + e.what());
      continue;
    }
    premise_counts.insert(p.assumptions.size());

    if (!expected_by_file.count(fname)) {
      flag(fname + ": not listed in manifest.json");
    } else {
      const json& entry = expected_by_file[fname];
      if (entry.contains("premises") &&
          entry["premises"].get<size_t>() != p.assumptions.size())
        flag(fname + ": manifest premise count differs from file");
    }

    // Exactly the three benchmark conditionals, sharing one antecedent.
    FormulaPtr phi;
    std::map<BenchKind, size_t> seen;
    for (const auto& q : p.queries) {
      BenchKind k;
      try {
        k = classify_query(q);
      } catch (const Error& e) {
        flag(fname + ": " + e.what());
        continue;
      }
      seen[k]++;
      FormulaPtr ante = q.kind == QueryKind::Entail ? q.formulas[0]->subs()[0] : q.formulas[0];
      if (!phi) phi = ante;
      else if (!alpha_equal(phi, ante))
        flag(fname + ": queries do not share one antecedent");
    }
    for (BenchKind k : {BenchKind::Cf, BenchKind::MaterialAbsurd, BenchKind::CfAbsurd})
      if (seen[k] != 1)
        flag(fname + ": expected exactly one " + std::string(to_string(k)) + " query");
    if (!phi) continue;

    // The antecedent must be provably counterfactual: Gamma |- not phi.
    ProofOutcome counterfactuality =
        prove(p.signature, p.assumptions, Formula::lnot(phi), generous);
    if (counterfactuality.status != ProofStatus::Proved)
      flag(fname + ": antecedent is not provably counterfactual (Gamma |/- not phi)");

    // Oracle cross-check on fully propositional problems.
    bool propositional = std::all_of(p.assumptions.begin(), p.assumptions.end(),
                                     [](const FormulaPtr& f) { return is_propositional(f); });
    for (const auto& q : p.queries)
      for (const auto& f : q.formulas) propositional = propositional && is_propositional(f);
    if (propositional && p.assumptions.size() <= 12) {
      for (const auto& q : p.queries) {
        BenchKind k = classify_query(q);
        if (k == BenchKind::MaterialAbsurd) {
          if (!oracle_entails(p.assumptions, q.formulas[0]))
            flag(fname + ": oracle rejects the material-absurd conditional");
        } else {
          OracleVerdict v = oracle_counterfactual(p.assumptions, q.formulas[0], q.formulas[1]);
          bool want = k == BenchKind::Cf;
          if (v.entailed != want)
            flag(fname + ": oracle disagrees on the " + std::string(to_string(k)) + " query");
        }
      }
      report.checked.push_back(fname + ": oracle-verified");
    } else {
      report.checked.push_back(fname + ": counterfactuality verified");
    }
  }

  for (size_t n = 2; n <= 15; ++n)
    if (!premise_counts.count(n))
      flag("no problem with exactly " + std::to_string(n) + " premises (need 2..15 covered)");

  return report;
}

}  // namespace cfl
