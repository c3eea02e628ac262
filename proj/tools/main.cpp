// Command-line front end: prove / cf / cf-in / bench / dde / oracle over
// problem files. Exit codes: 0 proved (or bench/validation complete), 1 not
// proved within budget, 2 input error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cfl/bench.hpp"
#include "cfl/counterfactual.hpp"
#include "cfl/errors.hpp"
#include "cfl/ethics.hpp"
#include "cfl/oracle.hpp"
#include "cfl/parse.hpp"
#include "cfl/print.hpp"

using namespace cfl;
using nlohmann::json;

namespace {

struct Options {
  std::string file;
  int64_t timeout_ms = 30000;
  int64_t delta_ms = 1000;
  int64_t entail_ms = 2000;
  int depth = 3;
  std::string order = "large-first";
  bool json_out = false;
  int query = 0;  // 1-based index into the file's query list; 0 = first of kind
  int jobs = 1;
};

CfConfig make_config(const Options& o) {
  CfConfig cfg;
  cfg.delta_ms = o.delta_ms;
  cfg.entail_ms = o.entail_ms;
  cfg.overall_ms = o.timeout_ms;
  cfg.depth = o.depth;
  cfg.order = o.order == "small-first" ? SubsetOrder::SmallFirst : SubsetOrder::LargeFirst;
  cfg.workers = o.jobs;
  return cfg;
}

void add_common(CLI::App* cmd, Options& o, bool with_file = true) {
  if (with_file) cmd->add_option("file", o.file, "problem file (.clp)")->required();
  cmd->add_option("--timeout-ms", o.timeout_ms, "overall wall clock per query");
  cmd->add_option("--delta-ms", o.delta_ms, "consistency check time limit");
  cmd->add_option("--entail-ms", o.entail_ms, "per-entailment time limit");
  cmd->add_option("--depth", o.depth, "schema expansion depth");
  cmd->add_option("--order", o.order, "subset order")
      ->check(CLI::IsMember({"small-first", "large-first"}));
  cmd->add_option("--jobs", o.jobs, "parallel workers for subset search");
  cmd->add_flag("--json", o.json_out, "single JSON document output");
}

const Query* select_query(const Problem& p, QueryKind kind, int index) {
  if (index > 0) {
    if ((size_t)index > p.queries.size()) return nullptr;
    const Query* q = &p.queries[(size_t)index - 1];
    return q->kind == kind ? q : nullptr;
  }
  for (const auto& q : p.queries)
    if (q.kind == kind) return &q;
  return nullptr;
}

json witness_json(const CfResult& r) {
  json w = json::object();
  if (!r.witness) return w;
  w["inconsistent_antecedent"] = r.witness->inconsistent_antecedent;
  w["approximation_used"] = r.witness->approximation_used;
  json subset = json::array();
  for (const auto& f : r.witness->gamma_prime) subset.push_back(print_formula(f));
  w["gamma_prime"] = subset;
  w["indices"] = r.witness->indices;
  return w;
}

void print_cf_result(const Problem& p, const Query& q, const CfResult& r, bool as_json) {
  if (as_json) {
    json out{{"problem", p.name},
             {"query", "cf"},
             {"antecedent", print_formula(q.formulas[0])},
             {"consequent", print_formula(q.formulas[1])},
             {"status", to_string(r.status)},
             {"elapsed_ms", r.elapsed_ms},
             {"counters",
              {{"subsets_examined", r.counters.subsets_examined},
               {"entail_calls", r.counters.entail_calls},
               {"consistency_calls", r.counters.consistency_calls}}},
             {"witness", witness_json(r)}};
    if (!q.ctx.entries.empty()) out["context"] = print_context(q.ctx);
    std::cout << out.dump(2) << "\n";
    return;
  }
  char timing[64];
  snprintf(timing, sizeof timing, "%.1f", r.elapsed_ms);
  std::cout << p.name << ": " << to_string(r.status) << " (" << timing << " ms, "
            << r.counters.subsets_examined << " subsets, " << r.counters.entail_calls
            << " entailment calls, " << r.counters.consistency_calls
            << " consistency calls)\n";
  if (r.witness) {
    if (r.witness->inconsistent_antecedent) {
      std::cout << "  witness: inconsistent antecedent\n";
    } else {
      std::cout << "  witness Gamma' (consistency approximated within delta):\n";
      for (const auto& f : r.witness->gamma_prime)
        std::cout << "    " << print_formula(f) << "\n";
    }
  }
}

int run_entail(const Options& o) {
  Problem p = parse_problem_file(o.file);
  const Query* q = select_query(p, QueryKind::Entail, o.query);
  if (!q) throw Error("no matching entail query in " + o.file);
  Budget b{o.timeout_ms, o.depth, 200000};
  ProofOutcome out = prove(p.signature, p.assumptions, q->formulas[0], b);
  if (o.json_out) {
    std::cout << json{{"problem", p.name},
                      {"query", "entail"},
                      {"goal", print_formula(q->formulas[0])},
                      {"status", to_string(out.status)},
                      {"elapsed_ms", out.elapsed_ms},
                      {"schema_steps", out.steps.size()},
                      {"clauses_generated", out.clauses_generated}}
                     .dump(2)
              << "\n";
  } else {
    char timing[64];
    snprintf(timing, sizeof timing, "%.1f", out.elapsed_ms);
    std::cout << p.name << ": " << to_string(out.status) << " (" << timing << " ms, "
              << out.steps.size() << " schema steps, " << out.clauses_generated
              << " clauses)\n";
  }
  return out.status == ProofStatus::Proved ? 0 : 1;
}

int run_cf(const Options& o, bool in_context) {
  Problem p = parse_problem_file(o.file);
  const Query* q =
      select_query(p, in_context ? QueryKind::CfInContext : QueryKind::Cf, o.query);
  if (!q) throw Error(std::string("no matching ") + (in_context ? "cf-in" : "cf") +
                      " query in " + o.file);
  CfConfig cfg = make_config(o);
  CfResult r = in_context
                   ? prove_counterfactual_in_context(p.signature, p.assumptions, q->ctx,
                                                     q->formulas[0], q->formulas[1], cfg)
                   : prove_counterfactual(p.signature, p.assumptions, q->formulas[0],
                                          q->formulas[1], cfg);
  print_cf_result(p, *q, r, o.json_out);
  return r.status == ProofStatus::Proved ? 0 : 1;
}

int run_bench(const Options& o, const std::string& dir, bool validate) {
  if (validate) {
    Budget generous{o.timeout_ms, o.depth, 200000};
    ValidationReport rep = validate_dataset(dir, generous);
    if (o.json_out) {
      std::cout << json{{"violations", rep.violations}, {"checked", rep.checked}}.dump(2)
                << "\n";
    } else {
      for (const auto& c : rep.checked) std::cout << "ok: " << c << "\n";
      for (const auto& v : rep.violations) std::cout << "VIOLATION: " << v << "\n";
      std::cout << (rep.ok() ? "dataset valid\n" : "dataset invalid\n");
    }
    return rep.ok() ? 0 : 2;
  }
  CfConfig cfg = make_config(o);
  BenchReport rep = run_benchmark(dir, cfg);
  if (o.json_out) {
    std::cout << bench_report_to_json(rep) << "\n";
  } else {
    for (const auto& r : rep.records)
      std::cout << r.problem << " " << to_string(r.kind) << ": " << to_string(r.status)
                << " (" << r.elapsed_ms << " ms)\n";
    std::cout << "\n" << format_bench_table(rep);
  }
  return 0;
}

int run_dde(const Options& o, const std::string& which, int ablate) {
  Problem p = parse_problem_file(o.file);
  DilemmaKb kb = load_dilemma(std::move(p));
  if (ablate >= 0) kb = without_assumption(kb, (size_t)ablate);
  json out = json::object();
  out["problem"] = kb.problem.name;
  bool all_proved = true;
  if (which == "a" || which == "both") {
    Budget b{o.timeout_ms, o.depth, 200000};
    ProofOutcome r = derive_c5a(kb, b);
    all_proved = all_proved && r.status == ProofStatus::Proved;
    if (o.json_out)
      out["c5a"] = {{"formula", print_formula(c5a_formula(kb))},
                    {"status", to_string(r.status)},
                    {"elapsed_ms", r.elapsed_ms}};
    else {
      char timing[64];
      snprintf(timing, sizeof timing, "%.1f", r.elapsed_ms);
      std::cout << "C5a: " << to_string(r.status) << " (" << timing << " ms)\n";
    }
  }
  if (which == "b" || which == "both") {
    CfConfig cfg = make_config(o);
    CfResult r = derive_c5b(kb, cfg);
    all_proved = all_proved && r.status == ProofStatus::Proved;
    if (o.json_out)
      out["c5b"] = {{"formula", print_formula(c5b_formula(kb))},
                    {"status", to_string(r.status)},
                    {"elapsed_ms", r.elapsed_ms},
                    {"witness", witness_json(r)}};
    else {
      char timing[64];
      snprintf(timing, sizeof timing, "%.1f", r.elapsed_ms);
      std::cout << "C5b: " << to_string(r.status) << " (" << timing << " ms)\n";
    }
  }
  if (o.json_out) std::cout << out.dump(2) << "\n";
  return all_proved ? 0 : 1;
}

int run_oracle(const Options& o) {
  Problem p = parse_problem_file(o.file);
  if (p.queries.empty()) throw Error("no queries in " + o.file);
  size_t index = o.query > 0 ? (size_t)o.query - 1 : 0;
  if (index >= p.queries.size()) throw Error("query index out of range");
  const Query& q = p.queries[index];
  bool entailed;
  json detail = json::object();
  if (q.kind == QueryKind::Entail) {
    entailed = oracle_entails(p.assumptions, q.formulas[0]);
  } else if (q.kind == QueryKind::Cf) {
    OracleVerdict v = oracle_counterfactual(p.assumptions, q.formulas[0], q.formulas[1]);
    entailed = v.entailed;
    if (v.witness) detail["witness_indices"] = *v.witness;
    detail["inconsistent_antecedent"] = v.inconsistent_antecedent;
  } else {
    throw Error("oracle handles entail and cf queries only");
  }
  if (o.json_out) {
    json out{{"problem", p.name}, {"entailed", entailed}};
    out.update(detail);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << p.name << ": " << (entailed ? "entailed" : "not entailed") << "\n";
  }
  return entailed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"counterfactual reasoning engine"};
  app.require_subcommand(1);

  Options o;
  std::string bench_dir, dde_which = "both";
  bool bench_validate = false;
  int dde_ablate = -1;

  CLI::App* cmd_prove = app.add_subcommand("prove", "run an entail query");
  add_common(cmd_prove, o);
  cmd_prove->add_option("--query", o.query, "1-based query index");

  CLI::App* cmd_cf = app.add_subcommand("cf", "run a counterfactual query");
  add_common(cmd_cf, o);
  cmd_cf->add_option("--query", o.query, "1-based query index");

  CLI::App* cmd_cfin = app.add_subcommand("cf-in", "run a contextual counterfactual query");
  add_common(cmd_cfin, o);
  cmd_cfin->add_option("--query", o.query, "1-based query index");

  CLI::App* cmd_bench = app.add_subcommand("bench", "run or validate a dataset");
  cmd_bench->add_option("dir", bench_dir, "dataset directory")->required();
  add_common(cmd_bench, o, false);
  cmd_bench->add_flag("--validate", bench_validate, "validate instead of timing");

  CLI::App* cmd_dde = app.add_subcommand("dde", "derive clause five from a dilemma KB");
  add_common(cmd_dde, o);
  cmd_dde->add_option("--which", dde_which, "a, b or both")
      ->check(CLI::IsMember({"a", "b", "both"}));
  cmd_dde->add_option("--ablate", dde_ablate, "drop the 0-based assumption before deriving");

  CLI::App* cmd_oracle = app.add_subcommand("oracle", "exact propositional verdict");
  add_common(cmd_oracle, o);
  cmd_oracle->add_option("--query", o.query, "1-based query index");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_prove->parsed()) return run_entail(o);
    if (cmd_cf->parsed()) return run_cf(o, false);
    if (cmd_cfin->parsed()) return run_cf(o, true);
    if (cmd_bench->parsed()) return run_bench(o, bench_dir, bench_validate);
    if (cmd_dde->parsed()) return run_dde(o, dde_which, dde_ablate);
    if (cmd_oracle->parsed()) return run_oracle(o);
  } catch (const OracleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
