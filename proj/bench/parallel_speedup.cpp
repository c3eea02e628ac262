// Compares the serial subset-search reference against the OpenMP batch
// driver on workloads that force a full enumeration, and checks that both
// report identical statuses and witnesses.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <CLI11.hpp>

#include "cfl/counterfactual.hpp"
#include "cfl/print.hpp"

using namespace cfl;

namespace {

struct Workload {
  std::string name;
  SortedSignature sig;
  std::vector<FormulaPtr> gamma;
  FormulaPtr phi, psi;
  ProofStatus expected;
};

// Independent facts plus implication pairs; the consequent is unreachable,
// so the search grinds through every subset with a real entailment call.
Workload exhaustive_workload(int premises) {
  Workload w;
  w.name = "exhaustive (" + std::to_string(premises) + " premises)";
  std::vector<FormulaPtr> facts;
  for (int i = 0; i < premises; ++i) {
    std::string a = "a" + std::to_string(i);
    std::string b = "b" + std::to_string(i);
    w.sig.declare_relation(a, {});
    w.sig.declare_relation(b, {});
    if (i % 2 == 0)
      facts.push_back(Formula::atom(a));
    else
      facts.push_back(Formula::implies(Formula::atom(a), Formula::atom(b)));
  }
  w.sig.declare_relation("phi", {});
  w.sig.declare_relation("unreachable", {});
  w.gamma = facts;
  w.phi = Formula::atom("phi");
  w.psi = Formula::atom("unreachable");
  w.expected = ProofStatus::NotProvedWithinBudget;
  return w;
}

// The witness sits late in large-first order: dropping the chain root makes
// the subset consistent with phi.
Workload provable_workload(int premises) {
  Workload w;
  w.name = "provable (" + std::to_string(premises) + " premises)";
  std::vector<std::string> atoms;
  for (int i = 0; i <= premises; ++i) {
    std::string a = "c" + std::to_string(i);
    w.sig.declare_relation(a, {});
    atoms.push_back(a);
  }
  w.gamma.push_back(Formula::atom(atoms[0]));
  for (int i = 0; i + 1 < premises; ++i)
    w.gamma.push_back(Formula::implies(Formula::atom(atoms[(size_t)i]),
                                       Formula::atom(atoms[(size_t)i + 1])));
  w.phi = Formula::lnot(Formula::atom(atoms[(size_t)premises - 1]));
  w.psi = Formula::lnot(Formula::atom(atoms[0]));
  w.expected = ProofStatus::Proved;
  return w;
}

double run_once(const Workload& w, int workers, CfResult& out) {
  CfConfig cfg;
  cfg.delta_ms = 2000;
  cfg.entail_ms = 2000;
  cfg.overall_ms = 600000;
  cfg.workers = workers;
  auto t0 = std::chrono::steady_clock::now();
  out = prove_counterfactual(w.sig, w.gamma, w.phi, w.psi, cfg);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subset search: serial reference vs OpenMP batches"};
  int premises = 12;
  int workers = 0;  // 0: all hardware threads
  int repeat = 3;
  app.add_option("--premises", premises, "premise count (<= 20)")->check(CLI::Range(2, 20));
  app.add_option("--workers", workers, "parallel workers (0 = hardware)");
  app.add_option("--repeat", repeat, "timed repetitions, best-of");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  if (workers <= 0) workers = omp_get_max_threads();
#else
  if (workers <= 0) workers = 1;
  printf("note: built without OpenMP, the parallel driver degrades to serial\n");
#endif

  printf("%-28s %12s %12s %9s  %s\n", "workload", "serial (s)", "parallel (s)", "speedup",
         "agreement");
  int disagreements = 0;
  for (Workload w : {exhaustive_workload(premises), provable_workload(premises)}) {
    double serial_best = 1e100, parallel_best = 1e100;
    CfResult serial_out, parallel_out;
    for (int r = 0; r < repeat; ++r) {
      CfResult s, p;
      serial_best = std::min(serial_best, run_once(w, 1, s));
      parallel_best = std::min(parallel_best, run_once(w, workers, p));
      if (r == 0) {
        serial_out = s;
        parallel_out = p;
      }
    }
    bool statuses_agree =
        serial_out.status == parallel_out.status && serial_out.status == w.expected;
    bool witnesses_agree = true;
    if (serial_out.witness && parallel_out.witness)
      witnesses_agree = serial_out.witness->indices == parallel_out.witness->indices;
    else
      witnesses_agree = !serial_out.witness == !parallel_out.witness;
    if (!statuses_agree || !witnesses_agree) ++disagreements;
    printf("%-28s %12.3f %12.3f %8.2fx  %s\n", w.name.c_str(), serial_best, parallel_best,
           serial_best / parallel_best,
           statuses_agree && witnesses_agree ? "ok" : "MISMATCH");
  }
  printf("workers: %d\n", workers);
  return disagreements;
}
