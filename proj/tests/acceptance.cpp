// Acceptance suite: one check per shipped guarantee, full instance counts.
// Prints one PASS/FAIL line per criterion; exit code is the failure count.

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cfl/bench.hpp"
#include "cfl/context.hpp"
#include "cfl/counterfactual.hpp"
#include "cfl/ethics.hpp"
#include "cfl/oracle.hpp"
#include "cfl/parse.hpp"
#include "cfl/print.hpp"
#include "cfl/prover.hpp"
#include "support.hpp"

using namespace cfl;
using testsupport::FormulaGen;

namespace {

std::string data_path(const std::string& rel) { return std::string(CFL_DATA_DIR) + "/" + rel; }

CfConfig ample() {
  CfConfig cfg;
  cfg.delta_ms = 4000;
  cfg.entail_ms = 4000;
  cfg.overall_ms = 60000;
  return cfg;
}

Budget ample_budget() {
  Budget b;
  b.wall_ms = 4000;
  return b;
}

bool proved(const CfResult& r) { return r.status == ProofStatus::Proved; }
bool proved(const ProofOutcome& r) { return r.status == ProofStatus::Proved; }

struct Criterion {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (detail.empty()) detail = what;
  }
};

// --- 1. the socrates triple ------------------------------------------------

Criterion socrates_triple() {
  Criterion c;
  Problem p = parse_problem_file(data_path("dataset/p01_socrates.clp"));
  CfConfig cfg;
  cfg.overall_ms = 30000;

  CfResult cf = prove_counterfactual(p.signature, p.assumptions, p.queries[0].formulas[0],
                                     p.queries[0].formulas[1], cfg);
  Budget b{30000, 3, 200000};
  ProofOutcome mat = prove(p.signature, p.assumptions, p.queries[1].formulas[0], b);
  CfResult absurd = prove_counterfactual(p.signature, p.assumptions,
                                         p.queries[2].formulas[0],
                                         p.queries[2].formulas[1], cfg);

  if (!proved(cf)) c.fail("cf query not Proved");
  if (!proved(mat)) c.fail("material-absurd not Proved");
  if (absurd.status != ProofStatus::NotProvedWithinBudget)
    c.fail("cf-absurd unexpectedly Proved");
  for (double ms : {cf.elapsed_ms, mat.elapsed_ms, absurd.elapsed_ms})
    if (ms >= 5000) c.fail("a query took " + std::to_string(ms) + " ms (limit 5000)");
  char buf[160];
  snprintf(buf, sizeof buf, "cf=%s(%.1fms) material=%s(%.1fms) cf-absurd=%s(%.1fms)",
           to_string(cf.status), cf.elapsed_ms, to_string(mat.status), mat.elapsed_ms,
           to_string(absurd.status), absurd.elapsed_ms);
  c.note(buf);
  return c;
}

// --- 2. the dataset run ------------------------------------------------------

Criterion dataset_run() {
  Criterion c;
  auto t0 = std::chrono::steady_clock::now();
  CfConfig cfg;
  cfg.overall_ms = 30000;  // default per-query timeout
  BenchReport rep = run_benchmark(data_path("dataset"), cfg);
  double total_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (rep.records.size() != 48)
    c.fail("expected 48 records, got " + std::to_string(rep.records.size()));
  size_t wrong = 0;
  for (const auto& r : rep.records) {
    ProofStatus want = r.kind == BenchKind::CfAbsurd ? ProofStatus::NotProvedWithinBudget
                                                     : ProofStatus::Proved;
    if (r.status != want) ++wrong;
  }
  if (wrong) c.fail(std::to_string(wrong) + " records with unexpected status");

  Budget generous;
  generous.wall_ms = 10000;
  ValidationReport val = validate_dataset(data_path("dataset"), generous);
  if (!val.ok()) c.fail("dataset validation: " + val.violations.front());

  auto sums = rep.summary();
  double cf_mean = sums[BenchKind::Cf].mean_ms;
  double mat_mean = sums[BenchKind::MaterialAbsurd].mean_ms;
  double absurd_mean = sums[BenchKind::CfAbsurd].mean_ms;
  if (!(cf_mean > mat_mean)) c.fail("mean(cf) <= mean(material-absurd)");
  if (!(absurd_mean > cf_mean)) c.fail("mean(cf-absurd) <= mean(cf)");
  if (total_s >= 900) c.fail("full run took " + std::to_string(total_s) + " s");
  char buf[200];
  snprintf(buf, sizeof buf,
           "48 records, mean ms cf=%.2f material=%.2f cf-absurd=%.2f, run=%.2fs",
           cf_mean, mat_mean, absurd_mean, total_s);
  c.note(buf);
  return c;
}

// --- 3. the property suites --------------------------------------------------

using PropertyCheck = std::function<bool(FormulaGen&, const SortedSignature&)>;

// Runs `instances` random draws; a check returns false only on violation.
Criterion run_property(const std::string& name, uint64_t seed_base, int instances,
                       int min_fired, const std::function<int(FormulaGen&)>& one) {
  Criterion c;
  int fired = 0;
  int violations = 0;
  // Conditional properties keep drawing until enough hypotheses fired.
  int budget = instances * 30;
  int ran = 0;
  for (uint64_t seed = seed_base; ran < instances || fired < min_fired; ++seed) {
    if (--budget < 0) break;
    FormulaGen gen(seed);
    int r = one(gen);  // -1 vacuous, 0 violated, 1 satisfied
    ++ran;
    if (r == 0) ++violations;
    if (r >= 0) ++fired;
  }
  if (violations) c.fail(std::to_string(violations) + " violations");
  if (fired < min_fired)
    c.fail(name + ": only " + std::to_string(fired) + " non-vacuous instances");
  c.note(std::to_string(ran) + " instances, " + std::to_string(fired) + " non-vacuous");
  return c;
}

Criterion property_suites() {
  Criterion all;
  SortedSignature sig = testsupport::prop_signature();
  CfConfig cfg = ample();
  Budget b = ample_budget();

  struct Suite {
    const char* name;
    uint64_t seeds;
    int min_fired;
    std::function<int(FormulaGen&)> one;
  };

  std::vector<Suite> suites;

  suites.push_back({"P1 ID", 101000, 100, [&](FormulaGen& gen) {
    auto gamma = gen.gamma(4);
    FormulaPtr phi = gen.formula();
    return proved(prove_counterfactual(sig, gamma, phi, phi, cfg)) ? 1 : 0;
  }});

  suites.push_back({"P2 R2", 102000, 20, [&](FormulaGen& gen) {
    FormulaPtr phi = gen.formula(3);
    FormulaPtr psi = gen.formula(3);
    if (!proved(prove(sig, {}, Formula::implies(phi, psi), b))) return -1;
    return proved(prove_counterfactual(sig, {}, phi, psi, cfg)) ? 1 : 0;
  }});

  suites.push_back({"P4 MP", 103000, 20, [&](FormulaGen& gen) {
    auto gamma = gen.gamma(4);
    FormulaPtr phi = gen.formula(3);
    FormulaPtr psi = gen.formula(3);
    if (!proved(prove_counterfactual(sig, gamma, phi, psi, cfg))) return -1;
    return proved(prove(sig, gamma, Formula::implies(phi, psi), b)) ? 1 : 0;
  }});

  suites.push_back({"P5 MOD", 104000, 10, [&](FormulaGen& gen) {
    auto gamma = gen.gamma(3);
    FormulaPtr psi = gen.formula(2);
    if (!proved(prove_counterfactual(sig, gamma, Formula::lnot(psi), psi, cfg))) return -1;
    FormulaPtr phi = gen.formula(2);
    return proved(prove(sig, gamma, Formula::implies(phi, psi), b)) ? 1 : 0;
  }});

  suites.push_back({"P9 SDA-or", 105000, 20, [&](FormulaGen& gen) {
    auto gamma = gen.gamma(3);
    FormulaPtr phi1 = gen.formula(2);
    FormulaPtr phi2 = gen.formula(2);
    FormulaPtr psi = gen.formula(2);
    if (!proved(prove_counterfactual(sig, gamma, Formula::lor(phi1, phi2), psi, cfg)))
      return -1;
    return (proved(prove_counterfactual(sig, gamma, phi1, psi, cfg)) ||
            proved(prove_counterfactual(sig, gamma, phi2, psi, cfg)))
               ? 1
               : 0;
  }});

  suites.push_back({"P10 SDA-and", 106000, 10, [&](FormulaGen& gen) {
    auto gamma = gen.gamma(3);
    FormulaPtr phi1 = gen.formula(2);
    FormulaPtr phi2 = gen.formula(2);
    FormulaPtr psi = gen.formula(2);
    if (!proved(prove_counterfactual(sig, gamma, Formula::lor(phi1, phi2), psi, cfg)))
      return -1;
    if (proved(prove(sig, gamma, Formula::lnot(phi1), b))) return -1;
    if (proved(prove(sig, gamma, Formula::lnot(phi2), b))) return -1;
    return (proved(prove_counterfactual(sig, gamma, phi1, psi, cfg)) &&
            proved(prove_counterfactual(sig, gamma, phi2, psi, cfg)))
               ? 1
               : 0;
  }});

  suites.push_back({"P11 A4", 107000, 10, [&](FormulaGen& gen) {
    auto gamma = gen.gamma(3);
    FormulaPtr phi = gen.formula(2);
    FormulaPtr psi = gen.formula(2);
    FormulaPtr chi = gen.formula(2);
    if (!proved(prove_counterfactual(sig, gamma, phi, psi, cfg))) return -1;
    if (!proved(prove_counterfactual(sig, gamma, phi, chi, cfg))) return -1;
    return proved(prove_counterfactual(sig, gamma, Formula::land(phi, psi), chi, cfg))
               ? 1
               : 0;
  }});

  suites.push_back({"T1 monotonicity", 108000, 20, [&](FormulaGen& gen) {
    auto gamma = gen.gamma(3);
    FormulaPtr phi = gen.formula(2);
    FormulaPtr psi = gen.formula(2);
    if (!proved(prove_counterfactual(sig, gamma, phi, psi, cfg))) return -1;
    auto bigger = gamma;
    bigger.push_back(gen.formula(2));
    bigger.push_back(gen.formula(2));
    return proved(prove_counterfactual(sig, bigger, phi, psi, cfg)) ? 1 : 0;
  }});

  // Oracle-level CSO family (properties 6, 7, 8).
  auto cso = [&](int which) {
    return [&, which](FormulaGen& gen) {
      FormulaPtr phi = gen.formula(2);
      FormulaPtr psi;
      if (gen.pick(2) == 0) {
        FormulaPtr taut =
            Formula::lor(Formula::atom("u"), Formula::lnot(Formula::atom("u")));
        psi = Formula::land(phi, taut);
      } else {
        psi = gen.formula(2);
      }
      auto gamma = gen.gamma(3);
      FormulaPtr chi = gen.formula(2);
      if (!oracle_counterfactual({}, phi, psi).entailed) return -1;
      if (!oracle_counterfactual({}, psi, phi).entailed) return -1;
      bool ok = true;
      if (which == 6)
        ok = oracle_entails(gamma, Formula::implies(phi, chi)) ==
             oracle_entails(gamma, Formula::implies(psi, chi));
      else if (which == 7)
        ok = oracle_counterfactual(gamma, phi, chi).entailed ==
             oracle_counterfactual(gamma, psi, chi).entailed;
      else
        ok = oracle_counterfactual(gamma, chi, phi).entailed ==
             oracle_counterfactual(gamma, chi, psi).entailed;
      return ok ? 1 : 0;
    };
  };
  suites.push_back({"P6 (oracle)", 109000, 100, cso(6)});
  suites.push_back({"P7 CSO (oracle)", 110000, 100, cso(7)});
  suites.push_back({"P8 (oracle)", 111000, 100, cso(8)});

  for (auto& s : suites) {
    Criterion c = run_property(s.name, s.seeds, 100, s.min_fired, s.one);
    if (!c.pass) all.fail(std::string(s.name) + ": " + c.detail);
  }
  if (all.pass)
    all.note(std::to_string(suites.size()) +
             " suites, 100+ instances each, seed bases 101000..111000");
  return all;
}

// --- 4. oracle equivalence ---------------------------------------------------

Criterion oracle_equivalence() {
  Criterion c;
  SortedSignature sig = testsupport::prop_signature();
  int mismatches = 0, witness_failures = 0, checked = 0;
  for (uint64_t seed = 400000; checked < 500; ++seed) {
    FormulaGen gen(seed);
    auto gamma = gen.gamma(8);
    FormulaPtr phi = gen.formula(3);
    FormulaPtr psi = gen.formula(3);
    bool expect = oracle_counterfactual(gamma, phi, psi).entailed;
    ++checked;
    for (SubsetOrder order : {SubsetOrder::SmallFirst, SubsetOrder::LargeFirst}) {
      CfConfig cfg = ample();
      cfg.order = order;
      CfResult r = prove_counterfactual(sig, gamma, phi, psi, cfg);
      if ((r.status == ProofStatus::Proved) != expect) ++mismatches;
      if (r.status == ProofStatus::Proved &&
          !reverify_witness(sig, gamma, phi, psi, r, cfg))
        ++witness_failures;
    }
  }
  if (mismatches) c.fail(std::to_string(mismatches) + " status mismatches");
  if (witness_failures) c.fail(std::to_string(witness_failures) + " witnesses failed");
  c.note("500 instances x 2 orders (seeds from 400000), exact match, witnesses re-verified");
  return c;
}

// --- 5. the absurd-consequent law ---------------------------------------------

Criterion absurd_consequent_law() {
  Criterion c;
  SortedSignature sig = testsupport::prop_signature();
  int exceptions = 0;
  for (uint64_t seed = 500000; seed < 500200; ++seed) {
    FormulaGen gen(seed);
    auto gamma = gen.gamma(5);
    FormulaPtr phi = gen.formula(3);
    bool cf_proved =
        proved(prove_counterfactual(sig, gamma, phi, Formula::falsum(), ample()));
    bool phi_absurd =
        consistent(sig, {phi}, 4000).value == ConsistencyVerdict::Inconsistent;
    if (cf_proved != phi_absurd) ++exceptions;
  }
  if (exceptions) c.fail(std::to_string(exceptions) + " exceptions");
  c.note("200 instances (seeds 500000..500199), zero exceptions");
  return c;
}

// --- 6. the dilemma scenario ---------------------------------------------------

Criterion dde_scenario() {
  Criterion c;
  DilemmaKb kb = load_dilemma(parse_problem_file(data_path("dde/trolley.clp")));
  Budget b;
  b.wall_ms = 60000;
  ProofOutcome a = derive_c5a(kb, b);
  if (!proved(a)) c.fail("C5a not Proved");
  if (a.elapsed_ms >= 60000) c.fail("C5a exceeded 60 s");

  CfConfig cfg;
  cfg.overall_ms = 60000;
  CfResult bb = derive_c5b(kb, cfg);
  if (!proved(bb)) c.fail("C5b not Proved");
  if (bb.elapsed_ms >= 60000) c.fail("C5b exceeded 60 s");

  DilemmaKb cut = without_assumption(kb, 10);  // the internalized norm
  CfResult ablated = derive_c5b(cut, cfg);
  if (ablated.status != ProofStatus::NotProvedWithinBudget)
    c.fail("ablation failed to defeat C5b");
  char buf[120];
  snprintf(buf, sizeof buf, "C5a %.1fms, C5b %.1fms, ablated C5b %s", a.elapsed_ms,
           bb.elapsed_ms, to_string(ablated.status));
  c.note(buf);
  return c;
}

// --- 7. the intensionality guard ----------------------------------------------

Criterion intensionality_guard() {
  Criterion c;
  SortedSignature sig;
  sig.declare_constant("a", "Agent");
  sig.declare_constant("t", "Moment");
  sig.declare_constant("m", "Object");
  sig.declare_constant("gun", "Object");
  sig.declare_function("owner", {"Object"}, "Object");
  sig.declare_relation("Murderer", {"Object"});
  std::vector<FormulaPtr> gamma = {
      parse_formula_text("(K a t (Murderer (owner gun)))", sig),
      parse_formula_text("(not (K a t (Murderer m)))", sig),
      parse_formula_text("(= m (owner gun))", sig)};
  for (int depth = 1; depth <= 5; ++depth) {
    Budget b;
    b.depth = depth;
    b.wall_ms = 10000;
    if (prove(sig, gamma, Formula::falsum(), b).status == ProofStatus::Proved)
      c.fail("derived absurdity at depth " + std::to_string(depth));
  }
  c.note("no contradiction at any depth 1..5");
  return c;
}

// --- 8. context extraction golden ----------------------------------------------

Criterion context_golden() {
  Criterion c;
  SortedSignature sig;
  sig.declare_constant("a", "Agent");
  sig.declare_constant("b", "Agent");
  sig.declare_constant("t1", "Moment");
  sig.declare_constant("t2", "Moment");
  sig.declare_relation("P", {});
  auto [ctx, body] = extract_context(parse_formula_text("(B a t1 (K b t2 P))", sig));
  bool ok = ctx.size() == 2 && ctx.entries[0].op == FormulaKind::Believes &&
            ctx.entries[0].agent->name() == "a" && ctx.entries[0].time->name() == "t1" &&
            ctx.entries[1].op == FormulaKind::Knows &&
            ctx.entries[1].agent->name() == "b" && ctx.entries[1].time->name() == "t2" &&
            print_formula(body) == "P" && print_context(ctx) == "((B a t1) (K b t2))";
  if (!ok) c.fail("got " + print_context(ctx) + " with body " + print_formula(body));
  c.note("B(a,t1,K(b,t2,P)) -> ((B a t1) (K b t2)) with body P");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* title;
    Criterion (*run)();
  };
  Entry entries[] = {
      {"socrates triple: statuses exact, each query under 5 s", socrates_triple},
      {"dataset run: 48 records, expected statuses, mean orderings, under 15 min",
       dataset_run},
      {"property suites: 1,2,4,5,9,10,11 engine-level; 6,7,8 oracle-level; "
       "monotonicity",
       property_suites},
      {"oracle equivalence: 500 instances, both orders, witnesses re-verify",
       oracle_equivalence},
      {"absurd-consequent law on 200 instances", absurd_consequent_law},
      {"dilemma scenario: C5a and C5b derive, ablation defeats C5b", dde_scenario},
      {"intensionality guard: the opaque-equality triple stays consistent",
       intensionality_guard},
      {"context extraction golden", context_golden},
  };
  int failures = 0;
  int index = 1;
  for (const auto& e : entries) {
    Criterion c = e.run();
    printf("[%s] %d. %s%s%s\n", c.pass ? "PASS" : "FAIL", index, e.title,
           c.detail.empty() ? "" : " -- ", c.detail.c_str());
    fflush(stdout);
    if (!c.pass) ++failures;
    ++index;
  }
  printf("acceptance: %d/8 criteria passed\n", 8 - failures);
  return failures;
}
