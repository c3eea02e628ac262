#include <doctest.h>

#include "cfl/errors.hpp"
#include "cfl/parse.hpp"
#include "cfl/print.hpp"
#include "cfl/prover.hpp"
#include "support.hpp"

using namespace cfl;
using testsupport::pf;

namespace {

SortedSignature epistemic_signature() {
  SortedSignature sig;
  sig.declare_constant("a", "Agent");
  sig.declare_constant("b", "Agent");
  sig.declare_constant("t1", "Moment");
  sig.declare_constant("t2", "Moment");
  sig.declare_constant("wave", "ActionType");
  for (const char* r : {"P", "Q", "p", "q"}) sig.declare_relation(r, {});
  return sig;
}

std::vector<FormulaPtr> pfs(const std::vector<std::string>& texts,
                            const SortedSignature& sig) {
  std::vector<FormulaPtr> out;
  for (const auto& t : texts) out.push_back(pf(t, sig));
  return out;
}

}  // namespace

TEST_CASE("prove: first-order modus ponens (socrates)") {
  SortedSignature sig;
  sig.declare_relation("Human", {"Object"});
  sig.declare_relation("Mortal", {"Object"});
  sig.declare_constant("socrates", "Object");
  auto gamma = pfs({"(forall (x Object) (implies (Human x) (Mortal x)))",
                    "(Human socrates)"}, sig);
  ProofOutcome out = prove(sig, gamma, pf("(Mortal socrates)", sig), Budget{});
  CHECK(out.status == ProofStatus::Proved);
  CHECK(replay(sig, gamma, pf("(Mortal socrates)", sig), out));
}

TEST_CASE("prove: tautology from the empty theory") {
  SortedSignature sig = testsupport::prop_signature();
  ProofOutcome out = prove(sig, {}, pf("(implies p p)", sig), Budget{});
  CHECK(out.status == ProofStatus::Proved);
}

TEST_CASE("prove: knowledge propagates to later moments (R_K)") {
  SortedSignature sig = epistemic_signature();
  auto gamma = pfs({"(K a t1 P)", "(prior t1 t2)"}, sig);
  FormulaPtr goal = pf("(K a t2 P)", sig);
  ProofOutcome out = prove(sig, gamma, goal, Budget{});
  REQUIRE(out.status == ProofStatus::Proved);
  bool used_rk = false;
  for (const auto& st : out.steps) used_rk = used_rk || st.schema == "R_K";
  CHECK(used_rk);
  CHECK(replay(sig, gamma, goal, out));
  // Without the time fact the goal is out of reach.
  auto gamma2 = pfs({"(K a t2 P)"}, sig);
  CHECK(prove(sig, gamma2, pf("(K a t1 P)", sig), Budget{}).status ==
        ProofStatus::NotProvedWithinBudget);
}

TEST_CASE("prove: reasoning inside belief contexts (R_B)") {
  SortedSignature sig = epistemic_signature();
  auto gamma = pfs({"(B a t1 p)", "(B a t1 (implies p q))"}, sig);
  CHECK(prove(sig, gamma, pf("(B a t1 q)", sig), Budget{}).status == ProofStatus::Proved);
  // Belief is not knowledge: the K-wrapped goal stays unproved.
  CHECK(prove(sig, gamma, pf("(K a t1 q)", sig), Budget{}).status ==
        ProofStatus::NotProvedWithinBudget);
}

TEST_CASE("prove: R_4 strips knowledge") {
  SortedSignature sig = epistemic_signature();
  CHECK(prove(sig, pfs({"(K a t1 (and P Q))"}, sig), pf("Q", sig), Budget{}).status ==
        ProofStatus::Proved);
  // Belief alone does not yield truth.
  CHECK(prove(sig, pfs({"(B a t1 (and P Q))"}, sig), pf("Q", sig), Budget{}).status ==
        ProofStatus::NotProvedWithinBudget);
}

TEST_CASE("prove: intention chain R_13 + perception") {
  SortedSignature sig = epistemic_signature();
  auto gamma = pfs({"(intends a t1 P)", "(prior t1 t2)"}, sig);
  CHECK(prove(sig, gamma, pf("(perceives a t2 P)", sig), Budget{}).status ==
        ProofStatus::Proved);
  // ... and perception yields knowledge, knowledge truth.
  CHECK(prove(sig, gamma, pf("(K a t2 P)", sig), Budget{}).status == ProofStatus::Proved);
  CHECK(prove(sig, gamma, pf("P", sig), Budget{}).status == ProofStatus::Proved);
  // No strict time witness, no perception.
  auto gamma2 = pfs({"(intends a t1 P)"}, sig);
  CHECK(prove(sig, gamma2, pf("(perceives a t1 P)", sig), Budget{}).status ==
        ProofStatus::NotProvedWithinBudget);
}

TEST_CASE("prove: obligations become known intentions (R_14)") {
  SortedSignature sig = epistemic_signature();
  auto gamma = pfs({"(B a t1 p)",
                    "(B a t1 (ought a t1 p (not (happens (action a wave) t1))))",
                    "(ought a t1 p (not (happens (action a wave) t1)))"}, sig);
  FormulaPtr goal =
      pf("(K a t1 (intends a t1 (not (happens (action a wave) t1))))", sig);
  ProofOutcome out = prove(sig, gamma, goal, Budget{});
  REQUIRE(out.status == ProofStatus::Proved);
  CHECK(replay(sig, gamma, goal, out));
  // Dropping the objective obligation blocks the rule.
  auto gamma2 = pfs({"(B a t1 p)",
                     "(B a t1 (ought a t1 p (not (happens (action a wave) t1))))"}, sig);
  CHECK(prove(sig, gamma2, goal, Budget{}).status == ProofStatus::NotProvedWithinBudget);
}

TEST_CASE("prove: common knowledge reaches every declared agent") {
  SortedSignature sig = epistemic_signature();
  auto gamma = pfs({"(common t1 P)"}, sig);
  CHECK(prove(sig, gamma, pf("(K a t1 P)", sig), Budget{}).status == ProofStatus::Proved);
  CHECK(prove(sig, gamma, pf("(K b t1 P)", sig), Budget{}).status == ProofStatus::Proved);
  CHECK(prove(sig, gamma, pf("P", sig), Budget{}).status == ProofStatus::Proved);
}

TEST_CASE("prove: counterfactual elimination, plain and in context") {
  SortedSignature sig = epistemic_signature();
  CHECK(prove(sig, pfs({"(cf P Q)", "P"}, sig), pf("Q", sig), Budget{}).status ==
        ProofStatus::Proved);
  auto gamma = pfs({"(B a t1 (cf P Q))", "(B a t1 P)"}, sig);
  ProofOutcome out = prove(sig, gamma, pf("(B a t1 Q)", sig), Budget{});
  REQUIRE(out.status == ProofStatus::Proved);
  bool used_cf4 = false;
  for (const auto& st : out.steps) used_cf4 = used_cf4 || st.schema == "R_cf4";
  CHECK(used_cf4);
  // Mismatched contexts never combine.
  auto gamma2 = pfs({"(B a t1 (cf P Q))", "(B a t2 P)"}, sig);
  CHECK(prove(sig, gamma2, pf("(B a t1 Q)", sig), Budget{}).status ==
        ProofStatus::NotProvedWithinBudget);
}

TEST_CASE("the murderer triple stays underivable at every depth") {
  SortedSignature sig;
  sig.declare_constant("a", "Agent");
  sig.declare_constant("t", "Moment");
  sig.declare_constant("m", "Object");
  sig.declare_constant("gun", "Object");
  sig.declare_function("owner", {"Object"}, "Object");
  sig.declare_relation("Murderer", {"Object"});
  auto gamma = pfs({"(K a t (Murderer (owner gun)))",
                    "(not (K a t (Murderer m)))",
                    "(= m (owner gun))"}, sig);
  for (int depth = 1; depth <= 5; ++depth) {
    Budget b;
    b.depth = depth;
    CHECK(prove(sig, gamma, Formula::falsum(), b).status ==
          ProofStatus::NotProvedWithinBudget);
  }
}

TEST_CASE("shadow: spec shapes") {
  SortedSignature sig = epistemic_signature();
  // K(a,t,P) | Q  ->  opaque atom | Q
  FormulaPtr f = shadow(sig, pf("(or (K a t1 P) Q)", sig));
  REQUIRE(f->kind() == FormulaKind::Or);
  CHECK(f->subs()[0]->kind() == FormulaKind::Atom);
  CHECK(f->subs()[0]->rel() == "(K a t1 P)");
  CHECK(f->subs()[1]->rel() == "Q");
  // Purely first-order input is untouched.
  FormulaPtr g = pf("(and P Q)", sig);
  CHECK(shadow(sig, g)->equals(*g));
}

TEST_CASE("shadow: the murderer pair gets distinct atoms despite the equality") {
  SortedSignature sig;
  sig.declare_constant("a", "Agent");
  sig.declare_constant("t", "Moment");
  sig.declare_constant("m", "Object");
  sig.declare_constant("gun", "Object");
  sig.declare_function("owner", {"Object"}, "Object");
  sig.declare_relation("Murderer", {"Object"});
  ShadowTable table;
  FormulaPtr s1 = shadow(sig, pf("(K a t (Murderer (owner gun)))", sig), table);
  FormulaPtr s2 = shadow(sig, pf("(K a t (Murderer m))", sig), table);
  CHECK(s1->kind() == FormulaKind::Atom);
  CHECK(s2->kind() == FormulaKind::Atom);
  CHECK(s1->rel() != s2->rel());
  // Alpha-equivalent occurrences share one atom.
  FormulaPtr s3 = shadow(sig, pf("(K a t (Murderer (owner gun)))", sig), table);
  CHECK(s1->rel() == s3->rel());
}

TEST_CASE("shadow: alpha-equivalent bodies share an atom across binders") {
  SortedSignature sig;
  sig.declare_constant("a", "Agent");
  sig.declare_constant("t", "Moment");
  sig.declare_relation("P", {"Object"});
  ShadowTable table;
  FormulaPtr s1 = shadow(sig, pf("(K a t (forall (x Object) (P x)))", sig), table);
  FormulaPtr s2 = shadow(sig, pf("(K a t (forall (y Object) (P y)))", sig), table);
  CHECK(s1->rel() == s2->rel());
}

TEST_CASE("consistent: spec examples") {
  SortedSignature sig = testsupport::prop_signature();
  auto incons = consistent(sig, {pf("p", sig), pf("(not p)", sig)}, 2000);
  CHECK(incons.value == ConsistencyVerdict::Inconsistent);
  REQUIRE(incons.refutation);
  CHECK(incons.refutation->status == ProofStatus::Proved);

  SortedSignature fo;
  fo.declare_relation("Human", {"Object"});
  fo.declare_relation("Mortal", {"Object"});
  fo.declare_constant("socrates", "Object");
  auto ok = consistent(fo, {pf("(Human socrates)", fo),
                            pf("(forall (x Object) (implies (Human x) (Mortal x)))", fo)},
                       2000);
  CHECK(ok.value == ConsistencyVerdict::PresumedConsistent);

  CHECK(consistent(sig, {}, 1000).value == ConsistencyVerdict::PresumedConsistent);
}

TEST_CASE("consistency is antitone and monotone in delta (propositional samples)") {
  SortedSignature sig = testsupport::prop_signature();
  for (uint64_t seed = 0; seed < 40; ++seed) {
    testsupport::FormulaGen gen(seed);
    auto gamma = gen.gamma(5);
    auto sub = gamma;
    if (!sub.empty()) sub.pop_back();
    auto sub_verdict = consistent(sig, sub, 3000);
    auto super_verdict = consistent(sig, gamma, 3000);
    CAPTURE(seed);
    // If a subset refutes, every superset refutes.
    if (sub_verdict.value == ConsistencyVerdict::Inconsistent)
      CHECK(super_verdict.value == ConsistencyVerdict::Inconsistent);
    // Raising delta never flips Inconsistent back.
    if (super_verdict.value == ConsistencyVerdict::Inconsistent)
      CHECK(consistent(sig, gamma, 6000).value == ConsistencyVerdict::Inconsistent);
  }
}

TEST_CASE("monotonicity on the propositional fragment (theorem sample)") {
  SortedSignature sig = testsupport::prop_signature();
  int proved = 0;
  for (uint64_t seed = 100; seed < 160; ++seed) {
    testsupport::FormulaGen gen(seed);
    auto gamma = gen.gamma(4);
    FormulaPtr goal = gen.formula(3);
    Budget b;
    b.wall_ms = 3000;
    if (prove(sig, gamma, goal, b).status != ProofStatus::Proved) continue;
    ++proved;
    auto bigger = gamma;
    bigger.push_back(gen.formula(3));
    CAPTURE(seed);
    CHECK(prove(sig, bigger, goal, b).status == ProofStatus::Proved);
  }
  CHECK(proved > 0);
}

TEST_CASE("ill-sorted input is rejected before search") {
  SortedSignature sig = epistemic_signature();
  FormulaPtr bad = Formula::atom("P", {Term::constant("a")});
  CHECK_THROWS_AS(prove(sig, {bad}, pf("P", sig), Budget{}), SortError);
}

TEST_CASE("budget: the wall clock cancels promptly") {
  SortedSignature sig;
  sig.declare_relation("R", {"Object", "Object"});
  sig.declare_function("f", {"Object"}, "Object");
  sig.declare_constant("c", "Object");
  // Unbounded term growth: saturation cannot finish.
  auto gamma = pfs({"(R c c)",
                    "(forall (x Object) (forall (y Object) (implies (R x y) (R (f x) y))))"},
                   sig);
  Budget b;
  b.wall_ms = 120;
  auto start = std::chrono::steady_clock::now();
  ProofOutcome out = prove(sig, gamma, Formula::falsum(), b);
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  CHECK(out.status == ProofStatus::NotProvedWithinBudget);
  CHECK(elapsed < 120 + 50);  // prompt cancellation
}
