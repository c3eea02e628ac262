#include "cfl/ethics.hpp"

#include "cfl/errors.hpp"
#include "cfl/print.hpp"

namespace cfl {

namespace {

FormulaPtr conjoin(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return Formula::lnot(Formula::falsum());  // vacuous truth
  FormulaPtr acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = Formula::land(fs[i], acc);
  return acc;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw Error("dilemma kb: " + msg);
}

}  // namespace

FormulaPtr sanctioning_axiom() {
  TermPtr a = Term::variable("a", "Agent");
  TermPtr al = Term::variable("al", "ActionType");
  TermPtr t = Term::variable("t", "Moment");
  TermPtr s = Term::variable("s", "Situation");
  FormulaPtr happens = Formula::atom("happens", {Term::apply("action", {a, al}), t});
  FormulaPtr sanctioned = Formula::exists(
      s, Formula::land(Formula::atom("holds", {Term::apply("in", {a, s}), t}),
                       Formula::atom("actionSit", {a, al, s, t})));
  return Formula::forall(
      a, Formula::forall(al, Formula::forall(t, Formula::implies(happens, sanctioned))));
}

DilemmaKb load_dilemma(Problem problem) {
  const SortedSignature& sig = problem.signature;
  const DdeSpec& dde = problem.dde;
  require(dde.present, "missing (dde ...) block");
  require(!dde.agent.empty(), "dde block names no agent");
  require(!dde.moment.empty(), "dde block names no moment");
  require(!dde.situation.empty(), "dde block names no situation");
  require(!dde.action_type.empty(), "dde block names no action");

  auto check_const = [&](const std::string& name, const char* sort) {
    require(sig.has_constant(name) && sig.subsort(sig.constant_sort(name), sort),
            name + " must be a declared constant of sort " + sort);
  };
  check_const(dde.agent, "Agent");
  check_const(dde.moment, "Moment");
  check_const(dde.situation, "Situation");
  check_const(dde.action_type, "ActionType");

  require(sig.has_function("in"), "missing function in: Agent x Situation -> Fluent");
  const FunctionDecl& in = sig.function("in");
  require(in.arg_sorts == std::vector<std::string>{"Agent", "Situation"} &&
              in.result_sort == "Fluent",
          "in must map Agent x Situation to Fluent");
  require(sig.has_relation("actionSit"),
          "missing relation actionSit(Agent, ActionType, Situation, Moment)");
  require(sig.relation("actionSit") ==
              std::vector<std::string>{"Agent", "ActionType", "Situation", "Moment"},
          "actionSit must relate Agent x ActionType x Situation x Moment");

  // Utility must be total on the declared fluent constants.
  for (const auto& name : sig.constants_of_sort("Fluent")) {
    bool found = false;
    for (const auto& [term, mu] : dde.mu) {
      (void)mu;
      if (term->kind() == TermKind::Constant && term->name() == name) { found = true; break; }
    }
    require(found, "fluent lacks a utility entry: " + name);
  }

  FormulaPtr sanction = sanctioning_axiom();
  bool has_sanction = false;
  for (const auto& f : problem.assumptions)
    if (alpha_equal(f, sanction)) { has_sanction = true; break; }
  require(has_sanction, "sanctioning axiom missing from the assumptions");

  DilemmaKb kb;
  kb.agent = Term::constant(dde.agent);
  kb.moment = Term::constant(dde.moment);
  kb.situation = Term::constant(dde.situation);
  kb.action_type = Term::constant(dde.action_type);
  kb.problem = std::move(problem);
  return kb;
}

DilemmaKb without_assumption(const DilemmaKb& kb, size_t index) {
  require(index < kb.problem.assumptions.size(), "ablation index out of range");
  DilemmaKb out = kb;
  out.problem.assumptions.erase(out.problem.assumptions.begin() + (long)index);
  return out;
}

TermPtr successor_moment(const DilemmaKb& kb) {
  for (const auto& f : kb.gamma()) {
    if (f->kind() != FormulaKind::Atom || f->rel() != "prior") continue;
    if (f->terms().size() == 2 && f->terms()[0]->equals(*kb.moment) &&
        f->terms()[1]->kind() == TermKind::Constant)
      return f->terms()[1];
  }
  throw Error("dilemma kb: no successor moment (prior " + print_term(kb.moment) +
              " _) asserted");
}

FormulaPtr theta_formula(const DilemmaKb& kb) {
  const TermPtr& i = kb.agent;
  const TermPtr& t = kb.moment;
  const TermPtr& sigma = kb.situation;
  TermPtr rho = Term::variable("rho", "Situation");
  TermPtr al = Term::variable("al", "ActionType");
  TermPtr act = Term::apply("action", {i, al});

  // Utility sign tests compile to conjunctions over the declared fluents.
  std::vector<FormulaPtr> no_bad, no_good_lost;
  for (const auto& [fluent, mu] : kb.problem.dde.mu) {
    if (mu < 0)
      no_bad.push_back(Formula::lnot(Formula::atom("initiates", {act, fluent, t})));
    else if (mu > 0)
      no_good_lost.push_back(
          Formula::lnot(Formula::atom("terminates", {act, fluent, t})));
  }

  FormulaPtr not_forbidden = Formula::lnot(Formula::ought(
      i, t, Formula::atom("holds", {Term::apply("in", {i, rho}), t}),
      Formula::lnot(Formula::atom("happens", {act, t}))));

  FormulaPtr alt_action = Formula::exists(
      al, Formula::land(Formula::atom("actionSit", {i, al, rho, t}),
                        Formula::land(not_forbidden,
                                      Formula::land(conjoin(no_bad), conjoin(no_good_lost)))));

  return Formula::exists(
      rho, Formula::land(Formula::lnot(Formula::equal(rho, sigma)),
                         Formula::land(Formula::atom("holds", {Term::apply("in", {i, sigma}), t}),
                                       alt_action)));
}

FormulaPtr c5a_formula(const DilemmaKb& kb) {
  FormulaPtr in_current =
      Formula::atom("holds", {Term::apply("in", {kb.agent, kb.situation}), kb.moment});
  return Formula::land(Formula::believes(kb.agent, kb.moment, in_current),
                       Formula::desires(kb.agent, kb.moment, theta_formula(kb)));
}

FormulaPtr c5b_formula(const DilemmaKb& kb) {
  TermPtr next = successor_moment(kb);
  FormulaPtr refrains = Formula::lnot(Formula::atom(
      "happens", {Term::apply("action", {kb.agent, kb.action_type}), next}));
  return Formula::believes(kb.agent, kb.moment,
                           Formula::counterfactual(theta_formula(kb), refrains));
}

ProofOutcome derive_c5a(const DilemmaKb& kb, const Budget& budget) {
  return prove(kb.sig(), kb.gamma(), c5a_formula(kb), budget);
}

CfResult derive_c5b(const DilemmaKb& kb, const CfConfig& cfg) {
  ModalContext ctx;
  ctx.entries.push_back({FormulaKind::Believes, kb.agent, kb.moment});
  TermPtr next = successor_moment(kb);
  FormulaPtr refrains = Formula::lnot(Formula::atom(
      "happens", {Term::apply("action", {kb.agent, kb.action_type}), next}));
  return prove_counterfactual_in_context(kb.sig(), kb.gamma(), ctx, theta_formula(kb),
                                         refrains, cfg);
}

}  // namespace cfl
