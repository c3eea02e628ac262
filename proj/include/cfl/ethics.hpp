#pragma once

#include "cfl/counterfactual.hpp"
#include "cfl/problem.hpp"
#include "cfl/prover.hpp"

namespace cfl {

// A moral-dilemma knowledge base: the situation layer (in/actionSit symbols,
// sanctioning axiom, utility table) plus the cast named by the file's dde
// block.
struct DilemmaKb {
  Problem problem;
  TermPtr agent, moment, situation, action_type;  // I, t, sigma, alpha_D

  const SortedSignature& sig() const { return problem.signature; }
  const std::vector<FormulaPtr>& gamma() const { return problem.assumptions; }
};

/// Validates and adopts a parsed problem: dde block complete, in/actionSit
/// declared with the expected sorts, utility total on the declared fluent
/// constants, sanctioning axiom present among the assumptions.
DilemmaKb load_dilemma(Problem problem);

/// The dilemma KB minus one assumption (ablation runs).
DilemmaKb without_assumption(const DilemmaKb& kb, size_t index);

/// The successor moment t+1: the declared moment u with prior(t, u) asserted.
TermPtr successor_moment(const DilemmaKb& kb);

/// The desired-alternative condition: some situation other than the current
/// one offers an action that is not forbidden there, initiates nothing of
/// negative utility and terminates nothing of positive utility. Utility
/// quantifiers are compiled to finite conjunctions over the declared fluents.
FormulaPtr theta_formula(const DilemmaKb& kb);

/// Clause five, first half: the agent believes it is in the current situation
/// and desires the theta condition.
FormulaPtr c5a_formula(const DilemmaKb& kb);

/// Clause five, second half: the agent believes that under theta it would not
/// perform the required action at the next moment.
FormulaPtr c5b_formula(const DilemmaKb& kb);

ProofOutcome derive_c5a(const DilemmaKb& kb, const Budget& budget);
CfResult derive_c5b(const DilemmaKb& kb, const CfConfig& cfg);

/// The sanctioning axiom in its canonical form, for structural comparison.
FormulaPtr sanctioning_axiom();

}  // namespace cfl
