#pragma once

#include <optional>
#include <vector>

#include "cfl/ast.hpp"
#include "cfl/errors.hpp"

namespace cfl {

struct OracleError : Error {
  using Error::Error;
};

struct OracleVerdict {
  bool entailed = false;
  bool inconsistent_antecedent = false;
  std::optional<std::vector<size_t>> witness;  // first subset in small-first order
};

/// True iff f is propositional: nullary atoms under not/and/or/implies/iff.
bool is_propositional(const FormulaPtr& f);

/// Exact semantic entailment by truth tables. Throws OracleError outside the
/// propositional fragment or beyond 16 distinct atoms.
bool oracle_entails(const std::vector<FormulaPtr>& gamma, const FormulaPtr& f);

bool oracle_consistent(const std::vector<FormulaPtr>& phis);

/// Exact subset-search semantics of the counterfactual: entailed iff the
/// antecedent is unsatisfiable or some subset of gamma is satisfiable with
/// phi and semantically entails psi. |gamma| is capped at 12.
OracleVerdict oracle_counterfactual(const std::vector<FormulaPtr>& gamma,
                                    const FormulaPtr& phi, const FormulaPtr& psi);

}  // namespace cfl
