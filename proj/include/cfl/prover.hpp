#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cfl/ast.hpp"
#include "cfl/clausal.hpp"
#include "cfl/context.hpp"

namespace cfl {

struct Budget {
  int64_t wall_ms = 5000;
  int depth = 3;  // bound on iterated schema application
  uint64_t max_clauses = 200000;
};

enum class ProofStatus { Proved, NotProvedWithinBudget };

const char* to_string(ProofStatus s);

struct ProofOutcome;

// One schema application: R_K, R_B, R_4, R_13, R_14, R_cf2, R_cf4, C_elim,
// P_elim. R_K/R_B/R_14 carry the recursive sub-proof they rest on.
struct SchemaStep {
  std::string schema;
  std::vector<FormulaPtr> premises;
  FormulaPtr conclusion;
  std::shared_ptr<const ProofOutcome> inner;
};

struct ProofOutcome {
  ProofStatus status = ProofStatus::NotProvedWithinBudget;
  std::vector<SchemaStep> steps;  // applied saturation steps, in order
  RefutationTrace refutation;     // populated when Proved
  double elapsed_ms = 0;
  uint64_t clauses_generated = 0;
};

struct ConsistencyVerdict {
  enum Value { Inconsistent, PresumedConsistent };
  Value value = PresumedConsistent;
  double elapsed_ms = 0;
  int64_t delta_ms = 0;
  std::shared_ptr<const ProofOutcome> refutation;  // when Inconsistent
};

/// Budget-bounded proof search: bounded forward application of the modal
/// schemata, then shadowing of the remaining modal subformulas, then sorted
/// first-order refutation. Proved is sound; NotProvedWithinBudget carries no
/// semantic claim. Throws SortError on ill-sorted input.
ProofOutcome prove(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
                   const FormulaPtr& goal, const Budget& budget);

/// Same, for callers that already validated their inputs (subset search runs
/// thousands of these).
ProofOutcome prove_unchecked(const SortedSignature& sig,
                             const std::vector<FormulaPtr>& gamma, const FormulaPtr& goal,
                             const Budget& budget);

/// Consistency approximated by failing to refute within delta; the verdict
/// PresumedConsistent is explicitly an approximation.
ConsistencyVerdict consistent(const SortedSignature& sig,
                              const std::vector<FormulaPtr>& phis, int64_t delta_ms,
                              int depth = 3);

/// Replaces every maximal intensional subformula with an opaque first-order
/// atom keyed by the subformula's alpha-canonical print. Alpha-equivalent
/// subformulas share an atom; alpha-distinct ones never do. Open subformulas
/// keep their free variables as arguments of the shadow atom.
struct ShadowTable {
  std::map<std::string, std::string> pred_by_key;
  std::map<std::string, std::vector<std::string>> rels;  // pred -> arg sorts
};

FormulaPtr shadow(const SortedSignature& sig, const FormulaPtr& f, ShadowTable& table);
FormulaPtr shadow(const SortedSignature& sig, const FormulaPtr& f);

/// Mechanically re-checks a Proved outcome: every schema step re-applies and
/// every refutation step re-derives from its parents.
bool replay(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
            const FormulaPtr& goal, const ProofOutcome& outcome);

}  // namespace cfl
