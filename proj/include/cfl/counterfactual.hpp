#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cfl/context.hpp"
#include "cfl/prover.hpp"

namespace cfl {

enum class SubsetOrder { SmallFirst, LargeFirst };

struct CfConfig {
  int64_t delta_ms = 1000;   // consistency check budget
  int64_t entail_ms = 2000;  // per-entailment budget cap
  SubsetOrder order = SubsetOrder::LargeFirst;
  int64_t overall_ms = 30000;  // whole-query wall clock cap
  int max_cardinality = -1;    // < 0: unbounded
  int depth = 3;
  uint64_t max_clauses = 200000;
  int workers = 1;  // 1 = serial reference; > 1 = OpenMP batches
};

struct CfCounters {
  uint64_t subsets_examined = 0;
  uint64_t entail_calls = 0;
  uint64_t consistency_calls = 0;
};

struct CfWitness {
  bool inconsistent_antecedent = false;
  std::vector<size_t> indices;  // positions in gamma of the chosen subset
  std::vector<FormulaPtr> gamma_prime;
  std::shared_ptr<const ProofOutcome> entailment;             // subset branch
  std::shared_ptr<const ProofOutcome> antecedent_refutation;  // absurd-antecedent branch
  bool approximation_used = false;  // PresumedConsistent accepted for the consistency side
};

struct CfResult {
  ProofStatus status = ProofStatus::NotProvedWithinBudget;
  std::optional<CfWitness> witness;
  CfCounters counters;
  double elapsed_ms = 0;
};

// Streams the subsets of {0..n-1} grouped by cardinality: small-first in
// non-decreasing, large-first in non-increasing size; within one size,
// lexicographic by index. Each subset exactly once. n is capped at 30.
class SubsetStream {
public:
  SubsetStream(size_t n, SubsetOrder order, int max_cardinality = -1);

  std::optional<uint32_t> next();
  uint64_t total() const { return total_; }

  static std::vector<size_t> indices(uint32_t mask);

private:
  bool start_level(int k);

  size_t n_;
  SubsetOrder order_;
  int min_k_, max_k_;
  int level_;
  bool level_open_ = false;
  bool done_ = false;
  std::vector<int> comb_;
  uint64_t total_;
};

/// Decides gamma |- phi cf-> psi: proved when the antecedent is inconsistent,
/// or when some subset of gamma is consistent with phi and entails psi with
/// it. Witness populated accordingly.
CfResult prove_counterfactual(const SortedSignature& sig,
                              const std::vector<FormulaPtr>& gamma, const FormulaPtr& phi,
                              const FormulaPtr& psi, const CfConfig& cfg);

/// Contextual variant: subsets range over the bodies of the gamma members
/// whose modal context equals ctx. Empty ctx delegates to the extensional
/// entry point.
CfResult prove_counterfactual_in_context(const SortedSignature& sig,
                                         const std::vector<FormulaPtr>& gamma,
                                         const ModalContext& ctx, const FormulaPtr& phi,
                                         const FormulaPtr& psi, const CfConfig& cfg);

/// Independently re-checks a Proved witness with fresh prover calls.
bool reverify_witness(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
                      const FormulaPtr& phi, const FormulaPtr& psi, const CfResult& result,
                      const CfConfig& cfg);

bool reverify_witness_in_context(const SortedSignature& sig,
                                 const std::vector<FormulaPtr>& gamma,
                                 const ModalContext& ctx, const FormulaPtr& phi,
                                 const FormulaPtr& psi, const CfResult& result,
                                 const CfConfig& cfg);

}  // namespace cfl
