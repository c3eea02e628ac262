#include "cfl/counterfactual.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cfl/errors.hpp"

namespace cfl {

// ---------------------------------------------------------------------------
// Subset enumeration
// ---------------------------------------------------------------------------

namespace {

uint64_t binom(size_t n, size_t k) {
  uint64_t r = 1;
  for (size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

SubsetStream::SubsetStream(size_t n, SubsetOrder order, int max_cardinality)
    : n_(n), order_(order) {
  if (n > 30) throw Error("premise set too large for subset search (max 30)");
  min_k_ = 0;
  max_k_ = (int)n;
  if (max_cardinality >= 0) max_k_ = std::min(max_k_, max_cardinality);
  level_ = order == SubsetOrder::SmallFirst ? min_k_ : max_k_;
  total_ = 0;
  for (int k = min_k_; k <= max_k_; ++k) total_ += binom(n, (size_t)k);
}

bool SubsetStream::start_level(int k) {
  if (k < min_k_ || k > max_k_) return false;
  comb_.resize((size_t)k);
  for (int i = 0; i < k; ++i) comb_[(size_t)i] = i;
  level_open_ = true;
  return true;
}

std::optional<uint32_t> SubsetStream::next() {
  while (!done_) {
    if (!level_open_) {
      if (!start_level(level_)) { done_ = true; break; }
    } else {
      // Advance the current combination; on exhaustion move one level.
      int k = level_;
      int i = k - 1;
      while (i >= 0 && comb_[(size_t)i] == (int)n_ - k + i) --i;
      if (i < 0) {
        level_open_ = false;
        level_ += order_ == SubsetOrder::SmallFirst ? 1 : -1;
        if (level_ < min_k_ || level_ > max_k_) { done_ = true; break; }
        continue;
      }
      ++comb_[(size_t)i];
      for (int j = i + 1; j < k; ++j) comb_[(size_t)j] = comb_[(size_t)j - 1] + 1;
    }
    uint32_t mask = 0;
    for (int idx : comb_) mask |= 1u << idx;
    return mask;
  }
  return std::nullopt;
}

std::vector<size_t> SubsetStream::indices(uint32_t mask) {
  std::vector<size_t> out;
  for (size_t i = 0; i < 32; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Subset search
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

struct SearchState {
  const SortedSignature& sig;
  const std::vector<FormulaPtr>& pool;  // candidate premises (bodies, in context mode)
  FormulaPtr phi, psi;
  const CfConfig& cfg;
  Clock::time_point deadline;
  bool psi_is_false;

  // Memoization per the paper's two hooks: consistency verdicts propagate
  // down (subsets of a consistent set) and up (supersets of an inconsistent
  // one); entailment statuses are cached per subset.
  std::vector<uint32_t> consistent_masks;
  std::vector<uint32_t> inconsistent_masks;
  std::map<uint32_t, ProofStatus> entail_cache;
  CfCounters counters;
  std::mutex mu;

  SearchState(const SortedSignature& s, const std::vector<FormulaPtr>& p, FormulaPtr ph,
              FormulaPtr ps, const CfConfig& c, Clock::time_point dl)
      : sig(s), pool(p), phi(std::move(ph)), psi(std::move(ps)), cfg(c), deadline(dl) {
    psi_is_false = psi->is_falsum();
  }

  std::vector<FormulaPtr> subset_plus_phi(uint32_t mask) const {
    std::vector<FormulaPtr> out;
    for (size_t i = 0; i < pool.size(); ++i)
      if (mask & (1u << i)) out.push_back(pool[i]);
    out.push_back(phi);
    return out;
  }

  int64_t remaining_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now())
        .count();
  }

  enum class ConsMemo { Unknown, Consistent, Inconsistent };

  ConsMemo memo_lookup(uint32_t mask) {
    std::lock_guard<std::mutex> lock(mu);
    for (uint32_t m : consistent_masks)
      if ((mask & m) == mask) return ConsMemo::Consistent;
    for (uint32_t m : inconsistent_masks)
      if ((mask & m) == m) return ConsMemo::Inconsistent;
    return ConsMemo::Unknown;
  }

  void memo_record(uint32_t mask, bool is_consistent) {
    std::lock_guard<std::mutex> lock(mu);
    if (is_consistent) consistent_masks.push_back(mask);
    else inconsistent_masks.push_back(mask);
  }

  struct SubsetOutcome {
    bool proved = false;
    std::shared_ptr<const ProofOutcome> proof;
  };

  // Evaluates one candidate subset: the consistency side first, then the
  // entailment side under the per-subset slice.
  SubsetOutcome examine(uint32_t mask, int64_t slice_ms) {
    SubsetOutcome out;
    {
      std::lock_guard<std::mutex> lock(mu);
      counters.subsets_examined++;
    }
    ConsMemo memo = memo_lookup(mask);
    bool cons_ok;
    if (memo == ConsMemo::Unknown) {
      int64_t budget = std::min<int64_t>(cfg.delta_ms, std::max<int64_t>(1, remaining_ms()));
      Budget b{budget, cfg.depth, cfg.max_clauses};
      ProofOutcome bottom =
          prove_unchecked(sig, subset_plus_phi(mask), Formula::falsum(), b);
      {
        std::lock_guard<std::mutex> lock(mu);
        counters.consistency_calls++;
      }
      cons_ok = bottom.status != ProofStatus::Proved;
      memo_record(mask, cons_ok);
      if (psi_is_false) {
        // With an absurd consequent the entailment side is the same query;
        // reuse the verdict so the two sides can never disagree.
        std::lock_guard<std::mutex> lock(mu);
        counters.entail_calls++;
        return out;  // cons_ok => bottom not proved => I3 fails; !cons_ok => I2 fails
      }
    } else {
      cons_ok = memo == ConsMemo::Consistent;
      if (psi_is_false) {
        std::lock_guard<std::mutex> lock(mu);
        counters.entail_calls++;
        return out;
      }
    }
    if (!cons_ok) return out;

    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = entail_cache.find(mask);
      if (it != entail_cache.end() && it->second == ProofStatus::NotProvedWithinBudget) {
        counters.entail_calls++;
        return out;
      }
    }
    Budget b{std::max<int64_t>(1, std::min<int64_t>(slice_ms, remaining_ms())), cfg.depth,
             cfg.max_clauses};
    ProofOutcome proof = prove_unchecked(sig, subset_plus_phi(mask), psi, b);
    {
      std::lock_guard<std::mutex> lock(mu);
      counters.entail_calls++;
      entail_cache[mask] = proof.status;
    }
    if (proof.status == ProofStatus::Proved) {
      out.proved = true;
      out.proof = std::make_shared<ProofOutcome>(std::move(proof));
    }
    return out;
  }
};

CfResult search(const SortedSignature& sig, const std::vector<FormulaPtr>& pool,
                const std::vector<size_t>& pool_indices, const FormulaPtr& phi,
                const FormulaPtr& psi, const CfConfig& cfg) {
  auto start = Clock::now();
  auto deadline = start + std::chrono::milliseconds(cfg.overall_ms);
  CfResult result;

  auto finish = [&](CfResult r) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return r;
  };

  // Absurd-antecedent branch first, once, with the full delta.
  ConsistencyVerdict ante = consistent(sig, {phi}, cfg.delta_ms, cfg.depth);
  result.counters.consistency_calls++;
  if (ante.value == ConsistencyVerdict::Inconsistent) {
    result.status = ProofStatus::Proved;
    CfWitness w;
    w.inconsistent_antecedent = true;
    w.antecedent_refutation = ante.refutation;
    result.witness = std::move(w);
    return finish(std::move(result));
  }

  SearchState state(sig, pool, phi, psi, cfg, deadline);
  state.counters.consistency_calls = 1;  // the antecedent check above
  SubsetStream stream(pool.size(), cfg.order, cfg.max_cardinality);
  uint64_t total = stream.total();
  uint64_t drawn = 0;

  auto make_witness = [&](uint32_t mask, std::shared_ptr<const ProofOutcome> proof) {
    CfWitness w;
    for (size_t i : SubsetStream::indices(mask)) {
      w.indices.push_back(pool_indices[i]);
      w.gamma_prime.push_back(pool[i]);
    }
    w.entailment = std::move(proof);
    w.approximation_used = true;  // PresumedConsistent stood in for Cons
    return w;
  };

  int workers = std::max(1, cfg.workers);
  if (workers == 1) {
    // Serial reference path.
    while (auto mask = stream.next()) {
      if (state.remaining_ms() <= 0) break;
      ++drawn;
      uint64_t remaining_subsets = total > drawn ? total - drawn + 1 : 1;
      int64_t slice =
          std::min<int64_t>(cfg.entail_ms,
                            std::max<int64_t>(1, state.remaining_ms() / (int64_t)remaining_subsets));
      auto outcome = state.examine(*mask, slice);
      if (outcome.proved) {
        result.status = ProofStatus::Proved;
        result.witness = make_witness(*mask, outcome.proof);
        result.counters = state.counters;
        return finish(std::move(result));
      }
    }
    result.counters = state.counters;
    return finish(std::move(result));
  }

  // OpenMP path: fixed-size batches, earliest-in-order success wins.
  const size_t batch_size = (size_t)workers * 4;
  std::vector<uint32_t> batch;
  std::vector<SearchState::SubsetOutcome> outcomes(batch_size);
  while (true) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto mask = stream.next();
      if (!mask) break;
      batch.push_back(*mask);
    }
    if (batch.empty()) break;
    if (state.remaining_ms() <= 0) break;
    drawn += batch.size();
    uint64_t remaining_subsets = total > drawn ? total - drawn + 1 : 1;
    int64_t slice =
        std::min<int64_t>(cfg.entail_ms,
                          std::max<int64_t>(1, state.remaining_ms() / (int64_t)remaining_subsets));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
#endif
    for (size_t i = 0; i < batch.size(); ++i) {
      if (state.remaining_ms() <= 0) {
        outcomes[i] = {};
        continue;
      }
      outcomes[i] = state.examine(batch[i], slice);
    }
    for (size_t i = 0; i < batch.size(); ++i) {
      if (outcomes[i].proved) {
        result.status = ProofStatus::Proved;
        result.witness = make_witness(batch[i], outcomes[i].proof);
        result.counters = state.counters;
        return finish(std::move(result));
      }
    }
  }
  result.counters = state.counters;
  return finish(std::move(result));
}

}  // namespace

CfResult prove_counterfactual(const SortedSignature& sig,
                              const std::vector<FormulaPtr>& gamma, const FormulaPtr& phi,
                              const FormulaPtr& psi, const CfConfig& cfg) {
  for (const auto& f : gamma) check_sorted(sig, f);
  check_sorted(sig, phi);
  check_sorted(sig, psi);
  std::vector<size_t> idx(gamma.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return search(sig, gamma, idx, phi, psi, cfg);
}

CfResult prove_counterfactual_in_context(const SortedSignature& sig,
                                         const std::vector<FormulaPtr>& gamma,
                                         const ModalContext& ctx, const FormulaPtr& phi,
                                         const FormulaPtr& psi, const CfConfig& cfg) {
  if (ctx.empty()) return prove_counterfactual(sig, gamma, phi, psi, cfg);
  for (const auto& f : gamma) check_sorted(sig, f);
  check_sorted(sig, phi);
  check_sorted(sig, psi);
  std::vector<size_t> indices = project_context_indices(gamma, ctx);
  std::vector<FormulaPtr> bodies = project_context(gamma, ctx);
  return search(sig, bodies, indices, phi, psi, cfg);
}

namespace {

bool reverify(const SortedSignature& sig, const std::vector<FormulaPtr>& pool_from_gamma,
              const FormulaPtr& phi, const FormulaPtr& psi, const CfResult& result,
              const CfConfig& cfg) {
  if (result.status != ProofStatus::Proved || !result.witness) return false;
  const CfWitness& w = *result.witness;
  if (w.inconsistent_antecedent) {
    ConsistencyVerdict v = consistent(sig, {phi}, cfg.delta_ms, cfg.depth);
    return v.value == ConsistencyVerdict::Inconsistent;
  }
  // I1: the witness formulas are members (checked against the projected pool
  // by the context variant).
  for (const auto& f : w.gamma_prime) {
    bool found = false;
    for (const auto& g : pool_from_gamma)
      if (alpha_equal(f, g)) { found = true; break; }
    if (!found) return false;
  }
  std::vector<FormulaPtr> with_phi = w.gamma_prime;
  with_phi.push_back(phi);
  ConsistencyVerdict v = consistent(sig, with_phi, cfg.delta_ms, cfg.depth);
  if (v.value != ConsistencyVerdict::PresumedConsistent) return false;
  Budget b{cfg.entail_ms, cfg.depth, cfg.max_clauses};
  ProofOutcome p = prove(sig, with_phi, psi, b);
  return p.status == ProofStatus::Proved;
}

}  // namespace

bool reverify_witness(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
                      const FormulaPtr& phi, const FormulaPtr& psi, const CfResult& result,
                      const CfConfig& cfg) {
  return reverify(sig, gamma, phi, psi, result, cfg);
}

bool reverify_witness_in_context(const SortedSignature& sig,
                                 const std::vector<FormulaPtr>& gamma,
                                 const ModalContext& ctx, const FormulaPtr& phi,
                                 const FormulaPtr& psi, const CfResult& result,
                                 const CfConfig& cfg) {
  if (ctx.empty()) return reverify(sig, gamma, phi, psi, result, cfg);
  return reverify(sig, project_context(gamma, ctx), phi, psi, result, cfg);
}

}  // namespace cfl
