#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cfl/ast.hpp"

namespace cfl {

struct Literal {
  bool positive = true;
  bool is_eq = false;
  std::string pred;           // unset for equality literals
  std::vector<TermPtr> args;  // equality: exactly {lhs, rhs}
  bool equals(const Literal& o) const;
  size_t weight() const;
};

struct Clause {
  std::vector<Literal> lits;

  // Derivation record, for trace replay.
  int id = -1;
  std::string rule;  // input | resolve | factor | eqres | paramod
  int parent1 = -1, parent2 = -1;
  int lit1 = -1, lit2 = -1;
  std::vector<int> path;  // paramod: arg index + subterm path inside the target literal

  bool empty() const { return lits.empty(); }
  size_t weight() const;
};

// Per-refutation symbol table: the user signature plus shadow relations and
// skolem functions minted during clausification.
struct LocalSymbols {
  const SortedSignature* base = nullptr;
  std::map<std::string, std::vector<std::string>> extra_rels;
  std::map<std::string, FunctionDecl> extra_funcs;
  std::set<std::string> shadow_preds;  // opaque: no paramodulation inside
  int fresh_counter = 0;

  std::string term_sort(const TermPtr& t) const;
  const std::vector<std::string>& pred_arity(const std::string& pred) const;
  std::string fresh_var() { return "V" + std::to_string(fresh_counter++); }
  std::string fresh_skolem() { return "sk" + std::to_string(fresh_counter++); }
};

using Subst = std::map<std::string, TermPtr>;

TermPtr apply_subst(const TermPtr& t, const Subst& s);
Literal apply_subst(const Literal& l, const Subst& s);

/// Sort-respecting unification; extends `s` on success. A variable of sort S
/// only binds terms whose sort is S or a descendant.
bool unify(const LocalSymbols& syms, const TermPtr& a, const TermPtr& b, Subst& s);

/// Clausifies a shadowed formula (no intensional operators left). Throws
/// Error if the CNF expansion exceeds `max_clauses`.
std::vector<Clause> clausify(LocalSymbols& syms, const FormulaPtr& f,
                             size_t max_clauses = 20000);

enum class SearchVerdict { Refuted, Saturated, LimitHit };

struct RefutationTrace {
  // Ancestor closure of the empty clause, in derivation (id) order; the used
  // input clauses come first.
  std::vector<Clause> used;
};

struct SearchLimits {
  std::chrono::steady_clock::time_point deadline;
  uint64_t max_clauses = 200000;
};

struct SearchResult {
  SearchVerdict verdict = SearchVerdict::LimitHit;
  RefutationTrace trace;
  uint64_t generated = 0;
};

/// Given-clause saturation: binary resolution, factoring, equality
/// resolution, and paramodulation kept out of shadow predicates.
/// Deterministic for a fixed input order.
SearchResult refute(LocalSymbols& syms, std::vector<Clause> input, const SearchLimits& lim);

/// Re-derives one non-input trace step from its parents and checks the stored
/// clause is a variant of the result. Used by the justification replayer.
bool replay_step(LocalSymbols& syms, const Clause& step, const Clause& p1, const Clause& p2);

/// True iff some substitution maps every literal of `c` onto a literal of `d`.
bool subsumes(const LocalSymbols& syms, const Clause& c, const Clause& d);

std::string print_clause(const Clause& c);

}  // namespace cfl
