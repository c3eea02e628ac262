#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cfl/sorts.hpp"

namespace cfl {

class Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind { Variable, Constant, Application };

// Immutable; shared freely across threads.
class Term {
public:
  static TermPtr variable(std::string name, std::string sort);
  static TermPtr constant(std::string name);
  static TermPtr apply(std::string fn, std::vector<TermPtr> args);

  TermKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const std::string& var_sort() const { return sort_; }
  const std::vector<TermPtr>& args() const { return args_; }

  bool equals(const Term& o) const;

private:
  Term(TermKind k, std::string n, std::string s, std::vector<TermPtr> a)
      : kind_(k), name_(std::move(n)), sort_(std::move(s)), args_(std::move(a)) {}

  TermKind kind_;
  std::string name_;
  std::string sort_;  // variables only
  std::vector<TermPtr> args_;
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class FormulaKind {
  Atom, Equal, Not, And, Or, Implies, Iff, Forall, Exists,
  Knows, Believes, Desires, Intends, Perceives, Common, Says, Ought,
  Counterfactual
};

/// Operators that form opaque (intensional) positions: everything a
/// first-order prover must not look inside.
bool is_intensional(FormulaKind k);

/// The context-forming prefix operators K/B/D.
bool is_context_operator(FormulaKind k);

// Immutable formula node. `terms` holds the non-formula slots:
//   Atom      -> arguments            Equal  -> {lhs, rhs}
//   Forall/Exists -> {binder var}     K/B/D/intends/perceives -> {agent, time}
//   Common    -> {time}               Says   -> {agent[, addressee], time}
//   Ought     -> {agent, time}        (condition and action literal in subs)
class Formula {
public:
  static FormulaPtr atom(std::string rel, std::vector<TermPtr> args = {});
  static FormulaPtr equal(TermPtr a, TermPtr b);
  static FormulaPtr lnot(FormulaPtr f);
  static FormulaPtr land(FormulaPtr a, FormulaPtr b);
  static FormulaPtr lor(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr iff(FormulaPtr a, FormulaPtr b);
  static FormulaPtr forall(TermPtr var, FormulaPtr body);
  static FormulaPtr exists(TermPtr var, FormulaPtr body);
  static FormulaPtr knows(TermPtr agent, TermPtr time, FormulaPtr body);
  static FormulaPtr believes(TermPtr agent, TermPtr time, FormulaPtr body);
  static FormulaPtr desires(TermPtr agent, TermPtr time, FormulaPtr body);
  static FormulaPtr intends(TermPtr agent, TermPtr time, FormulaPtr body);
  static FormulaPtr perceives(TermPtr agent, TermPtr time, FormulaPtr body);
  static FormulaPtr common(TermPtr time, FormulaPtr body);
  static FormulaPtr says(TermPtr agent, TermPtr time, FormulaPtr body);
  static FormulaPtr says_to(TermPtr agent, TermPtr addressee, TermPtr time, FormulaPtr body);
  static FormulaPtr ought(TermPtr agent, TermPtr time, FormulaPtr condition,
                          FormulaPtr action_literal);
  static FormulaPtr counterfactual(FormulaPtr antecedent, FormulaPtr consequent);
  static FormulaPtr falsum() { return atom("false"); }

  FormulaKind kind() const { return kind_; }
  const std::string& rel() const { return rel_; }
  const std::vector<TermPtr>& terms() const { return terms_; }
  const std::vector<FormulaPtr>& subs() const { return subs_; }

  bool is_falsum() const { return kind_ == FormulaKind::Atom && rel_ == "false"; }
  bool equals(const Formula& o) const;

private:
  Formula(FormulaKind k, std::string rel, std::vector<TermPtr> terms,
          std::vector<FormulaPtr> subs)
      : kind_(k), rel_(std::move(rel)), terms_(std::move(terms)), subs_(std::move(subs)) {}
  static FormulaPtr make(FormulaKind k, std::string rel, std::vector<TermPtr> terms,
                         std::vector<FormulaPtr> subs);

  FormulaKind kind_;
  std::string rel_;
  std::vector<TermPtr> terms_;
  std::vector<FormulaPtr> subs_;
};

inline bool operator==(const Term& a, const Term& b) { return a.equals(b); }
inline bool operator==(const Formula& a, const Formula& b) { return a.equals(b); }

/// Free variables of a term/formula, by name (binder-aware).
std::set<std::string> free_vars(const TermPtr& t);
std::set<std::string> free_vars(const FormulaPtr& f);

/// Renames every bound variable to a canonical "?0", "?1", ... in traversal
/// order. Free variables are left untouched. Alpha-equivalent formulas
/// normalize to structurally equal ones.
FormulaPtr alpha_normalize(const FormulaPtr& f);

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b);

/// Sort of a well-sorted term (variables carry theirs; the rest from `sig`).
std::string sort_of(const SortedSignature& sig, const TermPtr& t);

/// Throws SortError naming the offending symbol and the expected/actual
/// sorts. Checks arities, the subsort discipline, agent/time slots of the
/// modal operators, and the shape of ought's fourth argument.
void check_sorted(const SortedSignature& sig, const FormulaPtr& f);

}  // namespace cfl
