#include "cfl/ast.hpp"

#include <map>

#include "cfl/errors.hpp"

namespace cfl {

TermPtr Term::variable(std::string name, std::string sort) {
  return TermPtr(new Term(TermKind::Variable, std::move(name), std::move(sort), {}));
}
TermPtr Term::constant(std::string name) {
  return TermPtr(new Term(TermKind::Constant, std::move(name), "", {}));
}
TermPtr Term::apply(std::string fn, std::vector<TermPtr> args) {
  return TermPtr(new Term(TermKind::Application, std::move(fn), "", std::move(args)));
}

bool Term::equals(const Term& o) const {
  if (kind_ != o.kind_ || name_ != o.name_ || sort_ != o.sort_) return false;
  if (args_.size() != o.args_.size()) return false;
  for (size_t i = 0; i < args_.size(); ++i)
    if (!args_[i]->equals(*o.args_[i])) return false;
  return true;
}

FormulaPtr Formula::make(FormulaKind k, std::string rel, std::vector<TermPtr> terms,
                         std::vector<FormulaPtr> subs) {
  return FormulaPtr(new Formula(k, std::move(rel), std::move(terms), std::move(subs)));
}

FormulaPtr Formula::atom(std::string rel, std::vector<TermPtr> args) {
  return make(FormulaKind::Atom, std::move(rel), std::move(args), {});
}
FormulaPtr Formula::equal(TermPtr a, TermPtr b) {
  return make(FormulaKind::Equal, "", {std::move(a), std::move(b)}, {});
}
FormulaPtr Formula::lnot(FormulaPtr f) {
  return make(FormulaKind::Not, "", {}, {std::move(f)});
}
FormulaPtr Formula::land(FormulaPtr a, FormulaPtr b) {
  return make(FormulaKind::And, "", {}, {std::move(a), std::move(b)});
}
FormulaPtr Formula::lor(FormulaPtr a, FormulaPtr b) {
  return make(FormulaKind::Or, "", {}, {std::move(a), std::move(b)});
}
FormulaPtr Formula::implies(FormulaPtr a, FormulaPtr b) {
  return make(FormulaKind::Implies, "", {}, {std::move(a), std::move(b)});
}
FormulaPtr Formula::iff(FormulaPtr a, FormulaPtr b) {
  return make(FormulaKind::Iff, "", {}, {std::move(a), std::move(b)});
}
FormulaPtr Formula::forall(TermPtr var, FormulaPtr body) {
  return make(FormulaKind::Forall, "", {std::move(var)}, {std::move(body)});
}
FormulaPtr Formula::exists(TermPtr var, FormulaPtr body) {
  return make(FormulaKind::Exists, "", {std::move(var)}, {std::move(body)});
}
FormulaPtr Formula::knows(TermPtr a, TermPtr t, FormulaPtr body) {
  return make(FormulaKind::Knows, "", {std::move(a), std::move(t)}, {std::move(body)});
}
FormulaPtr Formula::believes(TermPtr a, TermPtr t, FormulaPtr body) {
  return make(FormulaKind::Believes, "", {std::move(a), std::move(t)}, {std::move(body)});
}
FormulaPtr Formula::desires(TermPtr a, TermPtr t, FormulaPtr body) {
  return make(FormulaKind::Desires, "", {std::move(a), std::move(t)}, {std::move(body)});
}
FormulaPtr Formula::intends(TermPtr a, TermPtr t, FormulaPtr body) {
  return make(FormulaKind::Intends, "", {std::move(a), std::move(t)}, {std::move(body)});
}
FormulaPtr Formula::perceives(TermPtr a, TermPtr t, FormulaPtr body) {
  return make(FormulaKind::Perceives, "", {std::move(a), std::move(t)}, {std::move(body)});
}
FormulaPtr Formula::common(TermPtr t, FormulaPtr body) {
  return make(FormulaKind::Common, "", {std::move(t)}, {std::move(body)});
}
FormulaPtr Formula::says(TermPtr a, TermPtr t, FormulaPtr body) {
  return make(FormulaKind::Says, "", {std::move(a), std::move(t)}, {std::move(body)});
}
FormulaPtr Formula::says_to(TermPtr a, TermPtr b, TermPtr t, FormulaPtr body) {
  return make(FormulaKind::Says, "", {std::move(a), std::move(b), std::move(t)},
              {std::move(body)});
}
FormulaPtr Formula::ought(TermPtr a, TermPtr t, FormulaPtr condition, FormulaPtr act) {
  return make(FormulaKind::Ought, "", {std::move(a), std::move(t)},
              {std::move(condition), std::move(act)});
}
FormulaPtr Formula::counterfactual(FormulaPtr a, FormulaPtr c) {
  return make(FormulaKind::Counterfactual, "", {}, {std::move(a), std::move(c)});
}

bool Formula::equals(const Formula& o) const {
  if (kind_ != o.kind_ || rel_ != o.rel_) return false;
  if (terms_.size() != o.terms_.size() || subs_.size() != o.subs_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (!terms_[i]->equals(*o.terms_[i])) return false;
  for (size_t i = 0; i < subs_.size(); ++i)
    if (!subs_[i]->equals(*o.subs_[i])) return false;
  return true;
}

bool is_intensional(FormulaKind k) {
  switch (k) {
    case FormulaKind::Knows:
    case FormulaKind::Believes:
    case FormulaKind::Desires:
    case FormulaKind::Intends:
    case FormulaKind::Perceives:
    case FormulaKind::Common:
    case FormulaKind::Says:
    case FormulaKind::Ought:
    case FormulaKind::Counterfactual:
      return true;
    default:
      return false;
  }
}

bool is_context_operator(FormulaKind k) {
  return k == FormulaKind::Knows || k == FormulaKind::Believes || k == FormulaKind::Desires;
}

namespace {

void collect_free(const TermPtr& t, const std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Variable:
      if (!bound.count(t->name())) out.insert(t->name());
      break;
    case TermKind::Constant:
      break;
    case TermKind::Application:
      for (const auto& a : t->args()) collect_free(a, bound, out);
      break;
  }
}

void collect_free(const FormulaPtr& f, std::set<std::string> bound,
                  std::set<std::string>& out) {
  if (f->kind() == FormulaKind::Forall || f->kind() == FormulaKind::Exists) {
    bound.insert(f->terms()[0]->name());
    collect_free(f->subs()[0], bound, out);
    return;
  }
  for (const auto& t : f->terms()) collect_free(t, bound, out);
  for (const auto& s : f->subs()) collect_free(s, std::set<std::string>(bound), out);
}

// Bound-variable renaming environment: name -> stack of canonical names.
struct RenameEnv {
  std::map<std::string, std::vector<std::string>> stack;
  int counter = 0;
};

TermPtr rename_term(const TermPtr& t, RenameEnv& env) {
  switch (t->kind()) {
    case TermKind::Variable: {
      auto it = env.stack.find(t->name());
      if (it != env.stack.end() && !it->second.empty())
        return Term::variable(it->second.back(), t->var_sort());
      return t;
    }
    case TermKind::Constant:
      return t;
    case TermKind::Application: {
      std::vector<TermPtr> args;
      args.reserve(t->args().size());
      for (const auto& a : t->args()) args.push_back(rename_term(a, env));
      return Term::apply(t->name(), std::move(args));
    }
  }
  return t;
}

FormulaPtr rename_formula(const FormulaPtr& f, RenameEnv& env);

FormulaPtr rename_binder(const FormulaPtr& f, RenameEnv& env) {
  const TermPtr& var = f->terms()[0];
  std::string fresh = "?" + std::to_string(env.counter++);
  env.stack[var->name()].push_back(fresh);
  FormulaPtr body = rename_formula(f->subs()[0], env);
  env.stack[var->name()].pop_back();
  TermPtr nv = Term::variable(fresh, var->var_sort());
  return f->kind() == FormulaKind::Forall ? Formula::forall(nv, body)
                                          : Formula::exists(nv, body);
}

FormulaPtr rename_formula(const FormulaPtr& f, RenameEnv& env) {
  if (f->kind() == FormulaKind::Forall || f->kind() == FormulaKind::Exists)
    return rename_binder(f, env);
  std::vector<TermPtr> terms;
  terms.reserve(f->terms().size());
  for (const auto& t : f->terms()) terms.push_back(rename_term(t, env));
  std::vector<FormulaPtr> subs;
  subs.reserve(f->subs().size());
  for (const auto& s : f->subs()) subs.push_back(rename_formula(s, env));
  switch (f->kind()) {
    case FormulaKind::Atom: return Formula::atom(f->rel(), std::move(terms));
    case FormulaKind::Equal: return Formula::equal(terms[0], terms[1]);
    case FormulaKind::Not: return Formula::lnot(subs[0]);
    case FormulaKind::And: return Formula::land(subs[0], subs[1]);
    case FormulaKind::Or: return Formula::lor(subs[0], subs[1]);
    case FormulaKind::Implies: return Formula::implies(subs[0], subs[1]);
    case FormulaKind::Iff: return Formula::iff(subs[0], subs[1]);
    case FormulaKind::Knows: return Formula::knows(terms[0], terms[1], subs[0]);
    case FormulaKind::Believes: return Formula::believes(terms[0], terms[1], subs[0]);
    case FormulaKind::Desires: return Formula::desires(terms[0], terms[1], subs[0]);
    case FormulaKind::Intends: return Formula::intends(terms[0], terms[1], subs[0]);
    case FormulaKind::Perceives: return Formula::perceives(terms[0], terms[1], subs[0]);
    case FormulaKind::Common: return Formula::common(terms[0], subs[0]);
    case FormulaKind::Says:
      return terms.size() == 2 ? Formula::says(terms[0], terms[1], subs[0])
                               : Formula::says_to(terms[0], terms[1], terms[2], subs[0]);
    case FormulaKind::Ought: return Formula::ought(terms[0], terms[1], subs[0], subs[1]);
    case FormulaKind::Counterfactual: return Formula::counterfactual(subs[0], subs[1]);
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      break;  // handled above
  }
  throw Error("rename_formula: unreachable");
}

}  // namespace

std::set<std::string> free_vars(const TermPtr& t) {
  std::set<std::string> out;
  collect_free(t, {}, out);
  return out;
}

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> out;
  collect_free(f, {}, out);
  return out;
}

FormulaPtr alpha_normalize(const FormulaPtr& f) {
  RenameEnv env;
  return rename_formula(f, env);
}

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b) {
  return alpha_normalize(a)->equals(*alpha_normalize(b));
}

std::string sort_of(const SortedSignature& sig, const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Variable: return t->var_sort();
    case TermKind::Constant: return sig.constant_sort(t->name());
    case TermKind::Application: return sig.function(t->name()).result_sort;
  }
  throw Error("sort_of: unreachable");
}

namespace {

void check_term(const SortedSignature& sig, const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Variable:
      if (!sig.has_sort(t->var_sort()))
        throw SortError("variable " + t->name() + " has unknown sort " + t->var_sort());
      return;
    case TermKind::Constant:
      sig.constant_sort(t->name());  // throws if undeclared
      return;
    case TermKind::Application: {
      const FunctionDecl& d = sig.function(t->name());
      if (d.arg_sorts.size() != t->args().size())
        throw SortError("function " + t->name() + " expects " +
                        std::to_string(d.arg_sorts.size()) + " arguments, got " +
                        std::to_string(t->args().size()));
      for (size_t i = 0; i < t->args().size(); ++i) {
        check_term(sig, t->args()[i]);
        std::string actual = sort_of(sig, t->args()[i]);
        if (!sig.subsort(actual, d.arg_sorts[i]))
          throw SortError("argument " + std::to_string(i + 1) + " of " + t->name() +
                          ": expected sort " + d.arg_sorts[i] + ", got " + actual);
      }
      return;
    }
  }
}

void check_slot(const SortedSignature& sig, const TermPtr& t, const std::string& wanted,
                const char* what) {
  check_term(sig, t);
  std::string actual = sort_of(sig, t);
  if (!sig.subsort(actual, wanted))
    throw SortError(std::string(what) + " position expects sort " + wanted + ", got " +
                    actual + " (" + t->name() + ")");
}

// ought's fourth argument: a (possibly negated) happens(action(..), t) atom.
bool is_action_literal(const FormulaPtr& f) {
  const Formula* g = f.get();
  if (g->kind() == FormulaKind::Not) g = g->subs()[0].get();
  if (g->kind() != FormulaKind::Atom || g->rel() != "happens") return false;
  if (g->terms().size() != 2) return false;
  const TermPtr& ev = g->terms()[0];
  return ev->kind() == TermKind::Application && ev->name() == "action";
}

}  // namespace

void check_sorted(const SortedSignature& sig, const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Atom: {
      const auto& decl = sig.relation(f->rel());
      if (decl.size() != f->terms().size())
        throw SortError("relation " + f->rel() + " expects " +
                        std::to_string(decl.size()) + " arguments, got " +
                        std::to_string(f->terms().size()));
      for (size_t i = 0; i < decl.size(); ++i) {
        check_term(sig, f->terms()[i]);
        std::string actual = sort_of(sig, f->terms()[i]);
        if (!sig.subsort(actual, decl[i]))
          throw SortError("argument " + std::to_string(i + 1) + " of " + f->rel() +
                          ": expected sort " + decl[i] + ", got " + actual);
      }
      return;
    }
    case FormulaKind::Equal: {
      check_term(sig, f->terms()[0]);
      check_term(sig, f->terms()[1]);
      std::string sa = sort_of(sig, f->terms()[0]);
      std::string sb = sort_of(sig, f->terms()[1]);
      if (!sig.comparable(sa, sb))
        throw SortError("equality between unrelated sorts " + sa + " and " + sb);
      return;
    }
    case FormulaKind::Not:
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Iff:
    case FormulaKind::Counterfactual:
      for (const auto& s : f->subs()) check_sorted(sig, s);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      const TermPtr& v = f->terms()[0];
      if (!sig.has_sort(v->var_sort()))
        throw SortError("binder " + v->name() + " has unknown sort " + v->var_sort());
      check_sorted(sig, f->subs()[0]);
      return;
    }
    case FormulaKind::Knows:
    case FormulaKind::Believes:
    case FormulaKind::Desires:
    case FormulaKind::Intends:
    case FormulaKind::Perceives:
      check_slot(sig, f->terms()[0], "Agent", "agent");
      check_slot(sig, f->terms()[1], "Moment", "time");
      check_sorted(sig, f->subs()[0]);
      return;
    case FormulaKind::Common:
      check_slot(sig, f->terms()[0], "Moment", "time");
      check_sorted(sig, f->subs()[0]);
      return;
    case FormulaKind::Says: {
      check_slot(sig, f->terms()[0], "Agent", "agent");
      if (f->terms().size() == 3) {
        check_slot(sig, f->terms()[1], "Agent", "addressee");
        check_slot(sig, f->terms()[2], "Moment", "time");
      } else {
        check_slot(sig, f->terms()[1], "Moment", "time");
      }
      check_sorted(sig, f->subs()[0]);
      return;
    }
    case FormulaKind::Ought: {
      check_slot(sig, f->terms()[0], "Agent", "agent");
      check_slot(sig, f->terms()[1], "Moment", "time");
      check_sorted(sig, f->subs()[0]);
      if (!is_action_literal(f->subs()[1]))
        throw SortError("ought's fourth argument must be a (possibly negated) "
                        "happens(action(..), ..) literal");
      check_sorted(sig, f->subs()[1]);
      return;
    }
  }
}

}  // namespace cfl
