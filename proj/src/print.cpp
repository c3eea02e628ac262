#include "cfl/print.hpp"

#include <cstdio>

#include "cfl/context.hpp"
#include "cfl/errors.hpp"

namespace cfl {

std::string print_term(const TermPtr& t) {
  switch (t->kind()) {
    case TermKind::Variable:
    case TermKind::Constant:
      return t->name();
    case TermKind::Application: {
      std::string out = "(" + t->name();
      for (const auto& a : t->args()) out += " " + print_term(a);
      return out + ")";
    }
  }
  throw Error("print_term: unreachable");
}

namespace {

std::string head_of(FormulaKind k) {
  switch (k) {
    case FormulaKind::Not: return "not";
    case FormulaKind::And: return "and";
    case FormulaKind::Or: return "or";
    case FormulaKind::Implies: return "implies";
    case FormulaKind::Iff: return "iff";
    case FormulaKind::Forall: return "forall";
    case FormulaKind::Exists: return "exists";
    case FormulaKind::Knows: return "K";
    case FormulaKind::Believes: return "B";
    case FormulaKind::Desires: return "D";
    case FormulaKind::Intends: return "intends";
    case FormulaKind::Perceives: return "perceives";
    case FormulaKind::Common: return "common";
    case FormulaKind::Says: return "says";
    case FormulaKind::Ought: return "ought";
    case FormulaKind::Counterfactual: return "cf";
    default: throw Error("head_of: not an operator");
  }
}

}  // namespace

namespace {

std::string print_rational(double v) {
  if (v == (double)(int64_t)v) return std::to_string((int64_t)v);
  char buf[32];
  snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string print_problem(const Problem& p) {
  SortedSignature builtin;
  std::string out = "(problem " + p.name + "\n";

  // User sorts, parents before children.
  std::vector<std::string> pending;
  for (const auto& s : p.signature.sorts())
    if (!builtin.has_sort(s)) pending.push_back(s);
  std::set<std::string> emitted;
  while (!pending.empty()) {
    for (auto it = pending.begin(); it != pending.end();) {
      std::string parent = p.signature.parent_of(*it);
      if (parent.empty() || builtin.has_sort(parent) || emitted.count(parent)) {
        out += "  (sort " + *it + (parent.empty() ? "" : " " + parent) + ")\n";
        emitted.insert(*it);
        it = pending.erase(it);
      } else {
        ++it;
      }
    }
  }
  for (const auto& [name, sort] : p.signature.constants())
    if (!builtin.has_constant(name)) out += "  (const " + name + " " + sort + ")\n";
  for (const auto& [name, decl] : p.signature.functions()) {
    if (builtin.has_function(name)) continue;
    out += "  (func " + name + " (";
    for (size_t i = 0; i < decl.arg_sorts.size(); ++i)
      out += (i ? " " : "") + decl.arg_sorts[i];
    out += ") " + decl.result_sort + ")\n";
  }
  for (const auto& [name, args] : p.signature.relations()) {
    if (builtin.has_relation(name)) continue;
    out += "  (rel " + name + " (";
    for (size_t i = 0; i < args.size(); ++i) out += (i ? " " : "") + args[i];
    out += "))\n";
  }

  if (p.dde.present) {
    out += "  (dde (agent " + p.dde.agent + ") (moment " + p.dde.moment + ") (situation " +
           p.dde.situation + ") (action " + p.dde.action_type + ")";
    for (const auto& [term, mu] : p.dde.mu)
      out += "\n       (mu " + print_term(term) + " " + print_rational(mu) + ")";
    out += ")\n";
  }

  out += "  (assumptions";
  for (const auto& f : p.assumptions) out += "\n    " + print_formula(f);
  out += ")\n  (queries";
  for (const auto& q : p.queries) {
    switch (q.kind) {
      case QueryKind::Entail:
        out += "\n    (entail " + print_formula(q.formulas[0]) + ")";
        break;
      case QueryKind::Cf:
        out += "\n    (cf " + print_formula(q.formulas[0]) + " " +
               print_formula(q.formulas[1]) + ")";
        break;
      case QueryKind::CfInContext:
        out += "\n    (cf-in " + print_context(q.ctx) + " " + print_formula(q.formulas[0]) +
               " " + print_formula(q.formulas[1]) + ")";
        break;
    }
  }
  out += "))\n";
  return out;
}

std::string print_formula(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::Atom: {
      if (f->terms().empty()) return f->rel();
      std::string out = "(" + f->rel();
      for (const auto& t : f->terms()) out += " " + print_term(t);
      return out + ")";
    }
    case FormulaKind::Equal:
      return "(= " + print_term(f->terms()[0]) + " " + print_term(f->terms()[1]) + ")";
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      const TermPtr& v = f->terms()[0];
      return "(" + head_of(f->kind()) + " (" + v->name() + " " + v->var_sort() + ") " +
             print_formula(f->subs()[0]) + ")";
    }
    default: {
      std::string out = "(" + head_of(f->kind());
      for (const auto& t : f->terms()) out += " " + print_term(t);
      for (const auto& s : f->subs()) out += " " + print_formula(s);
      return out + ")";
    }
  }
}

}  // namespace cfl
