#include "cfl/clausal.hpp"

#include <algorithm>
#include <functional>

#include "cfl/errors.hpp"
#include "cfl/print.hpp"

namespace cfl {

namespace {

size_t term_size(const TermPtr& t) {
  size_t n = 1;
  for (const auto& a : t->args()) n += term_size(a);
  return n;
}

}  // namespace

bool Literal::equals(const Literal& o) const {
  if (positive != o.positive || is_eq != o.is_eq || pred != o.pred) return false;
  if (args.size() != o.args.size()) return false;
  for (size_t i = 0; i < args.size(); ++i)
    if (!args[i]->equals(*o.args[i])) return false;
  return true;
}

size_t Literal::weight() const {
  size_t n = 1;
  for (const auto& a : args) n += term_size(a);
  return n;
}

size_t Clause::weight() const {
  size_t n = 0;
  for (const auto& l : lits) n += l.weight();
  return n;
}

std::string LocalSymbols::term_sort(const TermPtr& t) const {
  switch (t->kind()) {
    case TermKind::Variable: return t->var_sort();
    case TermKind::Constant: return base->constant_sort(t->name());
    case TermKind::Application: {
      auto it = extra_funcs.find(t->name());
      if (it != extra_funcs.end()) return it->second.result_sort;
      return base->function(t->name()).result_sort;
    }
  }
  throw Error("term_sort: unreachable");
}

const std::vector<std::string>& LocalSymbols::pred_arity(const std::string& pred) const {
  auto it = extra_rels.find(pred);
  if (it != extra_rels.end()) return it->second;
  return base->relation(pred);
}

// ---------------------------------------------------------------------------
// Substitution and unification
// ---------------------------------------------------------------------------

namespace {

TermPtr chase(TermPtr t, const Subst& s) {
  while (t->kind() == TermKind::Variable) {
    auto it = s.find(t->name());
    if (it == s.end()) return t;
    t = it->second;
  }
  return t;
}

bool occurs(const std::string& var, const TermPtr& t, const Subst& s) {
  TermPtr u = chase(t, s);
  if (u->kind() == TermKind::Variable) return u->name() == var;
  for (const auto& a : u->args())
    if (occurs(var, a, s)) return true;
  return false;
}

}  // namespace

TermPtr apply_subst(const TermPtr& t, const Subst& s) {
  switch (t->kind()) {
    case TermKind::Variable: {
      auto it = s.find(t->name());
      if (it == s.end()) return t;
      return apply_subst(it->second, s);
    }
    case TermKind::Constant:
      return t;
    case TermKind::Application: {
      std::vector<TermPtr> args;
      args.reserve(t->args().size());
      bool changed = false;
      for (const auto& a : t->args()) {
        args.push_back(apply_subst(a, s));
        changed = changed || args.back() != a;
      }
      return changed ? Term::apply(t->name(), std::move(args)) : t;
    }
  }
  throw Error("apply_subst: unreachable");
}

Literal apply_subst(const Literal& l, const Subst& s) {
  Literal out = l;
  for (auto& a : out.args) a = apply_subst(a, s);
  return out;
}

bool unify(const LocalSymbols& syms, const TermPtr& a0, const TermPtr& b0, Subst& s) {
  TermPtr a = chase(a0, s), b = chase(b0, s);
  if (a->kind() == TermKind::Variable && b->kind() == TermKind::Variable &&
      a->name() == b->name())
    return true;
  if (a->kind() == TermKind::Variable || b->kind() == TermKind::Variable) {
    // Bind the variable with the more general sort when both are variables.
    if (a->kind() == TermKind::Variable && b->kind() == TermKind::Variable) {
      if (syms.base->subsort(b->var_sort(), a->var_sort())) {
        s[a->name()] = b;
        return true;
      }
      if (syms.base->subsort(a->var_sort(), b->var_sort())) {
        s[b->name()] = a;
        return true;
      }
      return false;
    }
    const TermPtr& var = a->kind() == TermKind::Variable ? a : b;
    const TermPtr& other = a->kind() == TermKind::Variable ? b : a;
    if (!syms.base->subsort(syms.term_sort(other), var->var_sort())) return false;
    if (occurs(var->name(), other, s)) return false;
    s[var->name()] = other;
    return true;
  }
  if (a->kind() != b->kind() || a->name() != b->name()) return false;
  if (a->args().size() != b->args().size()) return false;
  for (size_t i = 0; i < a->args().size(); ++i)
    if (!unify(syms, a->args()[i], b->args()[i], s)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Clausification
// ---------------------------------------------------------------------------

namespace {

FormulaPtr nnf(const FormulaPtr& f, bool pos) {
  switch (f->kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Equal:
      return pos ? f : Formula::lnot(f);
    case FormulaKind::Not:
      return nnf(f->subs()[0], !pos);
    case FormulaKind::And:
      return pos ? Formula::land(nnf(f->subs()[0], true), nnf(f->subs()[1], true))
                 : Formula::lor(nnf(f->subs()[0], false), nnf(f->subs()[1], false));
    case FormulaKind::Or:
      return pos ? Formula::lor(nnf(f->subs()[0], true), nnf(f->subs()[1], true))
                 : Formula::land(nnf(f->subs()[0], false), nnf(f->subs()[1], false));
    case FormulaKind::Implies:
      return pos ? Formula::lor(nnf(f->subs()[0], false), nnf(f->subs()[1], true))
                 : Formula::land(nnf(f->subs()[0], true), nnf(f->subs()[1], false));
    case FormulaKind::Iff: {
      const FormulaPtr& a = f->subs()[0];
      const FormulaPtr& b = f->subs()[1];
      if (pos)
        return Formula::land(nnf(Formula::implies(a, b), true),
                             nnf(Formula::implies(b, a), true));
      return Formula::land(Formula::lor(nnf(a, true), nnf(b, true)),
                           Formula::lor(nnf(a, false), nnf(b, false)));
    }
    case FormulaKind::Forall:
      return pos ? Formula::forall(f->terms()[0], nnf(f->subs()[0], true))
                 : Formula::exists(f->terms()[0], nnf(f->subs()[0], false));
    case FormulaKind::Exists:
      return pos ? Formula::exists(f->terms()[0], nnf(f->subs()[0], true))
                 : Formula::forall(f->terms()[0], nnf(f->subs()[0], false));
    default:
      throw Error("nnf: intensional operator not shadowed: " + print_formula(f));
  }
}

using Env = std::map<std::string, std::vector<TermPtr>>;

TermPtr sk_term(const TermPtr& t, const Env& env) {
  switch (t->kind()) {
    case TermKind::Variable: {
      auto it = env.find(t->name());
      if (it != env.end() && !it->second.empty()) return it->second.back();
      return t;  // free variable: kept as-is
    }
    case TermKind::Constant:
      return t;
    case TermKind::Application: {
      std::vector<TermPtr> args;
      args.reserve(t->args().size());
      for (const auto& a : t->args()) args.push_back(sk_term(a, env));
      return Term::apply(t->name(), std::move(args));
    }
  }
  throw Error("sk_term: unreachable");
}

// Skolemizes an NNF formula, dropping quantifiers. `scope` holds the
// universal variables in force, outermost first.
FormulaPtr skolemize(LocalSymbols& syms, const FormulaPtr& f, Env& env,
                     std::vector<TermPtr>& scope) {
  switch (f->kind()) {
    case FormulaKind::Atom: {
      std::vector<TermPtr> args;
      for (const auto& t : f->terms()) args.push_back(sk_term(t, env));
      return Formula::atom(f->rel(), std::move(args));
    }
    case FormulaKind::Equal:
      return Formula::equal(sk_term(f->terms()[0], env), sk_term(f->terms()[1], env));
    case FormulaKind::Not:
      return Formula::lnot(skolemize(syms, f->subs()[0], env, scope));
    case FormulaKind::And:
      return Formula::land(skolemize(syms, f->subs()[0], env, scope),
                           skolemize(syms, f->subs()[1], env, scope));
    case FormulaKind::Or:
      return Formula::lor(skolemize(syms, f->subs()[0], env, scope),
                          skolemize(syms, f->subs()[1], env, scope));
    case FormulaKind::Forall: {
      const TermPtr& v = f->terms()[0];
      TermPtr fresh = Term::variable(syms.fresh_var(), v->var_sort());
      env[v->name()].push_back(fresh);
      scope.push_back(fresh);
      FormulaPtr body = skolemize(syms, f->subs()[0], env, scope);
      scope.pop_back();
      env[v->name()].pop_back();
      return body;
    }
    case FormulaKind::Exists: {
      const TermPtr& v = f->terms()[0];
      std::string sk = syms.fresh_skolem();
      std::vector<std::string> arg_sorts;
      std::vector<TermPtr> args;
      for (const auto& u : scope) {
        arg_sorts.push_back(u->var_sort());
        args.push_back(u);
      }
      syms.extra_funcs[sk] = FunctionDecl{std::move(arg_sorts), v->var_sort()};
      env[v->name()].push_back(Term::apply(sk, std::move(args)));
      FormulaPtr body = skolemize(syms, f->subs()[0], env, scope);
      env[v->name()].pop_back();
      return body;
    }
    default:
      throw Error("skolemize: unexpected node");
  }
}

Literal to_literal(const FormulaPtr& f) {
  bool positive = true;
  const Formula* g = f.get();
  if (g->kind() == FormulaKind::Not) {
    positive = false;
    g = g->subs()[0].get();
  }
  Literal l;
  l.positive = positive;
  if (g->kind() == FormulaKind::Equal) {
    l.is_eq = true;
    l.args = g->terms();
  } else if (g->kind() == FormulaKind::Atom) {
    l.pred = g->rel();
    l.args = g->terms();
  } else {
    throw Error("to_literal: not a literal");
  }
  return l;
}

void cnf(const FormulaPtr& f, std::vector<std::vector<Literal>>& out, size_t max_clauses) {
  switch (f->kind()) {
    case FormulaKind::And:
      cnf(f->subs()[0], out, max_clauses);
      cnf(f->subs()[1], out, max_clauses);
      return;
    case FormulaKind::Or: {
      std::vector<std::vector<Literal>> left, right;
      cnf(f->subs()[0], left, max_clauses);
      cnf(f->subs()[1], right, max_clauses);
      if (left.size() * right.size() > max_clauses)
        throw Error("clausify: CNF expansion too large");
      std::vector<std::vector<Literal>> cross;
      for (const auto& a : left)
        for (const auto& b : right) {
          std::vector<Literal> c = a;
          c.insert(c.end(), b.begin(), b.end());
          cross.push_back(std::move(c));
        }
      out.insert(out.end(), cross.begin(), cross.end());
      return;
    }
    default:
      out.push_back({to_literal(f)});
      return;
  }
}

bool is_tautology(const Clause& c) {
  for (size_t i = 0; i < c.lits.size(); ++i) {
    const Literal& l = c.lits[i];
    if (l.positive && l.is_eq && l.args[0]->equals(*l.args[1])) return true;
    for (size_t j = i + 1; j < c.lits.size(); ++j) {
      const Literal& m = c.lits[j];
      if (l.positive != m.positive && l.is_eq == m.is_eq && l.pred == m.pred &&
          l.args.size() == m.args.size()) {
        bool same = true;
        for (size_t k = 0; k < l.args.size() && same; ++k)
          same = l.args[k]->equals(*m.args[k]);
        if (same) return true;
      }
    }
  }
  return false;
}

void dedupe_lits(Clause& c) {
  std::vector<Literal> out;
  for (const auto& l : c.lits) {
    bool seen = false;
    for (const auto& m : out)
      if (l.equals(m)) { seen = true; break; }
    if (!seen) out.push_back(l);
  }
  c.lits = std::move(out);
}

}  // namespace

std::vector<Clause> clausify(LocalSymbols& syms, const FormulaPtr& f, size_t max_clauses) {
  FormulaPtr n = nnf(f, true);
  Env env;
  std::vector<TermPtr> scope;
  FormulaPtr sk = skolemize(syms, n, env, scope);
  std::vector<std::vector<Literal>> raw;
  cnf(sk, raw, max_clauses);
  std::vector<Clause> out;
  for (auto& lits : raw) {
    Clause c;
    c.rule = "input";
    // The distinguished atom `false` is absurdity: a positive occurrence
    // contributes nothing to its clause, a negative one makes it trivially
    // true.
    bool trivially_true = false;
    for (auto& l : lits) {
      if (!l.is_eq && l.pred == "false") {
        if (!l.positive) { trivially_true = true; break; }
      } else {
        c.lits.push_back(std::move(l));
      }
    }
    if (trivially_true) continue;
    dedupe_lits(c);
    if (!is_tautology(c)) out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Saturation
// ---------------------------------------------------------------------------

namespace {

Clause rename_apart(const Clause& c, LocalSymbols& syms) {
  Subst ren;
  std::function<void(const TermPtr&)> visit = [&](const TermPtr& t) {
    if (t->kind() == TermKind::Variable) {
      if (!ren.count(t->name()))
        ren[t->name()] = Term::variable(syms.fresh_var(), t->var_sort());
    } else {
      for (const auto& a : t->args()) visit(a);
    }
  };
  for (const auto& l : c.lits)
    for (const auto& a : l.args) visit(a);
  Clause out = c;
  for (auto& l : out.lits) l = apply_subst(l, ren);
  return out;
}

// One-way matching: variables of `pat` bind, `inst` is left untouched.
bool match_term(const LocalSymbols& syms, const TermPtr& pat, const TermPtr& inst,
                Subst& s) {
  if (pat->kind() == TermKind::Variable) {
    auto it = s.find(pat->name());
    if (it != s.end()) return it->second->equals(*inst);
    if (!syms.base->subsort(syms.term_sort(inst), pat->var_sort())) return false;
    s[pat->name()] = inst;
    return true;
  }
  if (pat->kind() != inst->kind() || pat->name() != inst->name()) return false;
  if (pat->args().size() != inst->args().size()) return false;
  for (size_t i = 0; i < pat->args().size(); ++i)
    if (!match_term(syms, pat->args()[i], inst->args()[i], s)) return false;
  return true;
}

bool match_lit(const LocalSymbols& syms, const Literal& pat, const Literal& inst, Subst& s) {
  if (pat.positive != inst.positive || pat.is_eq != inst.is_eq || pat.pred != inst.pred)
    return false;
  if (pat.args.size() != inst.args.size()) return false;
  Subst saved = s;
  for (size_t i = 0; i < pat.args.size(); ++i)
    if (!match_term(syms, pat.args[i], inst.args[i], s)) {
      s = saved;
      return false;
    }
  return true;
}

}  // namespace

// C subsumes D: some substitution maps every literal of C onto a literal of D.
bool subsumes(const LocalSymbols& syms, const Clause& c, const Clause& d) {
  if (c.lits.size() > d.lits.size()) return false;
  std::function<bool(size_t, Subst&)> go = [&](size_t i, Subst& s) -> bool {
    if (i == c.lits.size()) return true;
    for (const auto& dl : d.lits) {
      Subst s2 = s;
      if (match_lit(syms, c.lits[i], dl, s2) && go(i + 1, s2)) {
        s = s2;
        return true;
      }
    }
    return false;
  };
  Subst s;
  return go(0, s);
}

namespace {

std::string canon_clause_key(const Clause& c) {
  // Variable names are canonicalized in first-occurrence order, so variants
  // generated in the same literal order collide; the rest is caught by
  // subsumption when a clause is popped.
  std::map<std::string, std::string> ren;
  std::function<std::string(const TermPtr&)> pt = [&](const TermPtr& t) -> std::string {
    if (t->kind() == TermKind::Variable) {
      auto [it, fresh] = ren.try_emplace(t->name(), "?" + std::to_string(ren.size()));
      (void)fresh;
      return it->second;
    }
    if (t->kind() == TermKind::Constant) return t->name();
    std::string out = "(" + t->name();
    for (const auto& a : t->args()) out += " " + pt(a);
    return out + ")";
  };
  std::vector<std::string> parts;
  for (const auto& l : c.lits) {
    std::string p = l.positive ? "+" : "-";
    p += l.is_eq ? "=" : l.pred;
    for (const auto& a : l.args) p += " " + pt(a);
    parts.push_back(std::move(p));
  }
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + "|";
  return key;
}

struct Saturation {
  LocalSymbols& syms;
  const SearchLimits& lim;
  std::vector<Clause> all;
  std::set<std::pair<size_t, int>> passive;  // (weight, id)
  std::vector<int> active;
  std::set<std::string> seen;
  uint64_t generated = 0;
  int empty_id = -1;

  Saturation(LocalSymbols& s, const SearchLimits& l) : syms(s), lim(l) {}

  bool out_of_budget() const {
    return std::chrono::steady_clock::now() > lim.deadline || all.size() > lim.max_clauses;
  }

  // Returns false when the clause is dropped.
  bool add(Clause c) {
    dedupe_lits(c);
    if (is_tautology(c)) return false;
    if (c.lits.size() > 16 || c.weight() > 160) return false;  // monster guard
    std::string key = canon_clause_key(c);
    if (seen.count(key)) return false;
    seen.insert(key);
    c.id = (int)all.size();
    if (c.empty()) empty_id = c.id;
    passive.insert({c.weight(), c.id});
    all.push_back(std::move(c));
    ++generated;
    return true;
  }

  void resolve_pair(const Clause& g, const Clause& a_orig) {
    Clause a = rename_apart(a_orig, syms);
    for (size_t i = 0; i < g.lits.size(); ++i) {
      for (size_t j = 0; j < a.lits.size(); ++j) {
        const Literal& li = g.lits[i];
        const Literal& lj = a.lits[j];
        if (li.positive == lj.positive) continue;
        if (li.is_eq != lj.is_eq || li.pred != lj.pred) continue;
        if (li.args.size() != lj.args.size()) continue;
        int orientations = li.is_eq ? 2 : 1;
        for (int o = 0; o < orientations; ++o) {
          Subst s;
          bool ok = true;
          for (size_t k = 0; k < li.args.size() && ok; ++k) {
            size_t kk = (o == 0) ? k : li.args.size() - 1 - k;
            ok = unify(syms, li.args[k], lj.args[kk], s);
          }
          if (!ok) continue;
          Clause r;
          r.rule = "resolve";
          r.parent1 = g.id;
          r.parent2 = a_orig.id;
          r.lit1 = (int)i;
          r.lit2 = (int)j;
          for (size_t k = 0; k < g.lits.size(); ++k)
            if (k != i) r.lits.push_back(apply_subst(g.lits[k], s));
          for (size_t k = 0; k < a.lits.size(); ++k)
            if (k != j) r.lits.push_back(apply_subst(a.lits[k], s));
          add(std::move(r));
          if (empty_id >= 0) return;
        }
      }
    }
  }

  void factor(const Clause& g) {
    for (size_t i = 0; i < g.lits.size(); ++i)
      for (size_t j = i + 1; j < g.lits.size(); ++j) {
        const Literal& li = g.lits[i];
        const Literal& lj = g.lits[j];
        if (li.positive != lj.positive || li.is_eq != lj.is_eq || li.pred != lj.pred)
          continue;
        if (li.args.size() != lj.args.size()) continue;
        Subst s;
        bool ok = true;
        for (size_t k = 0; k < li.args.size() && ok; ++k)
          ok = unify(syms, li.args[k], lj.args[k], s);
        if (!ok) continue;
        Clause r;
        r.rule = "factor";
        r.parent1 = g.id;
        r.lit1 = (int)i;
        r.lit2 = (int)j;
        for (size_t k = 0; k < g.lits.size(); ++k)
          if (k != j) r.lits.push_back(apply_subst(g.lits[k], s));
        add(std::move(r));
      }
  }

  void equality_resolve(const Clause& g) {
    for (size_t i = 0; i < g.lits.size(); ++i) {
      const Literal& li = g.lits[i];
      if (!li.is_eq || li.positive) continue;
      Subst s;
      if (!unify(syms, li.args[0], li.args[1], s)) continue;
      Clause r;
      r.rule = "eqres";
      r.parent1 = g.id;
      r.lit1 = (int)i;
      for (size_t k = 0; k < g.lits.size(); ++k)
        if (k != i) r.lits.push_back(apply_subst(g.lits[k], s));
      add(std::move(r));
    }
  }

  // All non-variable positions of a term, as paths.
  void term_positions(const TermPtr& t, std::vector<int>& prefix,
                      std::vector<std::pair<std::vector<int>, TermPtr>>& out) {
    if (t->kind() == TermKind::Variable) return;
    out.emplace_back(prefix, t);
    for (size_t i = 0; i < t->args().size(); ++i) {
      prefix.push_back((int)i);
      term_positions(t->args()[i], prefix, out);
      prefix.pop_back();
    }
  }

  TermPtr replace_at(const TermPtr& t, const std::vector<int>& path, size_t depth,
                     const TermPtr& with) {
    if (depth == path.size()) return with;
    std::vector<TermPtr> args = t->args();
    args[path[depth]] = replace_at(args[path[depth]], path, depth + 1, with);
    return Term::apply(t->name(), std::move(args));
  }

  // Paramodulation from the equality literals of `from` into `into`.
  // Shadow predicates are opaque: intensional positions never get rewritten.
  void paramod(const Clause& from_orig, const Clause& into_orig) {
    for (size_t e = 0; e < from_orig.lits.size(); ++e) {
      const Literal& eq = from_orig.lits[e];
      if (!eq.is_eq || !eq.positive) continue;
      Clause from = rename_apart(from_orig, syms);
      const Literal& eqr = from.lits[e];
      for (int orient = 0; orient < 2; ++orient) {
        TermPtr lhs = eqr.args[orient == 0 ? 0 : 1];
        TermPtr rhs = eqr.args[orient == 0 ? 1 : 0];
        if (orient == 1 && lhs->equals(*rhs)) break;
        for (size_t j = 0; j < into_orig.lits.size(); ++j) {
          const Literal& target = into_orig.lits[j];
          if (!target.is_eq && syms.shadow_preds.count(target.pred)) continue;
          for (size_t ai = 0; ai < target.args.size(); ++ai) {
            std::vector<std::pair<std::vector<int>, TermPtr>> positions;
            std::vector<int> prefix;
            term_positions(target.args[ai], prefix, positions);
            for (const auto& [path, sub] : positions) {
              Subst s;
              if (!unify(syms, lhs, sub, s)) continue;
              Clause r;
              r.rule = "paramod";
              r.parent1 = from_orig.id;
              r.parent2 = into_orig.id;
              r.lit1 = (int)e;
              r.lit2 = (int)j;
              r.path.push_back((int)ai);
              r.path.insert(r.path.end(), path.begin(), path.end());
              for (size_t k = 0; k < from.lits.size(); ++k)
                if (k != e) r.lits.push_back(apply_subst(from.lits[k], s));
              for (size_t k = 0; k < into_orig.lits.size(); ++k) {
                if (k != j) {
                  r.lits.push_back(apply_subst(into_orig.lits[k], s));
                } else {
                  Literal t2 = target;
                  t2.args[ai] = replace_at(t2.args[ai], path, 0, rhs);
                  r.lits.push_back(apply_subst(t2, s));
                }
              }
              add(std::move(r));
              if (empty_id >= 0) return;
            }
          }
        }
      }
    }
  }

  SearchResult run(std::vector<Clause> input) {
    for (auto& c : input) {
      c.rule = "input";
      add(std::move(c));
    }
    while (!passive.empty() && empty_id < 0) {
      if (out_of_budget())
        return {SearchVerdict::LimitHit, {}, generated};
      int gid = passive.begin()->second;
      passive.erase(passive.begin());
      Clause g = all[gid];  // copy: `all` grows during generation
      bool redundant = false;
      for (int aid : active) {
        if (subsumes(syms, all[aid], g)) { redundant = true; break; }
      }
      if (redundant) continue;
      for (int aid : active) {
        Clause a = all[aid];  // copy: `all` may reallocate while generating
        resolve_pair(g, a);
        if (empty_id >= 0) break;
        paramod(g, a);
        if (empty_id >= 0) break;
        paramod(a, g);
        if (empty_id >= 0) break;
        if (out_of_budget()) return {SearchVerdict::LimitHit, {}, generated};
      }
      if (empty_id < 0) {
        factor(g);
        equality_resolve(g);
        paramod(g, g);
      }
      active.push_back(gid);
    }
    if (empty_id < 0) return {SearchVerdict::Saturated, {}, generated};

    // Ancestor closure of the empty clause, in id order.
    std::set<int> keep;
    std::vector<int> stack = {empty_id};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      if (id < 0 || keep.count(id)) continue;
      keep.insert(id);
      stack.push_back(all[id].parent1);
      stack.push_back(all[id].parent2);
    }
    SearchResult res;
    res.verdict = SearchVerdict::Refuted;
    res.generated = generated;
    for (int id : keep) res.trace.used.push_back(all[id]);
    std::sort(res.trace.used.begin(), res.trace.used.end(),
              [](const Clause& a, const Clause& b) { return a.id < b.id; });
    return res;
  }
};

}  // namespace

SearchResult refute(LocalSymbols& syms, std::vector<Clause> input, const SearchLimits& lim) {
  Saturation sat(syms, lim);
  return sat.run(std::move(input));
}

bool replay_step(LocalSymbols& syms, const Clause& step, const Clause& p1, const Clause& p2) {
  SearchLimits lim;
  lim.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(5);
  Saturation sat(syms, lim);
  // Re-run just the relevant generation and look for a variant of `step`.
  if (step.rule == "resolve") sat.resolve_pair(p1, p2);
  else if (step.rule == "factor") sat.factor(p1);
  else if (step.rule == "eqres") sat.equality_resolve(p1);
  else if (step.rule == "paramod") sat.paramod(p1, p2);
  else return false;
  for (const auto& c : sat.all) {
    if (c.lits.size() != step.lits.size()) continue;
    if (subsumes(syms, c, step) && subsumes(syms, step, c)) return true;
  }
  return false;
}

std::string print_clause(const Clause& c) {
  if (c.lits.empty()) return "[]";
  std::string out;
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += " | ";
    const Literal& l = c.lits[i];
    if (!l.positive) out += "~";
    if (l.is_eq) {
      out += "(= " + print_term(l.args[0]) + " " + print_term(l.args[1]) + ")";
    } else if (l.args.empty()) {
      out += l.pred;
    } else {
      out += "(" + l.pred;
      for (const auto& a : l.args) out += " " + print_term(a);
      out += ")";
    }
  }
  return out;
}

}  // namespace cfl
