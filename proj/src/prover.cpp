#include "cfl/prover.hpp"

#include <algorithm>
#include <functional>

#include "cfl/errors.hpp"
#include "cfl/print.hpp"

namespace cfl {

const char* to_string(ProofStatus s) {
  return s == ProofStatus::Proved ? "Proved" : "NotProvedWithinBudget";
}

// ---------------------------------------------------------------------------
// Shadowing
// ---------------------------------------------------------------------------

namespace {

// Free variables of f in first-occurrence order.
void ordered_free_vars(const FormulaPtr& f, std::vector<TermPtr>& out) {
  std::set<std::string> seen;
  std::function<void(const TermPtr&, std::set<std::string>&)> visit_term =
      [&](const TermPtr& t, std::set<std::string>& bound) {
        if (t->kind() == TermKind::Variable) {
          if (!bound.count(t->name()) && !seen.count(t->name())) {
            seen.insert(t->name());
            out.push_back(t);
          }
          return;
        }
        for (const auto& a : t->args()) visit_term(a, bound);
      };
  std::function<void(const FormulaPtr&, std::set<std::string>)> visit =
      [&](const FormulaPtr& g, std::set<std::string> bound) {
        if (g->kind() == FormulaKind::Forall || g->kind() == FormulaKind::Exists) {
          bound.insert(g->terms()[0]->name());
          visit(g->subs()[0], bound);
          return;
        }
        for (const auto& t : g->terms()) visit_term(t, bound);
        for (const auto& s : g->subs()) visit(s, bound);
      };
  visit(f, {});
}

// Key under which alpha-equivalent occurrences agree: free variables are
// replaced by positional placeholders, bound ones alpha-normalized.
std::string shadow_key(const FormulaPtr& f, const std::vector<TermPtr>& frees) {
  Subst placeholders;
  for (size_t i = 0; i < frees.size(); ++i)
    placeholders[frees[i]->name()] =
        Term::variable("!" + std::to_string(i), frees[i]->var_sort());
  std::function<FormulaPtr(const FormulaPtr&)> replace = [&](const FormulaPtr& g) -> FormulaPtr {
    // Free-variable replacement never captures: placeholder names are not
    // legal binder names.
    std::vector<TermPtr> terms;
    for (const auto& t : g->terms()) terms.push_back(apply_subst(t, placeholders));
    std::vector<FormulaPtr> subs;
    for (const auto& s : g->subs()) subs.push_back(replace(s));
    switch (g->kind()) {
      case FormulaKind::Atom: return Formula::atom(g->rel(), terms);
      case FormulaKind::Equal: return Formula::equal(terms[0], terms[1]);
      case FormulaKind::Not: return Formula::lnot(subs[0]);
      case FormulaKind::And: return Formula::land(subs[0], subs[1]);
      case FormulaKind::Or: return Formula::lor(subs[0], subs[1]);
      case FormulaKind::Implies: return Formula::implies(subs[0], subs[1]);
      case FormulaKind::Iff: return Formula::iff(subs[0], subs[1]);
      case FormulaKind::Forall: return Formula::forall(g->terms()[0], subs[0]);
      case FormulaKind::Exists: return Formula::exists(g->terms()[0], subs[0]);
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
    }
    throw Error("shadow_key: unreachable");
  };
  return print_formula(alpha_normalize(replace(f)));
}

FormulaPtr shadow_rec(const SortedSignature& sig, const FormulaPtr& f, ShadowTable& table) {
  if (is_intensional(f->kind())) {
    std::vector<TermPtr> frees;
    ordered_free_vars(f, frees);
    std::string key = shadow_key(f, frees);
    auto it = table.pred_by_key.find(key);
    std::string pred;
    if (it != table.pred_by_key.end()) {
      pred = it->second;
    } else {
      pred = key;  // the canonical print itself names the atom
      table.pred_by_key[key] = pred;
      std::vector<std::string> sorts;
      for (const auto& v : frees) sorts.push_back(v->var_sort());
      table.rels[pred] = std::move(sorts);
    }
    std::vector<TermPtr> args(frees.begin(), frees.end());
    return Formula::atom(pred, std::move(args));
  }
  std::vector<FormulaPtr> subs;
  bool changed = false;
  for (const auto& s : f->subs()) {
    subs.push_back(shadow_rec(sig, s, table));
    changed = changed || subs.back() != s;
  }
  if (!changed) return f;
  switch (f->kind()) {
    case FormulaKind::Not: return Formula::lnot(subs[0]);
    case FormulaKind::And: return Formula::land(subs[0], subs[1]);
    case FormulaKind::Or: return Formula::lor(subs[0], subs[1]);
    case FormulaKind::Implies: return Formula::implies(subs[0], subs[1]);
    case FormulaKind::Iff: return Formula::iff(subs[0], subs[1]);
    case FormulaKind::Forall: return Formula::forall(f->terms()[0], subs[0]);
    case FormulaKind::Exists: return Formula::exists(f->terms()[0], subs[0]);
    default: throw Error("shadow_rec: unreachable");
  }
}

}  // namespace

FormulaPtr shadow(const SortedSignature& sig, const FormulaPtr& f, ShadowTable& table) {
  return shadow_rec(sig, f, table);
}

FormulaPtr shadow(const SortedSignature& sig, const FormulaPtr& f) {
  ShadowTable table;
  return shadow_rec(sig, f, table);
}

// ---------------------------------------------------------------------------
// Saturation under the modal schemata
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

int64_t ms_left(Clock::time_point deadline) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now())
      .count();
}

// Ground order over Moment constants, read off the prior(...) atoms of the
// current formula set. t1 <= t2 is its reflexive-transitive closure.
struct MomentOrder {
  std::set<std::pair<std::string, std::string>> edges;

  void collect(const std::vector<FormulaPtr>& set) {
    for (const auto& f : set)
      if (f->kind() == FormulaKind::Atom && f->rel() == "prior" &&
          f->terms().size() == 2 && f->terms()[0]->kind() == TermKind::Constant &&
          f->terms()[1]->kind() == TermKind::Constant)
        edges.insert({f->terms()[0]->name(), f->terms()[1]->name()});
  }

  bool strictly_before(const std::string& a, const std::string& b) const {
    if (a == b) return false;
    std::set<std::string> seen{a};
    std::vector<std::string> stack{a};
    while (!stack.empty()) {
      std::string cur = stack.back();
      stack.pop_back();
      for (const auto& [u, v] : edges)
        if (u == cur) {
          if (v == b) return true;
          if (seen.insert(v).second) stack.push_back(v);
        }
    }
    return false;
  }

  bool before_eq(const TermPtr& a, const TermPtr& b) const {
    if (a->equals(*b)) return true;
    if (a->kind() != TermKind::Constant || b->kind() != TermKind::Constant) return false;
    return strictly_before(a->name(), b->name());
  }
};

struct Saturator {
  const SortedSignature& sig;
  Clock::time_point deadline;
  const Budget& budget;

  std::vector<FormulaPtr> set;
  std::set<std::string> keys;
  std::vector<SchemaStep> steps;

  Saturator(const SortedSignature& s, Clock::time_point d, const Budget& b)
      : sig(s), deadline(d), budget(b) {}

  static std::string key_of(const FormulaPtr& f) {
    return print_formula(alpha_normalize(f));
  }

  bool contains(const FormulaPtr& f) const { return keys.count(key_of(f)) > 0; }

  bool push(const FormulaPtr& f, SchemaStep step) {
    std::string k = key_of(f);
    if (!keys.insert(k).second) return false;
    set.push_back(f);
    step.conclusion = f;
    steps.push_back(std::move(step));
    return true;
  }

  // Every K/B subformula anywhere in f, at any polarity.
  static void collect_kb_targets(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
    if (f->kind() == FormulaKind::Knows || f->kind() == FormulaKind::Believes)
      out.push_back(f);
    for (const auto& s : f->subs()) collect_kb_targets(s, out);
  }

  void saturate(const FormulaPtr& goal);
  ProofOutcome recursive_prove(const std::vector<FormulaPtr>& inner_gamma,
                               const FormulaPtr& inner_goal, int depth_left);
};

ProofOutcome prove_impl(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
                        const FormulaPtr& goal, const Budget& budget,
                        Clock::time_point deadline);

ProofOutcome Saturator::recursive_prove(const std::vector<FormulaPtr>& inner_gamma,
                                        const FormulaPtr& inner_goal, int depth_left) {
  Budget inner = budget;
  inner.depth = depth_left;
  int64_t left = ms_left(deadline);
  inner.wall_ms = std::max<int64_t>(1, left / 2);  // halves per nesting level
  Clock::time_point inner_deadline = Clock::now() + std::chrono::milliseconds(inner.wall_ms);
  return prove_impl(sig, inner_gamma, inner_goal, inner, inner_deadline);
}

void Saturator::saturate(const FormulaPtr& goal) {
  for (int iter = 0; iter < budget.depth; ++iter) {
    if (ms_left(deadline) < 2) return;
    size_t before = set.size();
    std::vector<FormulaPtr> snapshot = set;

    MomentOrder order;
    order.collect(snapshot);

    std::vector<std::string> agents = sig.constants_of_sort("Agent");

    for (const auto& f : snapshot) {
      switch (f->kind()) {
        case FormulaKind::Knows:
          // R_4: knowledge of a proposition yields the proposition.
          push(f->subs()[0], {"R_4", {f}, nullptr, nullptr});
          break;
        case FormulaKind::Perceives:
          // Perception yields knowledge.
          push(Formula::knows(f->terms()[0], f->terms()[1], f->subs()[0]),
               {"P_elim", {f}, nullptr, nullptr});
          break;
        case FormulaKind::Common:
          // Common knowledge yields knowledge for every declared agent.
          for (const auto& a : agents)
            push(Formula::knows(Term::constant(a), f->terms()[0], f->subs()[0]),
                 {"C_elim", {f}, nullptr, nullptr});
          break;
        case FormulaKind::Intends: {
          // R_13: an intention at t is perceived at any declared t' > t.
          const TermPtr& t = f->terms()[1];
          if (t->kind() != TermKind::Constant) break;
          for (const auto& [u, v] : order.edges) {
            (void)u;
            if (order.strictly_before(t->name(), v))
              push(Formula::perceives(f->terms()[0], Term::constant(v), f->subs()[0]),
                   {"R_13", {f}, nullptr, nullptr});
          }
          break;
        }
        case FormulaKind::Believes: {
          // R_14: believed condition + believed obligation + the obligation
          // itself yield a known intention.
          const FormulaPtr& phi = f->subs()[0];
          for (const auto& g : snapshot) {
            if (g->kind() != FormulaKind::Believes) continue;
            if (!g->terms()[0]->equals(*f->terms()[0])) continue;
            if (!g->terms()[1]->equals(*f->terms()[1])) continue;
            const FormulaPtr& body = g->subs()[0];
            if (body->kind() != FormulaKind::Ought) continue;
            if (!body->terms()[0]->equals(*f->terms()[0])) continue;
            if (!body->terms()[1]->equals(*f->terms()[1])) continue;
            if (!alpha_equal(body->subs()[0], phi)) continue;
            FormulaPtr conclusion = Formula::knows(
                f->terms()[0], f->terms()[1],
                Formula::intends(f->terms()[0], f->terms()[1], body->subs()[1]));
            if (contains(conclusion)) continue;
            if (contains(body)) {
              push(conclusion, {"R_14", {f, g, body}, nullptr, nullptr});
            } else if (ms_left(deadline) > 5 && budget.depth - 1 > 0) {
              ProofOutcome sub = recursive_prove(snapshot, body, budget.depth - 1);
              if (sub.status == ProofStatus::Proved)
                push(conclusion, {"R_14", {f, g, body}, nullptr,
                                  std::make_shared<ProofOutcome>(std::move(sub))});
            }
          }
          break;
        }
        default:
          break;
      }

      // R_cf2 / R_cf4: counterfactual elimination in any uniform context.
      auto [ctx, body] = extract_context(f);
      if (body->kind() == FormulaKind::Counterfactual) {
        const FormulaPtr& ante = body->subs()[0];
        for (const auto& g : snapshot) {
          auto [gctx, gbody] = extract_context(g);
          if (gctx == ctx && alpha_equal(gbody, ante)) {
            push(wrap_context(ctx, body->subs()[1]),
                 {ctx.empty() ? "R_cf2" : "R_cf4", {f, g}, nullptr, nullptr});
            break;
          }
        }
      }
    }

    // R_K / R_B: close goal-relevant K/B positions under the inner theory at
    // non-decreasing times, with a divided budget per nesting level.
    std::vector<FormulaPtr> targets;
    collect_kb_targets(goal, targets);
    for (const auto& f : snapshot) collect_kb_targets(f, targets);
    for (const auto& m : targets) {
      if (ms_left(deadline) < 5 || budget.depth - 1 < 0) break;
      if (!free_vars(m).empty()) continue;  // only closed positions are seeded
      if (contains(m)) continue;
      std::vector<FormulaPtr> inner_gamma;
      std::vector<FormulaPtr> premises;
      for (const auto& g : set) {
        if (g->kind() != m->kind()) continue;
        if (!g->terms()[0]->equals(*m->terms()[0])) continue;
        if (!order.before_eq(g->terms()[1], m->terms()[1])) continue;
        inner_gamma.push_back(g->subs()[0]);
        premises.push_back(g);
      }
      if (inner_gamma.empty()) continue;
      ProofOutcome sub = recursive_prove(inner_gamma, m->subs()[0], budget.depth - 1);
      if (sub.status == ProofStatus::Proved)
        push(m, {m->kind() == FormulaKind::Knows ? "R_K" : "R_B", premises, nullptr,
                 std::make_shared<ProofOutcome>(std::move(sub))});
    }

    if (set.size() == before) return;  // fixpoint
  }
}

ProofOutcome prove_impl(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
                        const FormulaPtr& goal, const Budget& budget,
                        Clock::time_point deadline) {
  auto start = Clock::now();
  ProofOutcome out;

  Saturator sat(sig, deadline, budget);
  for (const auto& f : gamma) {
    std::string k = Saturator::key_of(f);
    if (sat.keys.insert(k).second) sat.set.push_back(f);
  }
  sat.saturate(goal);
  out.steps = sat.steps;

  // Shadow, clausify, refute.
  ShadowTable table;
  std::vector<FormulaPtr> shadowed;
  shadowed.reserve(sat.set.size());
  for (const auto& f : sat.set) shadowed.push_back(shadow_rec(sig, f, table));
  FormulaPtr shadowed_goal = shadow_rec(sig, goal, table);

  LocalSymbols syms;
  syms.base = &sig;
  for (const auto& [pred, sorts] : table.rels) {
    syms.extra_rels[pred] = sorts;
    syms.shadow_preds.insert(pred);
  }

  std::vector<Clause> input;
  try {
    for (const auto& f : shadowed) {
      auto cs = clausify(syms, f);
      input.insert(input.end(), cs.begin(), cs.end());
    }
    auto cs = clausify(syms, Formula::lnot(shadowed_goal));
    input.insert(input.end(), cs.begin(), cs.end());
  } catch (const Error&) {
    // CNF expansion overflow: report failure within budget, not an error.
    out.status = ProofStatus::NotProvedWithinBudget;
    out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    return out;
  }

  SearchLimits lim;
  lim.deadline = deadline;
  lim.max_clauses = budget.max_clauses;
  SearchResult res = refute(syms, std::move(input), lim);
  out.clauses_generated = res.generated;
  if (res.verdict == SearchVerdict::Refuted) {
    out.status = ProofStatus::Proved;
    out.refutation = std::move(res.trace);
  }
  out.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

}  // namespace

ProofOutcome prove(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
                   const FormulaPtr& goal, const Budget& budget) {
  for (const auto& f : gamma) check_sorted(sig, f);
  check_sorted(sig, goal);
  return prove_unchecked(sig, gamma, goal, budget);
}

ProofOutcome prove_unchecked(const SortedSignature& sig,
                             const std::vector<FormulaPtr>& gamma, const FormulaPtr& goal,
                             const Budget& budget) {
  auto deadline = Clock::now() + std::chrono::milliseconds(budget.wall_ms);
  return prove_impl(sig, gamma, goal, budget, deadline);
}

ConsistencyVerdict consistent(const SortedSignature& sig,
                              const std::vector<FormulaPtr>& phis, int64_t delta_ms,
                              int depth) {
  Budget b;
  b.wall_ms = delta_ms;
  b.depth = depth;
  auto start = Clock::now();
  ProofOutcome proof = prove(sig, phis, Formula::falsum(), b);
  ConsistencyVerdict v;
  v.delta_ms = delta_ms;
  v.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (proof.status == ProofStatus::Proved) {
    v.value = ConsistencyVerdict::Inconsistent;
    v.refutation = std::make_shared<ProofOutcome>(std::move(proof));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Justification replay
// ---------------------------------------------------------------------------

namespace {

bool replay_impl(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
                 const FormulaPtr& goal, const ProofOutcome& outcome);

// Checks one schema step against the running set; returns false on any
// mismatch with the schema's shape or side conditions.
bool replay_schema_step(const SortedSignature& sig, const SchemaStep& st,
                        const std::vector<FormulaPtr>& set,
                        const std::set<std::string>& keys) {
  auto in_set = [&](const FormulaPtr& f) {
    return keys.count(print_formula(alpha_normalize(f))) > 0;
  };
  for (const auto& p : st.premises)
    if (!in_set(p)) return false;

  MomentOrder order;
  order.collect(set);

  const FormulaPtr& c = st.conclusion;
  if (st.schema == "R_4") {
    const FormulaPtr& p = st.premises.at(0);
    return p->kind() == FormulaKind::Knows && alpha_equal(p->subs()[0], c);
  }
  if (st.schema == "P_elim") {
    const FormulaPtr& p = st.premises.at(0);
    return p->kind() == FormulaKind::Perceives && c->kind() == FormulaKind::Knows &&
           c->terms()[0]->equals(*p->terms()[0]) && c->terms()[1]->equals(*p->terms()[1]) &&
           alpha_equal(c->subs()[0], p->subs()[0]);
  }
  if (st.schema == "C_elim") {
    const FormulaPtr& p = st.premises.at(0);
    return p->kind() == FormulaKind::Common && c->kind() == FormulaKind::Knows &&
           c->terms()[1]->equals(*p->terms()[0]) && alpha_equal(c->subs()[0], p->subs()[0]);
  }
  if (st.schema == "R_13") {
    const FormulaPtr& p = st.premises.at(0);
    if (p->kind() != FormulaKind::Intends || c->kind() != FormulaKind::Perceives)
      return false;
    if (!c->terms()[0]->equals(*p->terms()[0]) || !alpha_equal(c->subs()[0], p->subs()[0]))
      return false;
    return p->terms()[1]->kind() == TermKind::Constant &&
           c->terms()[1]->kind() == TermKind::Constant &&
           order.strictly_before(p->terms()[1]->name(), c->terms()[1]->name());
  }
  if (st.schema == "R_14") {
    if (st.premises.size() != 3) return false;
    const FormulaPtr& bphi = st.premises[0];
    const FormulaPtr& bought = st.premises[1];
    const FormulaPtr& o = st.premises[2];
    if (bphi->kind() != FormulaKind::Believes || bought->kind() != FormulaKind::Believes ||
        o->kind() != FormulaKind::Ought)
      return false;
    if (!alpha_equal(bought->subs()[0], o)) return false;
    if (!alpha_equal(o->subs()[0], bphi->subs()[0])) return false;
    FormulaPtr expect = Formula::knows(
        bphi->terms()[0], bphi->terms()[1],
        Formula::intends(bphi->terms()[0], bphi->terms()[1], o->subs()[1]));
    if (!alpha_equal(expect, c)) return false;
    // The objective obligation premise may rest on a recursive proof.
    if (!in_set(o)) {
      if (!st.inner) return false;
      if (!replay_impl(sig, set, o, *st.inner)) return false;
    }
    return true;
  }
  if (st.schema == "R_cf2" || st.schema == "R_cf4") {
    if (st.premises.size() != 2) return false;
    auto [cctx, cbody] = extract_context(st.premises[0]);
    auto [actx, abody] = extract_context(st.premises[1]);
    if (cbody->kind() != FormulaKind::Counterfactual) return false;
    if (!(cctx == actx) || !alpha_equal(abody, cbody->subs()[0])) return false;
    return alpha_equal(c, wrap_context(cctx, cbody->subs()[1]));
  }
  if (st.schema == "R_K" || st.schema == "R_B") {
    FormulaKind want = st.schema == "R_K" ? FormulaKind::Knows : FormulaKind::Believes;
    if (c->kind() != want || !st.inner) return false;
    std::vector<FormulaPtr> inner_gamma;
    for (const auto& p : st.premises) {
      if (p->kind() != want) return false;
      if (!p->terms()[0]->equals(*c->terms()[0])) return false;
      if (!order.before_eq(p->terms()[1], c->terms()[1])) return false;
      inner_gamma.push_back(p->subs()[0]);
    }
    return replay_impl(sig, inner_gamma, c->subs()[0], *st.inner);
  }
  return false;
}

bool replay_impl(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
                 const FormulaPtr& goal, const ProofOutcome& outcome) {
  if (outcome.status != ProofStatus::Proved) return false;

  std::vector<FormulaPtr> set;
  std::set<std::string> keys;
  for (const auto& f : gamma) {
    std::string k = print_formula(alpha_normalize(f));
    if (keys.insert(k).second) set.push_back(f);
  }
  for (const auto& st : outcome.steps) {
    if (!replay_schema_step(sig, st, set, keys)) return false;
    std::string k = print_formula(alpha_normalize(st.conclusion));
    if (keys.insert(k).second) set.push_back(st.conclusion);
  }

  // Recompute the shadowed input clauses; every input clause of the trace
  // must be one of them, and every derived clause must re-derive.
  ShadowTable table;
  LocalSymbols syms;
  syms.base = &sig;
  std::vector<Clause> inputs;
  {
    std::vector<FormulaPtr> shadowed;
    for (const auto& f : set) shadowed.push_back(shadow(sig, f, table));
    FormulaPtr g = shadow(sig, goal, table);
    for (const auto& [pred, sorts] : table.rels) {
      syms.extra_rels[pred] = sorts;
      syms.shadow_preds.insert(pred);
    }
    try {
      for (const auto& f : shadowed) {
        auto cs = clausify(syms, f);
        inputs.insert(inputs.end(), cs.begin(), cs.end());
      }
      auto cs = clausify(syms, Formula::lnot(g));
      inputs.insert(inputs.end(), cs.begin(), cs.end());
    } catch (const Error&) {
      return false;
    }
  }

  std::map<int, const Clause*> by_id;
  bool saw_empty = false;
  for (const auto& c : outcome.refutation.used) {
    if (c.rule == "input") {
      bool found = false;
      for (const auto& in : inputs) {
        if (in.lits.size() != c.lits.size()) continue;
        if (subsumes(syms, in, c) && subsumes(syms, c, in)) { found = true; break; }
      }
      if (!found) return false;
    } else {
      auto p1 = by_id.find(c.parent1);
      if (p1 == by_id.end()) return false;
      const Clause* p2 = nullptr;
      if (c.parent2 >= 0) {
        auto it = by_id.find(c.parent2);
        if (it == by_id.end()) return false;
        p2 = it->second;
      }
      if (!replay_step(syms, c, *p1->second, p2 ? *p2 : *p1->second)) return false;
    }
    by_id[c.id] = &c;
    if (c.empty()) saw_empty = true;
  }
  return saw_empty;
}

}  // namespace

bool replay(const SortedSignature& sig, const std::vector<FormulaPtr>& gamma,
            const FormulaPtr& goal, const ProofOutcome& outcome) {
  return replay_impl(sig, gamma, goal, outcome);
}

}  // namespace cfl
