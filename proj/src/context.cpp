#include "cfl/context.hpp"

#include "cfl/errors.hpp"
#include "cfl/print.hpp"

namespace cfl {

bool ModalContext::equals(const ModalContext& o) const {
  if (entries.size() != o.entries.size()) return false;
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].op != o.entries[i].op) return false;
    if (!entries[i].agent->equals(*o.entries[i].agent)) return false;
    if (!entries[i].time->equals(*o.entries[i].time)) return false;
  }
  return true;
}

std::pair<ModalContext, FormulaPtr> extract_context(const FormulaPtr& f) {
  ModalContext ctx;
  FormulaPtr cur = f;
  while (is_context_operator(cur->kind())) {
    ctx.entries.push_back({cur->kind(), cur->terms()[0], cur->terms()[1]});
    cur = cur->subs()[0];
  }
  return {std::move(ctx), cur};
}

namespace {

ModalContext normalize_ctx(const ModalContext& ctx) {
  // Agent/time terms are compared after alpha-normalization; wrapping in a
  // throwaway atom reuses the formula-level normalizer.
  ModalContext out;
  for (const auto& e : ctx.entries) {
    FormulaPtr probe = alpha_normalize(Formula::atom("?probe", {e.agent, e.time}));
    out.entries.push_back({e.op, probe->terms()[0], probe->terms()[1]});
  }
  return out;
}

}  // namespace

namespace {

// A member has context ctx when ctx is a prefix of its K/B/D prefix; the
// empty context selects exactly the members without a modal prefix.
bool has_context(const FormulaPtr& f, const ModalContext& want, FormulaPtr* body_out) {
  auto [got, body] = extract_context(f);
  if (want.empty()) {
    if (!got.empty()) return false;
    if (body_out) *body_out = f;
    return true;
  }
  if (got.size() < want.size()) return false;
  ModalContext prefix;
  prefix.entries.assign(got.entries.begin(), got.entries.begin() + (long)want.size());
  if (!(normalize_ctx(prefix) == normalize_ctx(want))) return false;
  if (body_out) {
    FormulaPtr cur = f;
    for (size_t i = 0; i < want.size(); ++i) cur = cur->subs()[0];
    *body_out = cur;
  }
  return true;
}

}  // namespace

std::vector<size_t> project_context_indices(const std::vector<FormulaPtr>& gamma,
                                            const ModalContext& ctx) {
  std::vector<size_t> out;
  for (size_t i = 0; i < gamma.size(); ++i)
    if (has_context(gamma[i], ctx, nullptr)) out.push_back(i);
  return out;
}

std::vector<FormulaPtr> project_context(const std::vector<FormulaPtr>& gamma,
                                        const ModalContext& ctx) {
  std::vector<FormulaPtr> out;
  for (const auto& g : gamma) {
    FormulaPtr body;
    if (has_context(g, ctx, &body)) out.push_back(body);
  }
  return out;
}

FormulaPtr wrap_context(const ModalContext& ctx, FormulaPtr body) {
  for (auto it = ctx.entries.rbegin(); it != ctx.entries.rend(); ++it) {
    switch (it->op) {
      case FormulaKind::Knows: body = Formula::knows(it->agent, it->time, body); break;
      case FormulaKind::Believes: body = Formula::believes(it->agent, it->time, body); break;
      case FormulaKind::Desires: body = Formula::desires(it->agent, it->time, body); break;
      default: throw Error("wrap_context: not a context operator");
    }
  }
  return body;
}

std::string print_context(const ModalContext& ctx) {
  std::string out = "(";
  for (size_t i = 0; i < ctx.entries.size(); ++i) {
    const auto& e = ctx.entries[i];
    const char* tag = e.op == FormulaKind::Knows      ? "K"
                      : e.op == FormulaKind::Believes ? "B"
                                                      : "D";
    if (i) out += " ";
    out += "(" + std::string(tag) + " " + print_term(e.agent) + " " + print_term(e.time) + ")";
  }
  return out + ")";
}

}  // namespace cfl
