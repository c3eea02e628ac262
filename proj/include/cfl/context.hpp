#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cfl/ast.hpp"

namespace cfl {

// Ordered K/B/D prefix of a formula: one entry per operator, outermost first.
struct ModalContext {
  struct Entry {
    FormulaKind op;  // Knows | Believes | Desires
    TermPtr agent;
    TermPtr time;
  };
  std::vector<Entry> entries;

  bool empty() const { return entries.empty(); }
  size_t size() const { return entries.size(); }
  bool equals(const ModalContext& o) const;
};

inline bool operator==(const ModalContext& a, const ModalContext& b) { return a.equals(b); }

/// Splits f into its maximal K/B/D prefix and the remaining body. Operators
/// other than K/B/D terminate the prefix.
std::pair<ModalContext, FormulaPtr> extract_context(const FormulaPtr& f);

/// Stripped bodies of exactly those members of gamma whose extracted context
/// equals ctx (term comparison after alpha-normalization). With empty ctx,
/// the members without a modal prefix, unchanged.
std::vector<FormulaPtr> project_context(const std::vector<FormulaPtr>& gamma,
                                        const ModalContext& ctx);

/// Indices into gamma of the members project_context would select.
std::vector<size_t> project_context_indices(const std::vector<FormulaPtr>& gamma,
                                            const ModalContext& ctx);

/// Re-wraps a body in the context, outermost entry first.
FormulaPtr wrap_context(const ModalContext& ctx, FormulaPtr body);

/// Grammar form, e.g. "((B a t1) (K b t2))"; "()" when empty.
std::string print_context(const ModalContext& ctx);

}  // namespace cfl
