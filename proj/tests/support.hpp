#pragma once

#include <random>
#include <string>
#include <vector>

#include "cfl/ast.hpp"
#include "cfl/parse.hpp"
#include "cfl/sorts.hpp"

namespace testsupport {

// Signature with the six propositional atoms the random generator draws from.
inline cfl::SortedSignature prop_signature() {
  cfl::SortedSignature sig;
  for (const char* a : {"p", "q", "r", "s", "u", "v"}) sig.declare_relation(a, {});
  return sig;
}

inline cfl::FormulaPtr pf(const std::string& text, const cfl::SortedSignature& sig) {
  return cfl::parse_formula_text(text, sig);
}

// Random propositional formula: depth <= 4, connectives not/and/or/implies,
// atom pool of 6. Seeds are printed by failing tests for replay.
class FormulaGen {
public:
  explicit FormulaGen(uint64_t seed) : rng_(seed) {}

  cfl::FormulaPtr formula(int max_depth = 4) {
    if (max_depth == 0 || pick(4) == 0) return atom();
    switch (pick(4)) {
      case 0: return cfl::Formula::lnot(formula(max_depth - 1));
      case 1: return cfl::Formula::land(formula(max_depth - 1), formula(max_depth - 1));
      case 2: return cfl::Formula::lor(formula(max_depth - 1), formula(max_depth - 1));
      default:
        return cfl::Formula::implies(formula(max_depth - 1), formula(max_depth - 1));
    }
  }

  std::vector<cfl::FormulaPtr> gamma(size_t max_size, int max_depth = 3) {
    std::vector<cfl::FormulaPtr> out;
    size_t n = pick((uint32_t)max_size + 1);
    for (size_t i = 0; i < n; ++i) out.push_back(formula(max_depth));
    return out;
  }

  uint32_t pick(uint32_t n) { return std::uniform_int_distribution<uint32_t>(0, n - 1)(rng_); }

private:
  cfl::FormulaPtr atom() {
    static const char* pool[] = {"p", "q", "r", "s", "u", "v"};
    return cfl::Formula::atom(pool[pick(6)]);
  }

  std::mt19937_64 rng_;
};

}  // namespace testsupport
