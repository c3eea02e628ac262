#pragma once

#include <string>
#include <vector>

#include "cfl/ast.hpp"
#include "cfl/context.hpp"
#include "cfl/sorts.hpp"

namespace cfl {

enum class QueryKind { Entail, Cf, CfInContext };

struct Query {
  QueryKind kind;
  // Entail: {goal}; Cf and CfInContext: {antecedent, consequent}.
  std::vector<FormulaPtr> formulas;
  ModalContext ctx;  // CfInContext only
};

// Optional (dde ...) block of a problem file: the dilemma's cast plus the
// utility table over declared fluent constants.
struct DdeSpec {
  bool present = false;
  std::string agent, moment, situation, action_type;
  std::vector<std::pair<TermPtr, double>> mu;  // declaration order
};

struct Problem {
  std::string name;
  SortedSignature signature;
  std::vector<FormulaPtr> assumptions;  // Gamma
  std::vector<Query> queries;
  DdeSpec dde;
};

}  // namespace cfl
