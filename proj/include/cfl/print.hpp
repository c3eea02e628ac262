#pragma once

#include <string>

#include "cfl/ast.hpp"
#include "cfl/problem.hpp"

namespace cfl {

/// Canonical prefix notation. parse(print(f)) is alpha-equivalent to f.
std::string print_term(const TermPtr& t);
std::string print_formula(const FormulaPtr& f);

/// Problem-file form; reparsing yields a structurally identical Problem.
/// Only the symbols the problem declares on top of the builtins are printed.
std::string print_problem(const Problem& p);

}  // namespace cfl
