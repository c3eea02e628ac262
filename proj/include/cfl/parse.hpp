#pragma once

#include <string>

#include "cfl/problem.hpp"

namespace cfl {

/// Parses a whole problem file; every formula is sort-checked against the
/// file's signature. Throws ParseError / SortError.
Problem parse_problem(const std::string& text);

Problem parse_problem_file(const std::string& path);

/// Parses a single formula against an existing signature (tests, CLI).
FormulaPtr parse_formula_text(const std::string& text, const SortedSignature& sig);

}  // namespace cfl
