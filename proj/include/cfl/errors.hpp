#pragma once

#include <stdexcept>
#include <string>

namespace cfl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Concrete-syntax error with source position (1-based).
struct ParseError : Error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", col " + std::to_string(col_) + ")"),
        line(line_), col(col_) {}
};

/// Well-sortedness violation; names the offending symbol.
struct SortError : Error {
  using Error::Error;
};

}  // namespace cfl
