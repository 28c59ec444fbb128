#ifndef MONRES_ERRORS_HPP
#define MONRES_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace monres {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operands live in polynomial rings with different variable counts.
struct DimensionError : Error {
  using Error::Error;
};

/// A precondition on the mathematical input is violated (non-divisible
/// quotient, classification of the unit ideal, ...).
struct DomainError : Error {
  using Error::Error;
};

/// A configured cap would be exceeded (2^q face blowup, recursion depth).
struct ResourceError : Error {
  using Error::Error;
};

/// Checked integer arithmetic overflowed. Exactness is the contract, so
/// this aborts the computation instead of wrapping.
struct OverflowError : Error {
  using Error::Error;
};

/// Malformed textual or JSON input. Carries a 1-based source position.
struct ParseError : Error {
  int line;
  int column;
  ParseError(const std::string& what, int line_, int column_)
      : Error(what + " (line " + std::to_string(line_) + ", column " +
              std::to_string(column_) + ")"),
        line(line_),
        column(column_) {}
};

}  // namespace monres

#endif
