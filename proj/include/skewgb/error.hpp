#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewgb {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Mixing scalars from different coefficient fields.
class field_mismatch_error : public error {
public:
  using error::error;
};

// Inverting or dividing by the zero scalar.
class division_by_zero_error : public error {
public:
  using error::error;
};

// Combining polynomials or vectors over different presentations.
class algebra_mismatch_error : public error {
public:
  using error::error;
};

// An operation that needs a leading term was handed the zero polynomial.
class zero_polynomial_error : public error {
public:
  using error::error;
};

// Malformed input data: bad presentations, bad permutations, rank mismatches.
class invalid_argument_error : public error {
public:
  using error::error;
};

// Groebner machinery invoked on a presentation whose overlap check has not
// passed (or failed).
class inconsistent_presentation_error : public error {
public:
  using error::error;
};

// An operation required a verified Groebner basis but got an unverified one.
class unverified_basis_error : public error {
public:
  using error::error;
};

// Text input rejected by the expression or presentation-file parser.
class parse_error : public error {
public:
  parse_error(const std::string& message, std::size_t line, std::size_t column)
      : error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

// A provable invariant failed at run time. Seeing this means a bug, not bad
// user input.
class internal_error : public error {
public:
  using error::error;
};

}  // namespace skewgb
