#pragma once

#include <stdexcept>
#include <string>

namespace pufsim {

/// Bad numeric input (non-finite values, violated field invariants).
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Address code or cell coordinate outside the 64x64 grid.
struct AddressError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Calibration could not reach its target within the iteration budget.
struct CalibrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed input file; carries a 1-based line number when known.
struct ParseError : std::runtime_error {
  ParseError(const std::string& origin, int line_no, const std::string& what)
      : std::runtime_error(origin + ":" + std::to_string(line_no) + ": " + what),
        line(line_no) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what), line(0) {}
  int line;
};

}  // namespace pufsim
