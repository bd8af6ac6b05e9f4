#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cheb {

// Base for every library error; all carry a human-readable message.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of the operation.
struct DomainError : Error {
  using Error::Error;
};

// The working precision cannot decide the question (e.g. an interval too
// wide to pin a continued-fraction partial quotient).
struct PrecisionError : Error {
  using Error::Error;
};

// Rectangle argument touches a pole of the function being evaluated.
struct PoleProximity : Error {
  using Error::Error;
};

// Parameter lies outside the validity region of a zero-free-region formula.
struct RegionError : Error {
  using Error::Error;
};

// x below the validity threshold of an asymptotic theorem; carries the
// threshold (as a decimal string enclosure, since the value may be astronomically
// large) so callers can report it.
struct ThresholdError : Error {
  std::string threshold_lo, threshold_hi;  // decimal enclosure of the threshold
  ThresholdError(const std::string& msg, std::string lo, std::string hi)
      : Error(msg), threshold_lo(std::move(lo)), threshold_hi(std::move(hi)) {}
};

// Sieve limit exceeds the configured budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

// Malformed input file; line is 1-based.
struct ParseError : Error {
  std::size_t line;
  ParseError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

// Ordinates out of order / non-positive; line is 1-based.
struct MonotonicityError : Error {
  std::size_t line;
  MonotonicityError(const std::string& msg, std::size_t line_no)
      : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

// Requested window/height not covered by the zeros table.
struct WindowError : Error {
  using Error::Error;
};

// Unknown identifier (audit item, theorem name, ...).
struct NotFoundError : Error {
  using Error::Error;
};

// File system problem.
struct IoError : Error {
  using Error::Error;
};

// Unknown render format.
struct UnsupportedFormat : Error {
  using Error::Error;
};

}  // namespace cheb
