#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cheb/bounds.hpp"
#include "cheb/interval.hpp"
#include "cheb/rational.hpp"

namespace cheb {

// An ingested table of nontrivial-zero ordinates (positive imaginary parts,
// strictly increasing). Zeros are trusted inputs on the half-line: the
// library checks inequalities against them, it does not verify them.
struct ZeroTable {
  std::vector<double> ordinates;    // strictly increasing, all > 0
  std::string source_label;
  Rational assumed_beta = Rational(1, 2);
  std::string lfunction = "zeta";   // which L-function the zeros belong to
  double max_height = 0.0;          // last ordinate (0 when empty)
  bool complete = false;            // all zeros with 0 < gamma <= max_height present
  double declared_height = 0.0;     // from the !complete-to header, 0 if absent
};

// Plain-text format: one positive decimal ordinate per line, ascending;
// '#' comment lines; optional '!complete-to <height>' header line setting the
// completeness flag. Malformed lines raise ParseError(line); order/sign
// violations raise MonotonicityError(line). Empty tables are incomplete.
ZeroTable load_zeros(const std::string& path);

// Zeros in the window [t-1, t+1], counting mirrored conjugates (ordinate -g)
// when the window reaches below zero. Requires |t| + 1 <= max_height and a
// complete table (else WindowError).
long count_zeros_window(double t, const ZeroTable& table);

// S(x, T) = sum over |gamma| < T of x^rho / rho with rho = 1/2 + i gamma,
// conjugate pairs combined into 2 Re(x^rho/rho); ascending-gamma compensated
// accumulation in fixed 4096-index chunks (thread count never changes the
// result). Requires x >= 2, 2 <= T <= max_height, complete table.
double s_x_t(double x, double T, const ZeroTable& table, int threads = 1);

struct ExplicitFormulaResidual {
  double x = 0.0;
  double T = 0.0;
  double psi_direct = 0.0;  // Lambda-sum over prime powers <= x
  double s_sum = 0.0;       // S(x, T)
  double residual = 0.0;    // |psi_direct - x + s_sum|
  Interval bound;           // seven-term explicit-formula error bound
  bool holds = false;       // residual <= bound's lower endpoint
};

// Residual check of the truncated explicit formula over the rationals
// (trivial class, unit ratio, ln|d| = 0).
ExplicitFormulaResidual check_explicit_formula(double x, double T,
                                               const ZeroTable& table,
                                               Prec prec = kDefaultPrec,
                                               int threads = 1);

struct ZeroFreeViolation {
  std::size_t index = 0;  // 0-based position in the table
  double gamma = 0.0;
  std::string reason;
};

struct ZeroFreeReport {
  std::size_t zeros_checked = 0;
  double min_margin = 0.0;    // min over zeros of (boundary lower end - beta)
  double min_ordinate = 0.0;
  std::vector<ZeroFreeViolation> violations;
  bool ok = false;
};

// Verifies every tabulated zero (beta = assumed_beta) lies strictly left of
// zero_free_beta(gamma, p), and, when n_L = 1, that no ordinate is below 14.
ZeroFreeReport check_zero_free_region(const ZeroTable& table, const FieldParams& p,
                                      Prec prec = kDefaultPrec);

}  // namespace cheb
