#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "cheb/errors.hpp"
#include "cheb/rational.hpp"

namespace cheb {

using Prec = mpfr_prec_t;

inline constexpr Prec kDefaultPrec = 128;  // bound evaluation default
inline constexpr Prec kAuditPrec = 256;    // audit default

// Closed interval [lo, hi] of arbitrary-precision floats with outward
// rounding: every operation returns an enclosure of the exact image set.
// Endpoints may be +/-inf; NaN endpoints never escape a successful call.
// Immutable in spirit: all operations return new values.
class Interval {
 public:
  Interval();  // [0, 0] at kDefaultPrec
  explicit Interval(Prec prec);
  Interval(const Interval& o);
  Interval(Interval&& o) noexcept;
  Interval& operator=(const Interval& o);
  Interval& operator=(Interval&& o) noexcept;
  ~Interval();

  // --- constructors ---
  static Interval point(double v, Prec prec = kDefaultPrec);
  static Interval point(long v, Prec prec = kDefaultPrec);
  static Interval of(double lo, double hi, Prec prec = kDefaultPrec);
  static Interval from_rational(const Rational& q, Prec prec);
  static Interval from_integer(const BigInt& n, Prec prec);
  // Outward-rounded parse of a decimal literal.
  static Interval from_decimal(std::string_view s, Prec prec);

  // --- constants (enclosures at the given precision) ---
  static Interval pi(Prec prec);
  static Interval e(Prec prec);
  static Interval euler_gamma(Prec prec);
  static Interval ln2(Prec prec);
  static Interval sqrt3(Prec prec);

  // --- queries ---
  Prec precision() const { return prec_; }
  double lo_double() const;  // rounded toward -inf
  double hi_double() const;  // rounded toward +inf
  // Directed decimal rendering: the printed interval contains *this.
  std::string lo_string(int digits = 20) const;
  std::string hi_string(int digits = 20) const;
  bool is_finite() const;
  bool is_point() const;  // lo == hi exactly
  bool contains_zero() const;
  bool contains(const Interval& o) const;  // o subseteq *this
  bool contains(double v) const;
  bool contains(const Rational& q) const;
  Interval mid() const;    // a point inside [lo, hi]
  Interval width() const;  // upper bound on hi - lo, as a point interval
  double width_double() const;
  // Thin interval at one endpoint (outward-rounded if prec is narrower).
  Interval lo_point(Prec prec) const;
  Interval hi_point(Prec prec) const;

  // --- certain comparisons (false == undecided, not negation) ---
  bool certainly_le(const Interval& o) const;  // hi <= o.lo
  bool certainly_lt(const Interval& o) const;
  bool certainly_ge(const Interval& o) const;
  bool certainly_gt(const Interval& o) const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool certainly_le(const Rational& q) const;  // hi <= q (exact compare)
  bool certainly_ge(const Rational& q) const;

  // --- arithmetic (result precision = max of operand precisions) ---
  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  // Division by an interval containing zero raises DomainError (no
  // extended/Kahan-style splitting).
  friend Interval operator/(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a);

  Interval& operator+=(const Interval& o) { return *this = *this + o; }
  Interval& operator-=(const Interval& o) { return *this = *this - o; }
  Interval& operator*=(const Interval& o) { return *this = *this * o; }
  Interval& operator/=(const Interval& o) { return *this = *this / o; }

  // --- functions (enclosures; domain violations raise DomainError) ---
  friend Interval abs(const Interval& a);
  friend Interval sqrt(const Interval& a);   // requires lo >= 0
  friend Interval log(const Interval& a);    // requires lo > 0
  friend Interval exp(const Interval& a);
  friend Interval sin(const Interval& a);
  friend Interval cos(const Interval& a);
  friend Interval atan(const Interval& a);
  friend Interval pow(const Interval& base, long n);          // integer power
  friend Interval pow(const Interval& base, const Interval& y);  // base > 0
  friend Interval hull(const Interval& a, const Interval& b);
  friend Interval max(const Interval& a, const Interval& b);
  friend Interval min(const Interval& a, const Interval& b);

  // Same value re-enclosed at a different precision (outward when narrowing).
  Interval round_to(Prec prec) const;

  // Symmetric enclosure [-m, m] from an upper bound m on a magnitude.
  static Interval plus_minus(const Interval& magnitude_upper);

  // Raw endpoint access for the implementation and tests that need exact
  // endpoint arithmetic (e.g. converting to rationals). Read-only.
  mpfr_srcptr lo_raw() const { return lo_; }
  mpfr_srcptr hi_raw() const { return hi_; }

  // Implementation backdoor: construct from raw endpoints (takes copies).
  static Interval from_raw(mpfr_srcptr lo, mpfr_srcptr hi, Prec prec);

 private:
  mpfr_t lo_, hi_;
  Prec prec_;
};

// atan2 enclosure over a rectangle restricted to re > 0 (right half-plane).
Interval atan2_rhp(const Interval& im, const Interval& re);

}  // namespace cheb
