#pragma once

#include "cheb/interval.hpp"
#include "cheb/rational.hpp"

namespace cheb {

enum class RoundDirection { kLower, kUpper };

struct CfResult {
  Rational value;
  int order = 0;               // continued-fraction order of the fraction
  bool semiconvergent = false; // true if not itself a convergent
};

// Returns a convergent or semiconvergent, of order <= max_order, of the
// continued fraction of the enclosed value, certified (by exact rational
// comparison against the interval endpoints) to bound the value from the
// requested side. Among certified candidates the result has the smallest
// order; at equal order a convergent beats a semiconvergent, then the
// smaller denominator wins. Throws PrecisionError when the enclosure is too
// wide to determine any certified candidate within the order cap.
CfResult cf_rationalize(const Interval& value, int max_order, RoundDirection dir);

}  // namespace cheb
