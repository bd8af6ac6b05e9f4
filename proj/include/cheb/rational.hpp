#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cheb/errors.hpp"

namespace cheb {

// Exact rational numbers. mpq_class keeps gcd(num, den) = 1 and den >= 1
// after every canonicalizing operation, which is exactly the invariant we
// need; this header adds the constructors the rest of the library uses.
using Rational = mpq_class;
using BigInt = mpz_class;

// "3/4", "-69/4", "17" -> exact rational. Throws ParseError on anything else.
Rational rational_from_fraction(std::string_view s);

// Exact decimal/scientific literal -> rational: "0.1" -> 1/10, "1e6" -> 1000000,
// "-2.5e-3" -> -1/400. No binary rounding is involved.
Rational rational_from_decimal(std::string_view s);

// Accepts either of the two syntaxes above.
Rational rational_from_string(std::string_view s);

inline std::string to_string(const Rational& q) {
  return q.get_str();  // "num/den" or "num" when den == 1
}

}  // namespace cheb
