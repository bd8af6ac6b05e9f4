#pragma once

#include "cheb/complex_interval.hpp"
#include "cheb/interval.hpp"
#include "cheb/rational.hpp"

namespace cheb {

// Exact Bernoulli number B_k (B_1 = -1/2 convention). Cached; thread-safe.
const Rational& bernoulli(unsigned k);

// Enclosure of the digamma function Gamma'/Gamma over a rectangle.
// The argument is shifted right of the poles with the recurrence
// digamma(z) = digamma(z+m) - sum_{k<m} 1/(z+k), then evaluated by the
// log-derivative form ln w - 1/(2w) - sum B_{2k}/(2k) w^{-2k} with a
// rigorously bounded tail. Raises PoleProximity if the rectangle contains
// a nonpositive integer.
ComplexInterval digamma(const ComplexInterval& z, Prec prec = kDefaultPrec);

// Enclosure of zeta(sigma) for an interval sigma strictly right of 1
// (DomainError otherwise), via Euler-Maclaurin with an explicit remainder.
Interval zeta_q(const Interval& sigma, Prec prec = kDefaultPrec);

// Enclosure of zeta'(sigma)/zeta(sigma), same domain.
Interval zeta_q_logderiv(const Interval& sigma, Prec prec = kDefaultPrec);

// Enclosure of the offset logarithmic integral int_2^x dt/ln t, x >= 2
// (DomainError if the interval extends below 2). Interval Taylor quadrature.
Interval li_from_2(const Interval& x, Prec prec = kDefaultPrec);

// Enclosure of the symmetric truncated Mellin integral
//   (1/2 pi i) int_{sigma-iT}^{sigma+iT} y^s / s ds
//     = (y^sigma/pi) int_0^T (sigma cos(t ln y) + t sin(t ln y))/(sigma^2+t^2) dt.
// Requires y > 0, sigma > 0, T > 0.
Interval mellin_truncated(const Interval& y, const Interval& sigma, const Interval& T,
                          Prec prec = kDefaultPrec);

}  // namespace cheb
