#include "cheb/complex_interval.hpp"

namespace cheb {

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re - b.re, a.im - b.im};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval operator-(const ComplexInterval& a) { return {-a.re, -a.im}; }

ComplexInterval operator*(const ComplexInterval& a, const Interval& s) {
  return {a.re * s, a.im * s};
}

Interval norm2(const ComplexInterval& z) {
  // x^2 via even integer power keeps the lower end at 0 when straddling
  return pow(z.re, 2L) + pow(z.im, 2L);
}

Interval abs(const ComplexInterval& z) { return sqrt(norm2(z)); }

ComplexInterval recip(const ComplexInterval& z) {
  Interval n2 = norm2(z);
  if (n2.contains_zero()) throw DomainError("complex reciprocal of a rectangle containing zero");
  return {z.re / n2, -z.im / n2};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  return a * recip(b);
}

ComplexInterval log_rhp(const ComplexInterval& z) {
  if (!z.re.certainly_positive())
    throw DomainError("log enclosure requires a rectangle in the right half-plane");
  // ln|z| : |z| over the rectangle; arg via corner-monotone atan2
  return {log(abs(z)), atan2_rhp(z.im, z.re)};
}

}  // namespace cheb
