#pragma once

#include "cheb/interval.hpp"

namespace cheb {

// Axis-aligned rectangle {re + i*im : re in [re.lo, re.hi], im in [im.lo, im.hi]}
// with enclosure semantics: every operation returns a rectangle containing
// the exact image set.
struct ComplexInterval {
  Interval re, im;

  ComplexInterval() = default;
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexInterval point(double r, double i, Prec prec = kDefaultPrec) {
    return {Interval::point(r, prec), Interval::point(i, prec)};
  }
  static ComplexInterval real(const Interval& r) {
    return {r, Interval::point(0L, r.precision())};
  }

  Prec precision() const { return std::max(re.precision(), im.precision()); }
  bool contains(const ComplexInterval& o) const {
    return re.contains(o.re) && im.contains(o.im);
  }
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
// Division by a rectangle containing 0 raises DomainError.
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a);
// Scalar (real interval) multiply.
ComplexInterval operator*(const ComplexInterval& a, const Interval& s);

// |z|^2 and |z| as interval enclosures.
Interval norm2(const ComplexInterval& z);
Interval abs(const ComplexInterval& z);

// Principal log over a rectangle contained in the right half-plane
// (re > 0 strictly); DomainError otherwise.
ComplexInterval log_rhp(const ComplexInterval& z);

// 1/z for rectangles avoiding 0.
ComplexInterval recip(const ComplexInterval& z);

}  // namespace cheb
