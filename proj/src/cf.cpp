#include "cheb/cf.hpp"

#include <optional>

#include "cheb/errors.hpp"

namespace cheb {

namespace {

BigInt rational_floor(const Rational& x) {
  BigInt f;
  mpz_fdiv_q(f.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
  return f;
}

Rational exact_from_endpoint(mpfr_srcptr v) {
  if (!mpfr_number_p(v)) throw DomainError("cf_rationalize: non-finite endpoint");
  Rational q;
  mpfr_get_q(q.get_mpq_t(), v);
  return q;
}

struct Candidate {
  Rational value;
  int order;
  bool semi;
  // Lexicographic preference: order, then convergent-over-semiconvergent,
  // then smaller denominator.
  bool better_than(const Candidate& o) const {
    if (order != o.order) return order < o.order;
    if (semi != o.semi) return !semi;
    return mpz_cmp(mpq_denref(value.get_mpq_t()), mpq_denref(o.value.get_mpq_t())) < 0;
  }
};

}  // namespace

CfResult cf_rationalize(const Interval& value, int max_order, RoundDirection dir) {
  if (max_order < 0) throw DomainError("cf_rationalize: negative order cap");
  Rational lo = exact_from_endpoint(value.lo_raw());
  Rational hi = exact_from_endpoint(value.hi_raw());

  auto certifies = [&](const Rational& cand) {
    return dir == RoundDirection::kUpper ? cand >= hi : cand <= lo;
  };

  std::optional<Candidate> best;
  auto offer = [&](Rational v, int order, bool semi) {
    if (!certifies(v)) return;
    Candidate c{std::move(v), order, semi};
    if (!best || c.better_than(*best)) best = std::move(c);
  };

  // Convergent recurrence state: p/q at orders k-1 and k-2.
  BigInt p1(1), p2(0), q1(0), q2(1);
  bool exact = (lo == hi);
  Rational xlo = lo, xhi = hi;  // remaining tails; value's tail lies between

  for (int k = 0; k <= max_order; ++k) {
    BigInt a;
    bool terminal = false;
    if (exact) {
      a = rational_floor(xlo);
      terminal = (Rational(a) == xlo);
    } else {
      a = rational_floor(xlo);
      if (rational_floor(xhi) != a) break;  // partial quotient undetermined
    }

    // Semiconvergent with j = 1 dominates all deeper j of the same order:
    // it has the smallest denominator and lies farthest from the value on
    // its side, so if any semiconvergent of this order certifies, it does.
    if (k >= 1 && a >= 2) {
      offer(Rational(p1 + p2, q1 + q2), k, true);
    }
    BigInt pk = a * p1 + p2;
    BigInt qk = a * q1 + q2;
    Rational conv(pk, qk);
    conv.canonicalize();  // coprime already, but keep the invariant explicit
    offer(std::move(conv), k, false);

    if (exact && terminal) break;
    p2 = p1; p1 = pk;
    q2 = q1; q1 = qk;

    if (exact) {
      Rational frac = xlo - Rational(a);
      xlo = 1 / frac;
    } else {
      Rational flo = xlo - Rational(a);
      Rational fhi = xhi - Rational(a);
      if (flo == 0) break;  // cannot decide whether the fraction terminates
      // Reciprocal reverses the order of the endpoints.
      xlo = 1 / fhi;
      xhi = 1 / flo;
    }
  }

  if (!best) {
    throw PrecisionError(
        "cf_rationalize: enclosure too wide to certify a bounding fraction "
        "within the order cap");
  }
  return CfResult{best->value, best->order, best->semi};
}

}  // namespace cheb
