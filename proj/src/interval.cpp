#include "cheb/interval.hpp"

#include <cmath>
#include <cstring>
#include <string>

namespace cheb {

namespace {

// Round a/b toward -inf resp. +inf into rop (rop preallocated).
void div_down(mpfr_t rop, mpfr_srcptr a, mpfr_srcptr b) { mpfr_div(rop, a, b, MPFR_RNDD); }
void div_up(mpfr_t rop, mpfr_srcptr a, mpfr_srcptr b) { mpfr_div(rop, a, b, MPFR_RNDU); }

}  // namespace

Interval::Interval() : Interval(kDefaultPrec) {}

Interval::Interval(Prec prec) : prec_(prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_set(lo_, o.lo_, MPFR_RNDD);
  mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : prec_(o.prec_) {
  mpfr_init2(lo_, prec_);
  mpfr_init2(hi_, prec_);
  mpfr_swap(lo_, o.lo_);
  mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
  if (this != &o) {
    if (prec_ != o.prec_) {
      mpfr_set_prec(lo_, o.prec_);
      mpfr_set_prec(hi_, o.prec_);
      prec_ = o.prec_;
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
  }
  return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
  if (this != &o) {
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
    std::swap(prec_, o.prec_);
  }
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::point(double v, Prec prec) {
  Interval r(prec);
  mpfr_set_d(r.lo_, v, MPFR_RNDD);
  mpfr_set_d(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::point(long v, Prec prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, v, MPFR_RNDD);
  mpfr_set_si(r.hi_, v, MPFR_RNDU);
  return r;
}

Interval Interval::of(double lo, double hi, Prec prec) {
  if (!(lo <= hi)) throw DomainError("interval endpoints out of order");
  Interval r(prec);
  mpfr_set_d(r.lo_, lo, MPFR_RNDD);
  mpfr_set_d(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::from_rational(const Rational& q, Prec prec) {
  Interval r(prec);
  mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_integer(const BigInt& n, Prec prec) {
  Interval r(prec);
  mpfr_set_z(r.lo_, n.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(r.hi_, n.get_mpz_t(), MPFR_RNDU);
  return r;
}

Interval Interval::from_decimal(std::string_view s, Prec prec) {
  std::string buf(s);
  Interval r(prec);
  char* end_lo = nullptr;
  char* end_hi = nullptr;
  mpfr_strtofr(r.lo_, buf.c_str(), &end_lo, 10, MPFR_RNDD);
  mpfr_strtofr(r.hi_, buf.c_str(), &end_hi, 10, MPFR_RNDU);
  if (end_lo != buf.c_str() + buf.size() || buf.empty())
    throw DomainError("malformed decimal literal: '" + buf + "'");
  return r;
}

Interval Interval::from_raw(mpfr_srcptr lo, mpfr_srcptr hi, Prec prec) {
  Interval r(prec);
  mpfr_set(r.lo_, lo, MPFR_RNDD);
  mpfr_set(r.hi_, hi, MPFR_RNDU);
  return r;
}

Interval Interval::pi(Prec prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::e(Prec prec) {
  Interval r(prec);
  mpfr_set_si(r.lo_, 1, MPFR_RNDN);
  mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
  mpfr_set_si(r.hi_, 1, MPFR_RNDN);
  mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::euler_gamma(Prec prec) {
  Interval r(prec);
  mpfr_const_euler(r.lo_, MPFR_RNDD);
  mpfr_const_euler(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::ln2(Prec prec) {
  Interval r(prec);
  mpfr_const_log2(r.lo_, MPFR_RNDD);
  mpfr_const_log2(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::sqrt3(Prec prec) {
  Interval r(prec);
  mpfr_sqrt_ui(r.lo_, 3, MPFR_RNDD);
  mpfr_sqrt_ui(r.hi_, 3, MPFR_RNDU);
  return r;
}

double Interval::lo_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::hi_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }

namespace {

std::string format_endpoint(mpfr_srcptr v, int digits, mpfr_rnd_t rnd) {
  if (mpfr_nan_p(v)) return "nan";
  if (mpfr_inf_p(v)) return mpfr_sgn(v) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v)) return "0";
  mpfr_exp_t exp = 0;
  char* s = mpfr_get_str(nullptr, &exp, 10, static_cast<size_t>(digits), v, rnd);
  std::string digits_str(s);
  mpfr_free_str(s);
  std::string sign;
  if (digits_str[0] == '-') {
    sign = "-";
    digits_str.erase(0, 1);
  }
  // mpfr convention: value = 0.digits * 10^exp
  std::string out = sign + digits_str.substr(0, 1) + "." + digits_str.substr(1) + "e" +
                    std::to_string(static_cast<long>(exp) - 1);
  return out;
}

}  // namespace

std::string Interval::lo_string(int digits) const { return format_endpoint(lo_, digits, MPFR_RNDD); }
std::string Interval::hi_string(int digits) const { return format_endpoint(hi_, digits, MPFR_RNDU); }

bool Interval::is_finite() const { return mpfr_number_p(lo_) && mpfr_number_p(hi_); }
bool Interval::is_point() const { return mpfr_equal_p(lo_, hi_); }
bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const Interval& o) const {
  return mpfr_lessequal_p(lo_, o.lo_) && mpfr_lessequal_p(o.hi_, hi_);
}

bool Interval::contains(double v) const {
  return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

Interval Interval::mid() const {
  Interval r(prec_);
  mpfr_add(r.lo_, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDN);
  if (!mpfr_number_p(r.lo_)) mpfr_set(r.lo_, lo_, MPFR_RNDN);
  mpfr_set(r.hi_, r.lo_, MPFR_RNDN);
  return r;
}

Interval Interval::width() const {
  Interval r(prec_);
  mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
  mpfr_set(r.lo_, r.hi_, MPFR_RNDN);
  return r;
}

double Interval::width_double() const {
  mpfr_t w;
  mpfr_init2(w, 64);
  mpfr_sub(w, hi_, lo_, MPFR_RNDU);
  double d = mpfr_get_d(w, MPFR_RNDU);
  mpfr_clear(w);
  return d;
}

bool Interval::certainly_le(const Interval& o) const { return mpfr_lessequal_p(hi_, o.lo_); }
bool Interval::certainly_lt(const Interval& o) const { return mpfr_less_p(hi_, o.lo_); }
bool Interval::certainly_ge(const Interval& o) const { return mpfr_greaterequal_p(lo_, o.hi_); }
bool Interval::certainly_gt(const Interval& o) const { return mpfr_greater_p(lo_, o.hi_); }
bool Interval::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Interval::certainly_negative() const { return mpfr_sgn(hi_) < 0; }
bool Interval::certainly_le(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) <= 0; }
bool Interval::certainly_ge(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) >= 0; }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
  return r;
}

Interval operator*(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t p;
  mpfr_init2(p, r.prec_);
  // lo: min over the four endpoint products rounded down
  mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_mul(p, a.lo_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_mul(p, a.hi_, b.lo_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  mpfr_mul(p, a.hi_, b.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  // hi: max over the four rounded up
  mpfr_mul(r.hi_, a.lo_, b.lo_, MPFR_RNDU);
  mpfr_mul(p, a.lo_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_mul(p, a.hi_, b.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_mul(p, a.hi_, b.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_clear(p);
  // 0 * inf produces NaN under MPFR; our operands never pair 0 with inf
  // except when an endpoint is exactly zero, where the product is zero.
  if (mpfr_nan_p(r.lo_)) mpfr_set_zero(r.lo_, -1);
  if (mpfr_nan_p(r.hi_)) mpfr_set_zero(r.hi_, 1);
  return r;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_t p;
  mpfr_init2(p, r.prec_);
  div_down(r.lo_, a.lo_, b.lo_);
  div_down(p, a.lo_, b.hi_);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  div_down(p, a.hi_, b.lo_);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  div_down(p, a.hi_, b.hi_);
  mpfr_min(r.lo_, r.lo_, p, MPFR_RNDD);
  div_up(r.hi_, a.lo_, b.lo_);
  div_up(p, a.lo_, b.hi_);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  div_up(p, a.hi_, b.lo_);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  div_up(p, a.hi_, b.hi_);
  mpfr_max(r.hi_, r.hi_, p, MPFR_RNDU);
  mpfr_clear(p);
  return r;
}

Interval operator-(const Interval& a) {
  Interval r(a.prec_);
  mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  return r;
}

Interval abs(const Interval& a) {
  Interval r(a.prec_);
  if (mpfr_sgn(a.lo_) >= 0) return a;
  if (mpfr_sgn(a.hi_) <= 0) return -a;
  // straddles zero: [0, max(|lo|, hi)]
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.lo_) < 0) throw DomainError("sqrt of an interval extending below zero");
  Interval r(a.prec_);
  mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval log(const Interval& a) {
  if (mpfr_sgn(a.lo_) <= 0) throw DomainError("log of an interval touching (-inf, 0]");
  Interval r(a.prec_);
  mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval exp(const Interval& a) {
  Interval r(a.prec_);
  mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

Interval atan(const Interval& a) {
  Interval r(a.prec_);
  mpfr_atan(r.lo_, a.lo_, MPFR_RNDD);
  mpfr_atan(r.hi_, a.hi_, MPFR_RNDU);
  return r;
}

namespace {

// Does [a, b] contain a point of the form (2k + parity) * pi for integer k?
// Conservative: may answer yes when uncertain (only ever widens sin/cos).
bool contains_multiple_of_pi(mpfr_srcptr a, mpfr_srcptr b, int parity, Prec prec) {
  mpfr_t pi_lo, pi_hi, q, kq;
  mpfr_init2(pi_lo, prec);
  mpfr_init2(pi_hi, prec);
  mpfr_init2(q, prec);
  mpfr_init2(kq, prec);
  mpfr_const_pi(pi_lo, MPFR_RNDD);
  mpfr_const_pi(pi_hi, MPFR_RNDU);
  // smallest k with (2k+parity)*pi >= a: k >= (a/pi - parity)/2
  mpfr_div(q, a, pi_hi, MPFR_RNDD);  // lower bound on a/pi
  mpfr_sub_si(q, q, parity, MPFR_RNDD);
  mpfr_div_2ui(q, q, 1, MPFR_RNDD);
  mpfr_ceil(q, q);
  // candidate critical point c = (2k+parity)*pi; contained if c <= b possibly.
  mpfr_mul_2ui(kq, q, 1, MPFR_RNDN);  // exact: k is an integer
  mpfr_add_si(kq, kq, parity, MPFR_RNDN);
  bool contained;
  if (mpfr_sgn(kq) >= 0)
    mpfr_mul(kq, kq, pi_lo, MPFR_RNDD);  // lower bound on c
  else
    mpfr_mul(kq, kq, pi_hi, MPFR_RNDD);
  contained = mpfr_lessequal_p(kq, b);
  mpfr_clears(pi_lo, pi_hi, q, kq, nullptr);
  return contained;
}

}  // namespace

Interval cos(const Interval& a) {
  Interval r(a.prec_);
  if (!a.is_finite()) {
    mpfr_set_si(r.lo_, -1, MPFR_RNDD);
    mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    return r;
  }
  mpfr_t ca, cb;
  mpfr_init2(ca, a.prec_);
  mpfr_init2(cb, a.prec_);
  mpfr_cos(ca, a.lo_, MPFR_RNDD);
  mpfr_cos(cb, a.hi_, MPFR_RNDD);
  mpfr_min(r.lo_, ca, cb, MPFR_RNDD);
  mpfr_cos(ca, a.lo_, MPFR_RNDU);
  mpfr_cos(cb, a.hi_, MPFR_RNDU);
  mpfr_max(r.hi_, ca, cb, MPFR_RNDU);
  if (contains_multiple_of_pi(a.lo_, a.hi_, 0, a.prec_)) mpfr_set_si(r.hi_, 1, MPFR_RNDU);
  if (contains_multiple_of_pi(a.lo_, a.hi_, 1, a.prec_)) mpfr_set_si(r.lo_, -1, MPFR_RNDD);
  mpfr_clears(ca, cb, nullptr);
  return r;
}

Interval sin(const Interval& a) {
  // sin(x) = cos(x - pi/2); shift by an enclosure of pi/2
  Interval half_pi = Interval::pi(a.precision());
  Interval shifted = a - half_pi / Interval::point(2L, a.precision());
  return cos(shifted);
}

Interval pow(const Interval& base, long n) {
  Prec prec = base.precision();
  if (n == 0) return Interval::point(1L, prec);
  if (n < 0) return Interval::point(1L, prec) / pow(base, -n);
  Interval r(prec);
  bool even = (n % 2 == 0);
  if (!even || mpfr_sgn(base.lo_raw()) >= 0) {
    // monotone on the whole line (odd) or on [0, inf) (even with lo >= 0)
    mpfr_pow_si(r.lo_, base.lo_raw(), n, MPFR_RNDD);
    mpfr_pow_si(r.hi_, base.hi_raw(), n, MPFR_RNDU);
    return Interval::from_raw(r.lo_raw(), r.hi_raw(), prec);
  }
  if (mpfr_sgn(base.hi_raw()) <= 0) {
    mpfr_pow_si(r.lo_, base.hi_raw(), n, MPFR_RNDD);
    mpfr_pow_si(r.hi_, base.lo_raw(), n, MPFR_RNDU);
    return Interval::from_raw(r.lo_raw(), r.hi_raw(), prec);
  }
  // even power of a straddling interval: [0, max(|lo|, hi)^n]
  Interval m = abs(base);
  mpfr_set_zero(r.lo_, 1);
  mpfr_pow_si(r.hi_, m.hi_raw(), n, MPFR_RNDU);
  return Interval::from_raw(r.lo_raw(), r.hi_raw(), prec);
}

Interval pow(const Interval& base, const Interval& y) {
  if (mpfr_sgn(base.lo_raw()) <= 0)
    throw DomainError("pow with non-positive base interval");
  return exp(y * log(base));
}

Interval hull(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval max(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  Interval r(std::max(a.prec_, b.prec_));
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::lo_point(Prec prec) const { return from_raw(lo_, lo_, prec); }

Interval Interval::hi_point(Prec prec) const { return from_raw(hi_, hi_, prec); }

Interval Interval::round_to(Prec prec) const {
  Interval r(prec);
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Interval Interval::plus_minus(const Interval& magnitude_upper) {
  Interval r(magnitude_upper.prec_);
  mpfr_neg(r.lo_, magnitude_upper.hi_, MPFR_RNDD);
  mpfr_set(r.hi_, magnitude_upper.hi_, MPFR_RNDU);
  return r;
}

Interval atan2_rhp(const Interval& im, const Interval& re) {
  if (mpfr_sgn(re.lo_raw()) <= 0)
    throw DomainError("atan2 enclosure requires a rectangle in the right half-plane");
  Prec prec = std::max(im.precision(), re.precision());
  // atan2(y, x) with x > 0 is increasing in y; in x it decreases for y > 0
  // and increases for y < 0. Extremes are at rectangle corners.
  mpfr_t t;
  mpfr_init2(t, prec);
  // min at y = im.lo, x = (im.lo >= 0 ? re.hi : re.lo)
  mpfr_srcptr xmin = (mpfr_sgn(im.lo_raw()) >= 0) ? re.hi_raw() : re.lo_raw();
  mpfr_atan2(t, im.lo_raw(), xmin, MPFR_RNDD);
  // max at y = im.hi, x = (im.hi >= 0 ? re.lo : re.hi)
  mpfr_srcptr xmax = (mpfr_sgn(im.hi_raw()) >= 0) ? re.lo_raw() : re.hi_raw();
  Interval out(prec);
  mpfr_t u;
  mpfr_init2(u, prec);
  mpfr_atan2(u, im.hi_raw(), xmax, MPFR_RNDU);
  out = Interval::from_raw(t, u, prec);
  mpfr_clears(t, u, nullptr);
  return out;
}

}  // namespace cheb
