#include "cheb/special.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include "cheb/errors.hpp"

namespace cheb {

namespace {

// --------------------------------------------------------------------------
// Small helpers.

Interval rat_iv(const Rational& q, Prec p) { return Interval::from_rational(q, p); }

Interval int_iv(long n, Prec p) { return Interval::from_integer(BigInt(n), p); }

// Upper bound on |v| as an Interval (>= 0, point-ish).
Interval mag_upper(const Interval& v, Prec p) { return abs(v).hi_point(p); }

}  // namespace

// --------------------------------------------------------------------------
// Bernoulli numbers, exact.

namespace {
std::vector<Rational> g_bernoulli;  // g_bernoulli[k] = B_k
std::mutex g_bernoulli_mu;

void extend_bernoulli(unsigned k) {
  if (g_bernoulli.empty()) {
    g_bernoulli.emplace_back(1);                       // B_0
    g_bernoulli.emplace_back(Rational(-1, 2));         // B_1
  }
  while (g_bernoulli.size() <= k) {
    unsigned m = static_cast<unsigned>(g_bernoulli.size());
    if (m % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    // sum_{j=0}^{m} C(m+1, j) B_j = 0  =>  B_m = -(1/C(m+1,m)) * sum_{j<m} ...
    Rational acc(0);
    BigInt binom;
    for (unsigned j = 0; j < m; ++j) {
      if (j > 1 && j % 2 == 1) continue;  // odd Bernoulli numbers vanish
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      acc += Rational(binom) * g_bernoulli[j];
    }
    Rational bm = -acc / Rational(BigInt(m + 1));
    bm.canonicalize();
    g_bernoulli.push_back(bm);
  }
}
}  // namespace

const Rational& bernoulli(unsigned k) {
  std::lock_guard<std::mutex> lock(g_bernoulli_mu);
  extend_bernoulli(k);
  return g_bernoulli[k];
}

// --------------------------------------------------------------------------
// Digamma.

namespace {

// True if the rectangle intersects the set of nonpositive integers.
bool touches_nonpositive_integer(const ComplexInterval& z) {
  if (!z.im.contains_zero()) return false;
  // Need an integer k <= 0 with re.lo <= k <= re.hi.
  Prec p = z.re.precision();
  mpfr_t c;
  mpfr_init2(c, p);
  mpfr_ceil(c, z.re.lo_raw());                       // smallest integer >= re.lo
  bool hit = mpfr_cmp_si(c, 0) <= 0 &&               // that integer is <= 0
             mpfr_cmp(c, z.re.hi_raw()) <= 0;        // and <= re.hi
  mpfr_clear(c);
  return hit;
}

}  // namespace

ComplexInterval digamma(const ComplexInterval& z, Prec prec) {
  if (!z.re.is_finite() || !z.im.is_finite()) throw DomainError("digamma: non-finite argument");
  if (touches_nonpositive_integer(z)) {
    throw PoleProximity("digamma: rectangle touches a nonpositive integer");
  }
  const Prec wp = prec + 16;

  // Internal parameters grow with precision so that refinements nest.
  const long A = std::max<long>(6, (2 * static_cast<long>(prec) + 4) / 5);  // ~0.4 p
  const long n = std::max<long>(6, (4 * static_cast<long>(prec) + 24) / 25);  // ~0.16 p

  // Shift: first the normalization step m1 = max(0, 2 - ceil(Re z)), then
  // however many more unit steps are needed to reach Re >= A.
  double relo = z.re.lo_double();
  if (!(relo > -2e6)) throw DomainError("digamma: argument too far left");
  long m1 = std::max<long>(0, 2 - static_cast<long>(std::ceil(relo)));
  long m2 = 0;
  if (relo + static_cast<double>(m1) < static_cast<double>(A) + 1.0) {
    m2 = static_cast<long>(static_cast<double>(A) + 1.0 - (relo + static_cast<double>(m1))) + 1;
  }
  const long shift = m1 + m2;

  ComplexInterval w{z.re.round_to(wp) + int_iv(shift, wp), z.im.round_to(wp)};

  // psi(w) = ln w - 1/(2w) - sum_{k=1}^{n} B_{2k}/(2k) w^{-2k} + R,
  // |R| <= 4 (2n+1)! / ((2pi)^{2n+1} (2n+1) a^{2n+1}),  a = Re(w).lo.
  ComplexInterval acc = log_rhp(w);
  ComplexInterval u = recip(w);
  acc = acc - u * rat_iv(Rational(1, 2), wp);
  ComplexInterval u2 = u * u;
  ComplexInterval upow = u2;
  for (long k = 1; k <= n; ++k) {
    Rational c = bernoulli(static_cast<unsigned>(2 * k)) / Rational(BigInt(2 * k));
    c.canonicalize();
    acc = acc - upow * rat_iv(c, wp);
    if (k < n) upow = upow * u2;
  }

  // Tail bound.
  BigInt fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * n + 1));
  Interval a_lo = w.re.lo_point(wp);  // point at Re(w).lo
  Interval denom = pow(Interval::pi(wp) * int_iv(2, wp), 2 * n + 1) * int_iv(2 * n + 1, wp) *
                   pow(a_lo, 2 * n + 1);
  Interval tail = int_iv(4, wp) * Interval::from_integer(fact, wp) / denom;
  Interval pm = Interval::plus_minus(tail);
  acc.re += pm;
  acc.im += pm;

  // Undo the shift: psi(z) = psi(z + shift) - sum_{k=0}^{shift-1} 1/(z+k).
  if (shift > 0) {
    ComplexInterval zs{z.re.round_to(wp), z.im.round_to(wp)};
    ComplexInterval s = recip(zs);
    for (long k = 1; k < shift; ++k) {
      s = s + recip(ComplexInterval{zs.re + int_iv(k, wp), zs.im});
    }
    acc = acc - s;
  }
  return ComplexInterval{acc.re.round_to(prec), acc.im.round_to(prec)};
}

// --------------------------------------------------------------------------
// zeta and zeta'/zeta on the real axis, sigma > 1.

namespace {

struct EmParams {
  long N;  // cutoff of the direct sum
  long m;  // number of Bernoulli correction terms
};

EmParams em_params(Prec prec) {
  EmParams p;
  p.N = std::max<long>(8, (9 * static_cast<long>(prec) + 19) / 20);   // ~0.45 p
  p.m = std::max<long>(3, (11 * static_cast<long>(prec) + 49) / 50);  // ~0.22 p
  return p;
}

// n^{-s} for integer n >= 1 and interval s, n > 0.
Interval int_pow_neg(long nn, const Interval& s, Prec p) {
  Interval n = int_iv(nn, p);
  return exp(-(s * log(n)));
}

void require_right_of_one(const Interval& sigma, const char* who) {
  if (!sigma.is_finite()) throw DomainError(std::string(who) + ": non-finite argument");
  mpfr_t one;
  mpfr_init2(one, 8);
  mpfr_set_si(one, 1, MPFR_RNDN);
  bool ok = mpfr_cmp(sigma.lo_raw(), one) > 0;
  mpfr_clear(one);
  if (!ok) throw DomainError(std::string(who) + ": argument must lie strictly right of 1");
}

}  // namespace

Interval zeta_q(const Interval& sigma, Prec prec) {
  require_right_of_one(sigma, "zeta_q");
  const Prec wp = prec + 16;
  const EmParams par = em_params(prec);
  const long N = par.N, m = par.m;
  Interval s = sigma.round_to(wp);

  Interval acc = int_iv(1, wp);
  for (long nn = 2; nn < N; ++nn) acc += int_pow_neg(nn, s, wp);

  Interval Niv = int_iv(N, wp);
  Interval Npows = int_pow_neg(N, s, wp);                      // N^{-s}
  acc += Npows * Niv / (s - int_iv(1, wp));                    // N^{1-s}/(s-1)
  acc += Npows * rat_iv(Rational(1, 2), wp);                   // N^{-s}/2

  // Correction terms: sum_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
  Interval poch = s;                       // (s)_1
  Interval Nnegsq = rat_iv(Rational(BigInt(1), BigInt(N) * BigInt(N)), wp);
  Interval Npow = Npows * Niv;             // N^{-s+1}
  for (long k = 1; k <= m; ++k) {
    Npow = Npow * Nnegsq;                  // N^{-s-2k+1}
    if (k > 1) poch = poch * (s + int_iv(2 * k - 3, wp)) * (s + int_iv(2 * k - 2, wp));
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * k));
    Rational c = bernoulli(static_cast<unsigned>(2 * k)) / Rational(fact);
    c.canonicalize();
    acc += rat_iv(c, wp) * poch * Npow;
  }

  // Remainder: |R| <= 4 (s)_{2m+1} (2pi)^{-(2m+1)} N^{-s-2m} / (s+2m).
  Interval poch_full = poch * (s + int_iv(2 * m - 1, wp)) * (s + int_iv(2 * m, wp));
  Interval Ntail = Npow / Niv;  // N^{-s-2m}
  Interval twopi_pow = pow(Interval::pi(wp) * int_iv(2, wp), 2 * m + 1);
  Interval rem = int_iv(4, wp) * mag_upper(poch_full, wp) * Ntail /
                 (twopi_pow * (s + int_iv(2 * m, wp)));
  acc += Interval::plus_minus(rem);
  return acc.round_to(prec);
}

Interval zeta_q_logderiv(const Interval& sigma, Prec prec) {
  require_right_of_one(sigma, "zeta_q_logderiv");
  const Prec wp = prec + 16;
  const EmParams par = em_params(prec);
  const long N = par.N, m = par.m;
  Interval s = sigma.round_to(wp);
  Interval one = int_iv(1, wp);

  // D(s) = -zeta'(s) = sum_{n>=2} ln(n) n^{-s}, assembled by Euler-Maclaurin
  // applied to g(x) = ln(x) x^{-s} from x = N:
  //   sum_{n>=N} g(n) = int_N^inf g + g(N)/2
  //                     - sum_{k=1}^m B_{2k}/(2k)! g^{(2k-1)}(N) + R_m.
  Interval acc = Interval::of(0.0, 0.0, wp);
  for (long nn = 2; nn < N; ++nn) {
    acc += log(int_iv(nn, wp)) * int_pow_neg(nn, s, wp);
  }

  Interval Niv = int_iv(N, wp);
  Interval lnN = log(Niv);
  Interval Npows = int_pow_neg(N, s, wp);  // N^{-s}
  Interval sm1 = s - one;
  // int_N^inf ln(x) x^{-s} dx = N^{1-s} (ln N/(s-1) + 1/(s-1)^2)
  acc += Npows * Niv * (lnN / sm1 + one / (sm1 * sm1));
  acc += Npows * lnN * rat_iv(Rational(1, 2), wp);

  // Derivatives: g^{(j)}(x) = x^{-s-j} (a_j ln x + b_j),
  //   a_{j+1} = -(s+j) a_j,  b_{j+1} = a_j - (s+j) b_j.
  Interval a = one, b = Interval::of(0.0, 0.0, wp);
  Interval xpow = Npows;  // N^{-s-j} at j=0
  long j = 0;
  for (long k = 1; k <= m; ++k) {
    while (j < 2 * k - 1) {
      Interval sj = s + int_iv(j, wp);
      Interval na = -(sj * a);
      Interval nb = a - sj * b;
      a = na;
      b = nb;
      xpow = xpow / Niv;
      ++j;
    }
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(2 * k));
    Rational c = bernoulli(static_cast<unsigned>(2 * k)) / Rational(fact);
    c.canonicalize();
    acc -= rat_iv(c, wp) * xpow * (a * lnN + b);
  }
  // Advance to j = 2m for the remainder bound.
  while (j < 2 * m) {
    Interval sj = s + int_iv(j, wp);
    Interval na = -(sj * a);
    Interval nb = a - sj * b;
    a = na;
    b = nb;
    xpow = xpow / Niv;
    ++j;
  }
  // |R_m| <= 4 (2pi)^{-2m} int_N^inf |g^{(2m)}|
  //       <= 4 (2pi)^{-2m} N^{1-s-2m} [ |a|(lnN/(q-1) + 1/(q-1)^2) + |b|/(q-1) ],
  // with q = s + 2m (integral of x^{-q} lnx and x^{-q} from N).
  Interval q1 = s + int_iv(2 * m - 1, wp);  // q - 1
  Interval amag = mag_upper(a, wp), bmag = mag_upper(b, wp);
  Interval integ = xpow * Niv * (amag * (lnN / q1 + one / (q1 * q1)) + bmag / q1);
  Interval twopi_pow = pow(Interval::pi(wp) * int_iv(2, wp), 2 * m);
  acc += Interval::plus_minus(int_iv(4, wp) * integ / twopi_pow);

  Interval zeta_val = zeta_q(sigma, prec + 16);
  Interval r = -(acc / zeta_val);
  return r.round_to(prec);
}

// --------------------------------------------------------------------------
// Logarithmic integral from 2 by interval Taylor quadrature.

namespace {

// Jet of 1/ln(t) at center c (an interval), coefficients f_k = f^{(k)}(c)/k!,
// k = 0..n. Built from the ln jet l_0 = ln c, l_k = (-1)^{k-1}/(k c^k).
std::vector<Interval> recip_log_jet(const Interval& c, long n, Prec wp) {
  std::vector<Interval> l(static_cast<size_t>(n) + 1), f(static_cast<size_t>(n) + 1);
  l[0] = log(c);
  Interval cinv = int_iv(1, wp) / c;
  Interval cpow = cinv;
  for (long k = 1; k <= n; ++k) {
    Interval term = cpow / int_iv(k, wp);
    l[static_cast<size_t>(k)] = (k % 2 == 1) ? term : -term;
    if (k < n) cpow = cpow * cinv;
  }
  f[0] = int_iv(1, wp) / l[0];
  for (long k = 1; k <= n; ++k) {
    Interval s = Interval::of(0.0, 0.0, wp);
    for (long j = 1; j <= k; ++j) {
      s += l[static_cast<size_t>(j)] * f[static_cast<size_t>(k - j)];
    }
    f[static_cast<size_t>(k)] = -(s / l[0]);
  }
  return f;
}

// Enclosure of int_u^v dt/ln(t) for thin endpoints 2 <= u <= v.
Interval li_cell(const Interval& u, const Interval& v, long n, Prec wp) {
  Interval half = rat_iv(Rational(1, 2), wp);
  Interval c = (u + v) * half;
  Interval rho = (v - u) * half;

  std::vector<Interval> f = recip_log_jet(c, n, wp);
  Interval acc = Interval::of(0.0, 0.0, wp);
  Interval rpow = rho;  // rho^{k+1}
  for (long k = 0; k <= n - 1; ++k) {
    if (k % 2 == 0) {
      acc += f[static_cast<size_t>(k)] * int_iv(2, wp) * rpow / int_iv(k + 1, wp);
    }
    rpow = rpow * rho;
  }
  // Remainder: Taylor coefficient of order n evaluated over the whole cell.
  std::vector<Interval> fc = recip_log_jet(hull(u, v), n, wp);
  Interval rem = mag_upper(fc[static_cast<size_t>(n)], wp) * int_iv(2, wp) * rpow /
                 int_iv(n + 1, wp);
  acc += Interval::plus_minus(rem);
  return acc;
}

// int_2^x dt/ln t for a thin interval x >= 2.
Interval li_point(const Interval& x, long n, Prec wp) {
  Interval two = int_iv(2, wp);
  Interval ratio = rat_iv(Rational(9, 8), wp);
  Interval acc = Interval::of(0.0, 0.0, wp);
  Interval lo = two;
  while (mpfr_cmp(lo.hi_raw(), x.lo_raw()) < 0) {
    Interval hi = (lo * ratio).hi_point(wp);
    if (mpfr_cmp(hi.hi_raw(), x.lo_raw()) >= 0) hi = x;
    acc += li_cell(lo, hi, n, wp);
    lo = hi;
  }
  return acc;
}

}  // namespace

Interval li_from_2(const Interval& x, Prec prec) {
  if (!x.is_finite()) throw DomainError("li_from_2: non-finite argument");
  mpfr_t two;
  mpfr_init2(two, 8);
  mpfr_set_si(two, 2, MPFR_RNDN);
  bool ok = mpfr_cmp(x.lo_raw(), two) >= 0;
  mpfr_clear(two);
  if (!ok) throw DomainError("li_from_2: argument must be >= 2");

  const Prec wp = prec + 16;
  long n = std::max<long>(32, static_cast<long>(prec) / 4 + 16);
  if (n % 2 == 1) ++n;

  Interval vlo = li_point(x.lo_point(wp), n, wp);
  Interval vhi = x.is_point() ? vlo : li_point(x.hi_point(wp), n, wp);
  return hull(vlo, vhi).round_to(prec);
}

// --------------------------------------------------------------------------
// Truncated symmetric Mellin integral.

namespace {

struct MellinCtx {
  Interval L;        // ln y
  Interval sigma;    // point-ish interval
  Interval sigma2;   // sigma^2
  Interval tol;      // absolute tolerance for the whole integral
  Interval Ttot;     // total length
  long n;            // jet order (even)
  Prec wp;
};

// Jet (order n inclusive) of g(t) = (sigma cos(tL) + t sin(tL))/(sigma^2+t^2)
// about center c, where c may be a point or the whole cell.
std::vector<Interval> mellin_jet(const MellinCtx& ctx, const Interval& c) {
  const long n = ctx.n;
  const Prec wp = ctx.wp;
  std::vector<Interval> cosj(static_cast<size_t>(n) + 1), sinj(static_cast<size_t>(n) + 1);
  Interval lc = ctx.L * c;
  Interval c0 = cos(lc), s0 = sin(lc);
  Interval lpow = int_iv(1, wp);  // L^k / k!
  for (long k = 0; k <= n; ++k) {
    if (k > 0) lpow = lpow * ctx.L / int_iv(k, wp);
    switch (k % 4) {
      case 0: cosj[static_cast<size_t>(k)] = lpow * c0; sinj[static_cast<size_t>(k)] = lpow * s0; break;
      case 1: cosj[static_cast<size_t>(k)] = -(lpow * s0); sinj[static_cast<size_t>(k)] = lpow * c0; break;
      case 2: cosj[static_cast<size_t>(k)] = -(lpow * c0); sinj[static_cast<size_t>(k)] = -(lpow * s0); break;
      default: cosj[static_cast<size_t>(k)] = lpow * s0; sinj[static_cast<size_t>(k)] = -(lpow * c0); break;
    }
  }
  // Numerator: sigma*cosj + t*sinj with t-jet (c, 1, 0, ...).
  std::vector<Interval> num(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    Interval v = ctx.sigma * cosj[static_cast<size_t>(k)] + c * sinj[static_cast<size_t>(k)];
    if (k >= 1) v += sinj[static_cast<size_t>(k - 1)];
    num[static_cast<size_t>(k)] = v;
  }
  // Denominator jet: (sigma^2 + c^2, 2c, 1, 0, ...). Divide.
  Interval d0 = ctx.sigma2 + c * c;
  Interval d1 = c * int_iv(2, wp);
  std::vector<Interval> g(static_cast<size_t>(n) + 1);
  for (long k = 0; k <= n; ++k) {
    Interval s = num[static_cast<size_t>(k)];
    if (k >= 1) s -= d1 * g[static_cast<size_t>(k - 1)];
    if (k >= 2) s -= g[static_cast<size_t>(k - 2)];
    g[static_cast<size_t>(k)] = s / d0;
  }
  return g;
}

// Integral of g over the cell [a, b] (thin endpoints), adding to acc.
// Bisects until the Taylor remainder passes the proportional tolerance.
void mellin_cell(const MellinCtx& ctx, const Interval& a, const Interval& b, int depth,
                 Interval& acc) {
  const Prec wp = ctx.wp;
  Interval half = rat_iv(Rational(1, 2), wp);
  Interval c = (a + b) * half;
  Interval rho = (b - a) * half;

  // Remainder bound from the order-n coefficient over the whole cell.
  std::vector<Interval> gcell = mellin_jet(ctx, hull(a, b));
  Interval rpow_n = pow(rho, ctx.n + 1);
  Interval rem = mag_upper(gcell[static_cast<size_t>(ctx.n)], wp) * int_iv(2, wp) * rpow_n /
                 int_iv(ctx.n + 1, wp);
  Interval budget = ctx.tol * (b - a) / ctx.Ttot;
  if (depth < 48 && !rem.certainly_le(budget)) {
    Interval mid = c.hi_point(wp);
    mellin_cell(ctx, a, mid, depth + 1, acc);
    mellin_cell(ctx, mid, b, depth + 1, acc);
    return;
  }
  if (!rem.is_finite()) throw PrecisionError("mellin_truncated: cell refinement failed");

  std::vector<Interval> g = mellin_jet(ctx, c);
  Interval cell = Interval::of(0.0, 0.0, wp);
  Interval rpow = rho;
  for (long k = 0; k <= ctx.n - 1; ++k) {
    if (k % 2 == 0) {
      cell += g[static_cast<size_t>(k)] * int_iv(2, wp) * rpow / int_iv(k + 1, wp);
    }
    rpow = rpow * rho;
  }
  cell += Interval::plus_minus(rem);
  acc += cell;
}

// Integral of g over [lo_pt, hi_pt], seeding cells that are fine near the
// t = 0 pole (distance sigma) and wherever the oscillation t*L is fast.
Interval mellin_range(const MellinCtx& ctx, const Interval& lo_pt, const Interval& hi_pt) {
  const Prec wp = ctx.wp;
  double sig = ctx.sigma.lo_double();
  double Lmag = std::max(std::abs(ctx.L.lo_double()), std::abs(ctx.L.hi_double()));
  double span = hi_pt.hi_double() - lo_pt.lo_double();
  Interval acc = Interval::of(0.0, 0.0, wp);
  if (!(span > 0)) {
    if (mpfr_cmp(lo_pt.lo_raw(), hi_pt.hi_raw()) >= 0) return acc;
    span = 1.0;
  }
  Interval t_lo = lo_pt;
  while (mpfr_cmp(t_lo.hi_raw(), hi_pt.lo_raw()) < 0) {
    double t = t_lo.hi_double();
    double h = 0.45 * std::sqrt(sig * sig + t * t);
    if (Lmag > 1e-300) h = std::min(h, static_cast<double>(ctx.n) / (4.0 * Lmag));
    h = std::max(h, span / 65536.0);
    Interval t_hi = (t_lo + Interval::of(h, h, wp)).hi_point(wp);
    if (mpfr_cmp(t_hi.hi_raw(), hi_pt.lo_raw()) >= 0) t_hi = hi_pt;
    mellin_cell(ctx, t_lo, t_hi, 0, acc);
    t_lo = t_hi;
  }
  return acc;
}

}  // namespace

Interval mellin_truncated(const Interval& y, const Interval& sigma, const Interval& T,
                          Prec prec) {
  if (!y.is_finite() || !sigma.is_finite() || !T.is_finite()) {
    throw DomainError("mellin_truncated: non-finite argument");
  }
  if (!y.certainly_positive() || !sigma.certainly_positive() || !T.certainly_positive()) {
    throw DomainError("mellin_truncated: y, sigma, T must be positive");
  }
  const Prec wp = prec + 16;

  MellinCtx ctx;
  ctx.wp = wp;
  ctx.L = log(y.round_to(wp));
  ctx.sigma = sigma.round_to(wp);
  ctx.sigma2 = ctx.sigma * ctx.sigma;
  ctx.Ttot = T.round_to(wp);
  long n = std::max<long>(24, static_cast<long>(prec) / 4);
  if (n % 2 == 1) ++n;
  ctx.n = n;
  long tolbits = std::min<long>(static_cast<long>(prec) - 8, 96);
  ctx.tol = rat_iv(Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(tolbits)), wp);

  Interval zero = Interval::of(0.0, 0.0, wp);
  Interval acc = mellin_range(ctx, zero, ctx.Ttot.lo_point(wp));
  if (!T.is_point()) {
    // The upper limit is itself uncertain: the integral over [T.lo, T.hi]
    // contributes anywhere between nothing and its full value.
    Interval extra = mellin_range(ctx, ctx.Ttot.lo_point(wp), ctx.Ttot.hi_point(wp));
    acc += hull(zero, extra);
  }

  Interval pref = pow(y.round_to(wp), ctx.sigma) / Interval::pi(wp);
  return (pref * acc).round_to(prec);
}

}  // namespace cheb
