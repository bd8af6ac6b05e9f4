#include "cheb/bounds.hpp"

#include <mpfr.h>

#include <string>
#include <utility>
#include <vector>

#include "cheb/errors.hpp"
#include "cheb/special.hpp"

namespace cheb {

namespace {

Interval rc(long num, long den, Prec prec) {
  return Interval::from_rational(Rational(num, den), prec);
}

Interval ic(long v, Prec prec) { return Interval::point(v, prec); }

std::string ivs(const Interval& v) {
  return "[" + v.lo_string(17) + ", " + v.hi_string(17) + "]";
}

void require(bool ok, const char* msg) {
  if (!ok) throw DomainError(msg);
}

// Shared echo of the tower parameters.
void echo_field(BoundReport& r, const FieldParams& p, Prec prec) {
  r.parameters_echo.emplace_back("n_L", std::to_string(p.n_L));
  r.parameters_echo.emplace_back("n_K", std::to_string(p.n_K));
  r.parameters_echo.emplace_back("order_G", std::to_string(p.order_G));
  r.parameters_echo.emplace_back("class_ratio", to_string(p.class_ratio));
  r.parameters_echo.emplace_back("ln_dL", ivs(p.ln_dL.eval(prec)));
}

void echo_character(BoundReport& r, const CharacterParams& c, Prec prec) {
  r.parameters_echo.emplace_back("ln_A", ivs(c.ln_A.round_to(prec)));
  r.parameters_echo.emplace_back("n_E", std::to_string(c.n_E));
  r.parameters_echo.emplace_back("a_chi", std::to_string(c.a_chi));
  r.parameters_echo.emplace_back("b_chi", std::to_string(c.b_chi));
  r.parameters_echo.emplace_back("is_principal", c.is_principal ? "true" : "false");
}

// Sum the terms in listed order; the total is exactly this directed sum.
void finalize_total(BoundReport& r, Prec prec) {
  Interval total = Interval::point(0L, prec);
  for (const BoundTerm& t : r.terms) total += t.value;
  r.total = total;
}

}  // namespace

// --- LnDisc ------------------------------------------------------------------

LnDisc LnDisc::from_abs_disc(BigInt abs_disc) {
  if (abs_disc < 1) throw DomainError("absolute discriminant must be >= 1");
  LnDisc d;
  d.kind_ = Kind::kAbsDisc;
  d.disc_ = std::move(abs_disc);
  return d;
}

LnDisc LnDisc::from_rational(Rational v) {
  if (v < 0) throw DomainError("ln|d_L| must be nonnegative");
  LnDisc d;
  d.kind_ = Kind::kRationalValue;
  d.rat_ = std::move(v);
  return d;
}

LnDisc LnDisc::from_value(const Interval& v) {
  if (!v.is_finite()) throw DomainError("ln|d_L| enclosure must be finite");
  if (v.certainly_negative()) throw DomainError("ln|d_L| must be nonnegative");
  LnDisc d;
  d.kind_ = Kind::kInterval;
  d.iv_ = v;
  return d;
}

Interval LnDisc::eval(Prec prec) const {
  switch (kind_) {
    case Kind::kAbsDisc:
      return log(Interval::from_integer(disc_, prec));
    case Kind::kRationalValue:
      return Interval::from_rational(rat_, prec);
    case Kind::kInterval:
    default:
      return iv_.round_to(prec);
  }
}

bool LnDisc::is_exactly_zero() const {
  switch (kind_) {
    case Kind::kAbsDisc:
      return disc_ == 1;
    case Kind::kRationalValue:
      return rat_ == 0;
    case Kind::kInterval:
    default:
      return iv_.is_point() && iv_.contains_zero();
  }
}

// --- parameter structs ---------------------------------------------------------

void FieldParams::validate() const {
  require(n_L >= 1 && n_K >= 1 && order_G >= 1, "degrees must be positive");
  require(n_L % n_K == 0, "n_K must divide n_L");
  require(order_G * n_K == n_L, "order_G * n_K must equal n_L");
  require(class_ratio >= 0 && class_ratio <= 1, "class_ratio must lie in [0, 1]");
  Rational cls = class_ratio * Rational(order_G);
  require(cls.get_den() == 1, "class_ratio * order_G must be an integer");
}

std::vector<std::string> FieldParams::advisory_flags() const {
  std::vector<std::string> f;
  if (ln_dL.is_exactly_zero())
    f.push_back("ln|d_L| = 0: unit discriminant (rational base case)");
  return f;
}

void CharacterParams::validate() const {
  require(n_E >= 1, "n_E must be positive");
  require(a_chi >= 0 && b_chi >= 0, "archimedean counts must be nonnegative");
  require(a_chi + b_chi == n_E, "a_chi + b_chi must equal n_E");
  require(ln_A.is_finite() && !ln_A.certainly_negative(),
          "ln A must be a finite nonnegative enclosure");
}

// --- lemma-level evaluators ----------------------------------------------------

BoundReport r1_bound(const Interval& x, const Interval& T, const FieldParams& p,
                     Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");
  require(T.certainly_ge(Rational(1)), "T must be >= 1");

  const Interval X = x.round_to(prec), Tt = T.round_to(prec);
  const Interval lnx = log(X);
  const Interval lndl = p.ln_dL.eval(prec);

  BoundReport r;
  r.terms.push_back({"conductor-log term",
                     rc(2, 1, prec) / Interval::ln2(prec) * lnx * lndl / ic(p.order_G, prec),
                     "(2/ln2) ln(x) ln_dL / |G|"});
  r.terms.push_back({"degree-log term", rc(73, 4, prec) * ic(p.n_K, prec) * lnx,
                     "(73/4) n_K ln(x)"});
  r.terms.push_back({"window term",
                     rc(145, 6, prec) * ic(p.n_K, prec) * X * lnx * lnx / Tt,
                     "(145/6) n_K x ln^2(x) / T"});
  finalize_total(r, prec);
  r.parameters_echo.emplace_back("x", ivs(X));
  r.parameters_echo.emplace_back("T", ivs(Tt));
  echo_field(r, p, prec);
  r.flags = p.advisory_flags();
  return r;
}

Interval nchi_bound(const Interval& t, const CharacterParams& c, Prec prec) {
  c.validate();
  const Interval at = abs(t.round_to(prec));
  const Interval lnA = c.ln_A.round_to(prec);
  return rc(5, 2, prec) *
         (lnA + ic(c.n_E, prec) * (log(at + ic(3, prec)) + rc(1075, 134, prec)));
}

Interval bchi_bound(const Interval& epsilon, const CharacterParams& c, Prec prec) {
  c.validate();
  const Interval eps = epsilon.round_to(prec);
  require(eps.certainly_positive() && eps.certainly_le(Rational(1)),
          "epsilon must lie in (0, 1]");
  const Interval pi = Interval::pi(prec);
  const Interval lnA = c.ln_A.round_to(prec);
  const Interval lead =
      rc(1, 8, prec) * (ic(5, prec) * pi * pi + ic(34, prec) + ic(10, prec) / eps);
  const Interval deg = rc(10842, 107, prec) + rc(1790, 157, prec) / eps;
  return lead * lnA + deg * ic(c.n_E, prec);
}

Interval lprime_partial_bound(const Interval& t, const CharacterParams& c, Prec prec) {
  c.validate();
  const Interval at = abs(t.round_to(prec));
  const Interval pi = Interval::pi(prec);
  const Interval lnA = c.ln_A.round_to(prec);
  const Interval lead = rc(5, 4, prec) * (ic(1, prec) + rc(7, 4, prec) * pi * pi);
  const Interval mid = rc(1, 2, prec) * ic(c.n_E, prec) * log(at + ic(5, prec)) *
                       (ic(57, prec) + ic(35, prec) / (at + ic(4, prec)));
  return lead * lnA + mid + rc(50096, 255, prec) * ic(c.n_E, prec) + rc(53, 6, prec);
}

BoundReport truncation_bound(const Interval& x, const Interval& T, const Rational& U,
                             const CharacterParams& c, Prec prec) {
  c.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");
  require(T.certainly_ge(Rational(2)), "T must be >= 2");
  require(U > 0 && U.get_den() == 2, "U must be a positive half-odd integer j + 1/2");

  const Interval X = x.round_to(prec), Tt = T.round_to(prec);
  const Interval lnx = log(X);
  const Interval lnA = c.ln_A.round_to(prec);
  const Interval nE = ic(c.n_E, prec);
  const Interval e = Interval::e(prec), pi = Interval::pi(prec);
  const Interval Uiv = Interval::from_rational(U, prec);
  const Interval q = lnA + nE * (log(Tt + ic(5, prec)) + rc(1075, 268, prec));
  const Interval Tm1 = Tt - ic(1, prec);

  BoundReport r;
  r.terms.push_back({"main-window term",
                     rc(65, 8, prec) * e / pi * X * lnx / Tm1 * q,
                     "(65e/8pi) x ln(x)/(T-1) [lnA + n_E(ln(T+5) + 1075/268)]"});
  r.terms.push_back({"secondary-window term", rc(5, 2, prec) * e / pi * X / Tm1 * q,
                     "(5e/2pi) x/(T-1) [lnA + n_E(ln(T+5) + 1075/268)]"});
  r.terms.push_back(
      {"derivative term",
       e / pi * X / (Tt * lnx) *
           (rc(571, 25, prec) * lnA +
            nE * (rc(57, 2, prec) * log(Tt + ic(5, prec)) + rc(5921, 28, prec))),
       "(e/pi) x/(T ln x) [(571/25)lnA + n_E((57/2)ln(T+5) + 5921/28)]"});
  r.terms.push_back(
      {"left-line term",
       exp(-Uiv * lnx) * Tt / (pi * Uiv) *
           (lnA + nE * (log(Uiv + Tt + ic(2, prec)) + rc(19683, 812, prec))),
       "x^{-U} T/(pi U) [lnA + n_E(ln(U+T+2) + 19683/812)]"});
  r.terms.push_back({"low-zero term",
                     ic(4, prec) * nE * exp(rc(-1, 4, prec) * lnx) /
                         (ic(17, prec) * pi * Tt * lnx * lnx),
                     "4 n_E x^{-1/4} / (17 pi T ln^2 x)"});
  finalize_total(r, prec);
  r.parameters_echo.emplace_back("x", ivs(X));
  r.parameters_echo.emplace_back("T", ivs(Tt));
  r.parameters_echo.emplace_back("U", to_string(U));
  echo_character(r, c, prec);
  return r;
}

BoundReport explicit_formula_error(const Interval& x, const Interval& T,
                                   const FieldParams& p, Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");
  require(T.certainly_ge(Rational(2)), "T must be >= 2");

  const Interval X = x.round_to(prec), Tt = T.round_to(prec);
  const Interval lnx = log(X);
  const Interval lndl = p.ln_dL.eval(prec);
  const Interval nL = ic(p.n_L, prec);
  const Interval e = Interval::e(prec), pi = Interval::pi(prec);
  const Interval ratio = Interval::from_rational(p.class_ratio, prec);
  const Interval Q = lndl + nL * (log(Tt + ic(5, prec)) + rc(1075, 268, prec));
  const Interval Tm1 = Tt - ic(1, prec);

  BoundReport r;
  auto add = [&](const char* label, const Interval& raw, const char* anchor) {
    r.terms.push_back({label, ratio * raw, anchor});
  };
  add("window-count term", rc(145, 6, prec) * nL * X * lnx * lnx / Tt,
      "|C|/|G| (145/6) n_L x ln^2(x) / T");
  add("main-window term", rc(65, 8, prec) * e / pi * X * lnx / Tm1 * Q,
      "|C|/|G| (65e/8pi) x ln(x)/(T-1) [ln_dL + n_L(ln(T+5) + 1075/268)]");
  add("secondary-window term",
      rc(5, 2, prec) * (e / pi + ic(1, prec)) * X / Tm1 * Q,
      "|C|/|G| (5/2)(e/pi + 1) x/(T-1) [ln_dL + n_L(ln(T+5) + 1075/268)]");
  add("derivative term",
      e / pi * X / (Tt * lnx) *
          (rc(571, 25, prec) * lndl +
           nL * (rc(57, 2, prec) * log(Tt + ic(5, prec)) + rc(5921, 28, prec))),
      "|C|/|G| (e/pi) x/(T ln x) [(571/25)ln_dL + n_L((57/2)ln(T+5) + 5921/28)]");
  add("log-level term", lnx * (rc(2, 1, prec) / Interval::ln2(prec) * lndl +
                               rc(77, 4, prec) * nL),
      "|C|/|G| ln(x) [(2/ln2)ln_dL + (77/4)n_L]");
  add("constant term", rc(94, 7, prec) * lndl + rc(3817, 30, prec) * nL,
      "|C|/|G| [(94/7)ln_dL + (3817/30)n_L]");
  add("low-zero term",
      ic(4, prec) * nL * exp(rc(-1, 4, prec) * lnx) /
          (ic(17, prec) * pi * Tt * lnx * lnx),
      "|C|/|G| 4 n_L x^{-1/4} / (17 pi T ln^2 x)");
  finalize_total(r, prec);
  r.parameters_echo.emplace_back("x", ivs(X));
  r.parameters_echo.emplace_back("T", ivs(Tt));
  echo_field(r, p, prec);
  r.flags = p.advisory_flags();
  return r;
}

Interval zero_free_beta(const Interval& gamma, const FieldParams& p, Prec prec) {
  p.validate();
  const Interval g = abs(gamma.round_to(prec));
  const Interval lndl = p.ln_dL.eval(prec);
  const Interval floor_height =
      ic(1, prec) / (ic(1, prec) + ic(4, prec) * lndl);
  if (!g.certainly_ge(floor_height))
    throw RegionError("|gamma| below the proven validity height 1/(1 + 4 ln_dL)");
  const Interval num = ic(7, prec) - ic(4, prec) * Interval::sqrt3(prec);
  const Interval den =
      ic(22, prec) * lndl +
      ic(p.n_L, prec) * (rc(5, 2, prec) * log(g + ic(3, prec)) +
                         rc(1078, 67, prec) +
                         rc(2, 1, prec) * log(ic(3, prec))) +
      rc(15, 2, prec);
  return ic(1, prec) - num / den;
}

// --- theorem-level evaluators --------------------------------------------------

namespace {

// Compact GRH deviation coefficient shared by the psi and theta forms; the
// theta form only changes the middle degree coefficient.
Interval grh_compact_raw(const Interval& sqx, const Interval& lnx,
                         const Interval& lndl, long n_L, const Rational& mid_coeff,
                         Prec prec) {
  const Interval disc = (rc(23, 3, prec) + rc(4781, 96, prec) / lnx) * lndl;
  const Interval deg =
      (rc(863, 31, prec) * lnx + Interval::from_rational(mid_coeff, prec) +
       rc(58681, 113, prec) / lnx) *
      Interval::point(n_L, prec);
  return sqx * lnx * (disc + deg);
}

}  // namespace

BoundReport psi_grh_bound(const Interval& x, const FieldParams& p, bool precise,
                          Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");

  const Interval X = x.round_to(prec);
  const Interval lnx = log(X);
  const Interval sqx = sqrt(X);
  const Interval lndl = p.ln_dL.eval(prec);
  const Interval nL = ic(p.n_L, prec);
  const Interval ratio = Interval::from_rational(p.class_ratio, prec);

  BoundReport r;
  if (!precise) {
    const Interval disc =
        sqx * lnx * (rc(23, 3, prec) + rc(4781, 96, prec) / lnx) * lndl;
    const Interval deg = sqx * lnx *
                         (rc(863, 31, prec) * lnx + rc(68, 3, prec) +
                          rc(58681, 113, prec) / lnx) *
                         nL;
    r.terms.push_back({"conductor term", ratio * disc,
                       "|C|/|G| sqrt(x) ln(x) (23/3 + 4781/(96 ln x)) ln_dL"});
    r.terms.push_back(
        {"degree term", ratio * deg,
         "|C|/|G| sqrt(x) ln(x) ((863/31)ln x + 68/3 + 58681/(113 ln x)) n_L"});
  } else {
    const Interval x34 = exp(rc(3, 4, prec) * lnx);
    const Interval disc =
        sqx * (rc(23, 3, prec) * lnx + rc(29, 3, prec) +
               rc(336, 17, prec) / lnx + rc(26, 9, prec) * lnx / sqx +
               rc(94, 7, prec) / sqx) *
        lndl;
    const Interval deg =
        sqx *
        (rc(863, 31, prec) * lnx * lnx + rc(68, 3, prec) * lnx +
         rc(1198, 13, prec) + rc(1343, 6, prec) / lnx +
         rc(77, 4, prec) * lnx / sqx + rc(3817, 30, prec) / sqx +
         rc(3, 40, prec) / (x34 * lnx * lnx)) *
        nL;
    r.terms.push_back({"conductor term", ratio * disc,
                       "|C|/|G| sqrt(x) [ (23/3)ln x + 29/3 + 336/(17 ln x) + "
                       "(26/9)ln x/sqrt(x) + (94/7)/sqrt(x) ] ln_dL"});
    r.terms.push_back({"degree term", ratio * deg,
                       "|C|/|G| sqrt(x) [ (863/31)ln^2 x + (68/3)ln x + 1198/13 + "
                       "1343/(6 ln x) + (77/4)ln x/sqrt(x) + (3817/30)/sqrt(x) + "
                       "3/(40 x^{3/4} ln^2 x) ] n_L"});
  }
  finalize_total(r, prec);
  r.parameters_echo.emplace_back("x", ivs(X));
  r.parameters_echo.emplace_back("form", precise ? "precise" : "compact");
  echo_field(r, p, prec);
  r.flags = p.advisory_flags();
  return r;
}

Interval uncond_threshold(const FieldParams& p, long multiplier, bool disc_exponent,
                          Prec prec) {
  const Interval lndl = p.ln_dL.eval(prec);
  const Interval coeff =
      disc_exponent ? rc(44, 5, prec) : Interval::point(1L, prec);
  const Interval base = log(ic(150867, prec)) + coeff * lndl;
  return exp(Interval::point(multiplier, prec) * ic(p.n_L, prec) * base * base);
}

namespace {

long uncond_envelope_constant(UncondVariant v) {
  switch (v) {
    case UncondVariant::kProofA:
      return 1505243591773L;
    case UncondVariant::kProofB:
      return 1505243592416L;
    case UncondVariant::kStatement:
    default:
      return 1505234280710L;
  }
}

const char* uncond_variant_name(UncondVariant v) {
  switch (v) {
    case UncondVariant::kProofA:
      return "proof-a";
    case UncondVariant::kProofB:
      return "proof-b";
    case UncondVariant::kStatement:
    default:
      return "statement";
  }
}

void validate_exceptional(const ExceptionalZero& ez, const FieldParams& p,
                          Prec prec) {
  require(ez.chi0_sign == -1 || ez.chi0_sign == 1,
          "chi0_sign must be -1 or +1 when an exceptional zero is present");
  require(ez.beta0.certainly_positive() &&
              ez.beta0.certainly_lt(Interval::point(1L, prec)),
          "beta0 must lie in (0, 1)");
  if (!p.ln_dL.is_exactly_zero()) {
    const Interval lndl = p.ln_dL.eval(prec);
    const Interval lb =
        Interval::point(1L, prec) -
        Interval::point(1L, prec) / (Interval::point(4L, prec) * lndl);
    require(ez.beta0.certainly_ge(lb),
            "beta0 must certainly satisfy beta0 >= 1 - 1/(4 ln_dL)");
  }
}

void check_threshold(BoundReport& r, const Interval& x, const FieldParams& p,
                     long multiplier, bool force, Prec prec) {
  const Interval threshold = uncond_threshold(p, multiplier, true, prec);
  if (!x.certainly_ge(threshold)) {
    if (!force)
      throw ThresholdError("x below the proven validity threshold",
                           threshold.lo_string(17), threshold.hi_string(17));
    r.flags.push_back("out of proven range: x below validity threshold " +
                      ivs(threshold) + " (forced evaluation)");
  }
}

}  // namespace

BoundReport psi_uncond_bound(const Interval& x, const FieldParams& p,
                             const ExceptionalZero& ez, UncondVariant variant,
                             bool force, Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");

  const Interval X = x.round_to(prec);
  const Interval lnx = log(X);
  const Interval ratio = Interval::from_rational(p.class_ratio, prec);

  BoundReport r;
  check_threshold(r, X, p, 4, force, prec);

  const Interval decay = exp(
      -(ic(7, prec) - ic(4, prec) * Interval::sqrt3(prec)) / ic(5, prec) *
      sqrt(lnx / ic(p.n_L, prec)));
  r.terms.push_back(
      {"envelope term",
       Interval::point(uncond_envelope_constant(variant), prec) * X * decay,
       "C x exp(-((7-4sqrt3)/5) sqrt(ln x / n_L))"});
  if (ez.present()) {
    validate_exceptional(ez, p, prec);
    const Interval b0 = ez.beta0.round_to(prec);
    r.terms.push_back({"exceptional-zero term", ratio * exp(b0 * lnx) / b0,
                       "|C|/|G| x^{beta0} / beta0"});
  }
  finalize_total(r, prec);
  r.parameters_echo.emplace_back("x", ivs(X));
  r.parameters_echo.emplace_back("variant", uncond_variant_name(variant));
  if (ez.present()) {
    r.parameters_echo.emplace_back("beta0", ivs(ez.beta0.round_to(prec)));
    r.parameters_echo.emplace_back("chi0_sign", std::to_string(ez.chi0_sign));
  }
  echo_field(r, p, prec);
  r.flags.push_back(
      "envelope constant differs across derivation stages "
      "(statement 1505234280710, intermediate 1505243591773 / 1505243592416); "
      "using the " + std::string(uncond_variant_name(variant)) + " value");
  for (auto& f : p.advisory_flags()) r.flags.push_back(f);
  return r;
}

Interval theta_from_psi_gap(const Interval& x, const FieldParams& p, Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");
  const Interval X = x.round_to(prec);
  return rc(22, 15, prec) * ic(p.n_K, prec) * sqrt(X) * log(X);
}

BoundReport pi_grh_bound(const Interval& x, const FieldParams& p, Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");

  const Interval X = x.round_to(prec);
  const Interval lnx = log(X);
  const Interval sqx = sqrt(X);
  const Interval lndl = p.ln_dL.eval(prec);
  const Interval ratio = Interval::from_rational(p.class_ratio, prec);

  BoundReport r;
  r.terms.push_back(
      {"conductor term",
       ratio * sqx * (ic(32, prec) + ic(181, prec) / lnx) * lndl,
       "|C|/|G| sqrt(x) (32 + 181/ln x) ln_dL"});
  r.terms.push_back(
      {"degree term",
       ratio * sqx *
           (ic(28, prec) * lnx + ic(330, prec) + ic(1655, prec) / lnx) *
           ic(p.n_L, prec),
       "|C|/|G| sqrt(x) (28 ln x + 330 + 1655/ln x) n_L"});
  finalize_total(r, prec);
  r.parameters_echo.emplace_back("x", ivs(X));
  echo_field(r, p, prec);
  r.flags = p.advisory_flags();
  return r;
}

namespace {

// Ratio-scaled compact theta-deviation envelope used by the transfer below.
Interval theta_dev_envelope(const Interval& t, const FieldParams& p,
                            const Interval& ratio, const Interval& lndl,
                            Prec prec) {
  const Interval lnt = log(t);
  return ratio *
         grh_compact_raw(sqrt(t), lnt, lndl, p.n_L, Rational(362, 15), prec);
}

}  // namespace

BoundReport pi_grh_precise_bound(const Interval& x, const FieldParams& p,
                                 Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");

  const Interval X = x.round_to(prec);
  const Interval lndl = p.ln_dL.eval(prec);
  const Interval ratio = Interval::from_rational(p.class_ratio, prec);
  const Interval growth = rc(21, 20, prec);

  // Integral of envelope(t)/(t ln^2 t) over geometric cells from 2 to x_end.
  auto integrate = [&](const Interval& from, const Interval& to) {
    Interval sum = Interval::point(0L, prec);
    Interval a = from;
    while (!a.certainly_ge(to)) {
      Interval b = min(a * growth, to);
      const Interval cell = hull(a, b);
      const Interval lnc = log(cell);
      sum += theta_dev_envelope(cell, p, ratio, lndl, prec) /
             (cell * lnc * lnc) * (b - a);
      a = b;
    }
    return sum;
  };

  const Interval two = Interval::point(2L, prec);
  const Interval xl = X.lo_point(prec), xh = X.hi_point(prec);
  Interval integral = integrate(two, xl);
  if (!X.is_point())
    integral += hull(Interval::point(0L, prec), integrate(xl, xh));

  BoundReport r;
  r.terms.push_back({"endpoint term",
                     theta_dev_envelope(X, p, ratio, lndl, prec) / log(X),
                     "theta-envelope(x) / ln x"});
  r.terms.push_back({"integral term", integral,
                     "integral_2^x theta-envelope(t) / (t ln^2 t) dt"});
  r.terms.push_back({"offset term",
                     ratio * rc(2, 1, prec) / Interval::ln2(prec),
                     "|C|/|G| 2/ln 2"});
  finalize_total(r, prec);
  r.parameters_echo.emplace_back("x", ivs(X));
  echo_field(r, p, prec);
  r.flags.push_back(
      "derived here by partial summation from the theta-deviation envelope; "
      "not itself a displayed bound");
  for (auto& f : p.advisory_flags()) r.flags.push_back(f);
  return r;
}

BoundReport pi_oesterle_bound(const Interval& x, const FieldParams& p, Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");

  const Interval X = x.round_to(prec);
  const Interval lnx = log(X);
  const Interval sqx = sqrt(X);
  const Interval pi_c = Interval::pi(prec);
  const Interval lndl = p.ln_dL.eval(prec);
  const Interval ratio = Interval::from_rational(p.class_ratio, prec);

  BoundReport r;
  r.terms.push_back(
      {"conductor term",
       ratio * sqx * (ic(1, prec) / pi_c + rc(53, 10, prec) / lnx) * lndl,
       "|C|/|G| sqrt(x) (1/pi + (53/10)/ln x) ln_dL"});
  r.terms.push_back(
      {"degree term",
       ratio * sqx * (ic(2, prec) + lnx / (ic(2, prec) * pi_c)) * ic(p.n_L, prec),
       "|C|/|G| sqrt(x) (2 + ln x/(2 pi)) n_L"});
  finalize_total(r, prec);
  r.parameters_echo.emplace_back("x", ivs(X));
  echo_field(r, p, prec);
  r.flags.push_back("unproven comparison reference");
  for (auto& f : p.advisory_flags()) r.flags.push_back(f);
  return r;
}

BoundReport pi_uncond_bound(const Interval& x, const FieldParams& p,
                            const ExceptionalZero& ez, bool force, Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");

  const Interval X = x.round_to(prec);
  const Interval lnx = log(X);
  const Interval ratio = Interval::from_rational(p.class_ratio, prec);

  BoundReport r;
  check_threshold(r, X, p, 8, force, prec);

  if (ez.present()) {
    validate_exceptional(ez, p, prec);
    const Interval b0 = ez.beta0.round_to(prec);
    const Interval xb = max(exp(b0 * lnx), Interval::point(2L, prec));
    r.terms.push_back({"exceptional-zero term", ratio * li_from_2(xb, prec),
                       "|C|/|G| Li(x^{beta0})"});
  }
  const Interval decay =
      exp(rc(-1, 99, prec) * sqrt(lnx / ic(p.n_L, prec)));
  r.terms.push_back({"envelope term",
                     Interval::point(783846699796966L, prec) * X * decay,
                     "783846699796966 x exp(-(1/99) sqrt(ln x / n_L))"});
  finalize_total(r, prec);
  r.parameters_echo.emplace_back("x", ivs(X));
  if (ez.present()) {
    r.parameters_echo.emplace_back("beta0", ivs(ez.beta0.round_to(prec)));
    r.parameters_echo.emplace_back("chi0_sign", std::to_string(ez.chi0_sign));
  }
  echo_field(r, p, prec);
  for (auto& f : p.advisory_flags()) r.flags.push_back(f);
  return r;
}

// --- auxiliary checks and presets ------------------------------------------------

bool hermite_minkowski_check(const FieldParams& p, Prec prec) {
  p.validate();
  if (p.n_L == 1) return true;
  const Interval pi = Interval::pi(prec);
  const Interval rhs = log(pi / ic(3, prec)) +
                       ic(p.n_L - 1, prec) * log(ic(3, prec) * pi / ic(4, prec));
  return p.ln_dL.eval(prec).certainly_ge(rhs);
}

Interval stark_beta_envelope(const FieldParams& p, const Interval& c, Prec prec) {
  p.validate();
  const Interval cc = c.round_to(prec);
  require(cc.certainly_positive(), "c must be certainly positive");
  const Interval lndl = p.ln_dL.eval(prec);
  return ic(1, prec) -
         ic(1, prec) / (cc * exp(lndl / ic(p.n_L, prec)));
}

Interval preset_T_sqrt(const Interval& x, Prec prec) {
  require(x.certainly_ge(Rational(2)), "x must be >= 2");
  const Interval X = x.round_to(prec);
  return sqrt(X) + Interval::point(1L, prec);
}

Interval preset_T_uncond(const Interval& x, const FieldParams& p, Prec prec) {
  p.validate();
  require(x.certainly_ge(Rational(2)), "x must be >= 2");
  const Interval X = x.round_to(prec);
  const Interval lndl = p.ln_dL.eval(prec);
  // 1/(b (a d_L)^{44/5}) with a = exp(15/44), b = 3^{4/5} exp(2156/335):
  // the log of the denominator is (4/5)ln 3 + 2156/335 + 3 + (44/5)ln_dL.
  const Interval lden = rc(4, 5, prec) * log(ic(3, prec)) +
                        rc(2156, 335, prec) + ic(3, prec) +
                        rc(44, 5, prec) * lndl;
  return exp(sqrt(log(X) / ic(p.n_L, prec)) - lden) - ic(3, prec);
}

}  // namespace cheb
