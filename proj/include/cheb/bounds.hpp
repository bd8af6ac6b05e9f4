#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cheb/interval.hpp"
#include "cheb/rational.hpp"

namespace cheb {

// ln|d_L| specification. Stored exactly (as |d_L| or a rational literal)
// whenever possible so that re-evaluation at higher precision refines.
class LnDisc {
 public:
  LnDisc() : kind_(Kind::kRationalValue), rat_(0) {}
  static LnDisc from_abs_disc(BigInt abs_disc);      // |d_L| >= 1
  static LnDisc from_rational(Rational v);           // ln|d_L| >= 0 exactly
  static LnDisc from_value(const Interval& v);       // precomputed enclosure
  Interval eval(Prec prec) const;
  bool is_exactly_zero() const;

 private:
  enum class Kind { kAbsDisc, kRationalValue, kInterval };
  Kind kind_;
  BigInt disc_;
  Rational rat_;
  Interval iv_;
};

// Galois-tower data every bound consumes: degrees n_L = [L:Q], n_K = [K:Q],
// |G| = [L:K], the class-density ratio |C|/|G|, and ln|d_L|.
struct FieldParams {
  long n_L = 1;
  long n_K = 1;
  long order_G = 1;
  Rational class_ratio = Rational(1);
  LnDisc ln_dL;

  // Throws DomainError when the tower data is inconsistent:
  // n_K must divide n_L, order_G*n_K = n_L, class_ratio in [0,1] with
  // class_ratio*order_G a nonnegative integer.
  void validate() const;
  // Advisory notes (e.g. ln|d_L| = 0, the unit-discriminant case).
  std::vector<std::string> advisory_flags() const;
};

// Per-character data for the single-L-function lemma bounds: ln A (conductor
// side), the degree n_E, and the archimedean split a + b = n_E.
struct CharacterParams {
  Interval ln_A = Interval::point(0.0);
  long n_E = 1;
  long a_chi = 1;
  long b_chi = 0;
  bool is_principal = false;

  void validate() const;  // a_chi + b_chi = n_E, counts nonnegative
};

struct BoundTerm {
  std::string label;
  Interval value;
  std::string anchor;  // formula skeleton this term implements
};

// Term-by-term decomposition of an evaluated bound. total is the directed
// interval sum of the terms in listed order (bit-reproducible).
struct BoundReport {
  Interval total;
  std::vector<BoundTerm> terms;
  std::vector<std::pair<std::string, std::string>> parameters_echo;
  std::vector<std::string> flags;
};

// Optional real zero near s = 1: chi0_sign is the character value on the
// class (+1/-1), or 0 meaning "no exceptional zero".
struct ExceptionalZero {
  int chi0_sign = 0;
  Interval beta0 = Interval::point(0.0);
  bool present() const { return chi0_sign != 0; }
};

enum class UncondVariant { kStatement, kProofA, kProofB };

// --- lemma-level evaluators -------------------------------------------------

// (2/ln2)ln(x)ln_dL/|G| + (73/4)n_K ln(x) + (145/6)n_K x ln^2(x)/T.
BoundReport r1_bound(const Interval& x, const Interval& T, const FieldParams& p,
                     Prec prec = kDefaultPrec);

// Window zero count: (5/2)[ln A + n_E(ln(|t|+3) + 1075/134)].
Interval nchi_bound(const Interval& t, const CharacterParams& c, Prec prec = kDefaultPrec);

// (1/8)(5pi^2 + 34 + 10/eps)ln A + (10842/107 + 1790/(157 eps))n_E, eps in (0,1].
Interval bchi_bound(const Interval& epsilon, const CharacterParams& c,
                    Prec prec = kDefaultPrec);

// (5/4)(1 + (7/4)pi^2)ln A + (n_E/2)ln(|t|+5)(57 + 35/(|t|+4))
//   + (50096/255)n_E + 53/6.
Interval lprime_partial_bound(const Interval& t, const CharacterParams& c,
                              Prec prec = kDefaultPrec);

// Five-term truncation bound; U must be a positive half-odd integer j + 1/2.
BoundReport truncation_bound(const Interval& x, const Interval& T, const Rational& U,
                             const CharacterParams& c, Prec prec = kDefaultPrec);

// Seven-term explicit-formula error bound, scaled by class_ratio.
BoundReport explicit_formula_error(const Interval& x, const Interval& T,
                                   const FieldParams& p, Prec prec = kDefaultPrec);

// Zero-free boundary abscissa at height gamma:
//   1 - (7-4sqrt3) / (22 ln_dL + n_L((5/2)ln(|g|+3) + 1078/67 + 2ln3) + 15/2).
// RegionError when |gamma| < 1/(1 + 4 ln_dL) (outside proven validity).
Interval zero_free_beta(const Interval& gamma, const FieldParams& p,
                        Prec prec = kDefaultPrec);

// --- theorem-level evaluators ----------------------------------------------

// GRH psi-deviation bound; precise=false is the compact two-coefficient form,
// precise=true the full lower-order expansion. Scaled by class_ratio.
BoundReport psi_grh_bound(const Interval& x, const FieldParams& p, bool precise,
                          Prec prec = kDefaultPrec);

// Unconditional psi-deviation envelope C*x*exp(-((7-4sqrt3)/5)sqrt(ln x/n_L))
// plus the exceptional term ratio*x^beta0/beta0 when present. Below the
// validity threshold exp(4 n_L (ln150867 + (44/5)ln_dL)^2) raises
// ThresholdError unless force (then the report is flagged).
BoundReport psi_uncond_bound(const Interval& x, const FieldParams& p,
                             const ExceptionalZero& ez,
                             UncondVariant variant = UncondVariant::kStatement,
                             bool force = false, Prec prec = kDefaultPrec);

// psi_C - theta_C gap envelope (22/15) n_K sqrt(x) ln(x).
Interval theta_from_psi_gap(const Interval& x, const FieldParams& p,
                            Prec prec = kDefaultPrec);

// GRH pi-deviation bound ratio*sqrt(x)[(32+181/lnx)ln_dL + (28lnx+330+1655/lnx)n_L].
BoundReport pi_grh_bound(const Interval& x, const FieldParams& p, Prec prec = kDefaultPrec);

// Sharper pi-deviation bound obtained here by Abel transfer from the precise
// theta-deviation envelope (rigorous cell-bracketed integral); not a bound
// displayed as such in the source material.
BoundReport pi_grh_precise_bound(const Interval& x, const FieldParams& p,
                                 Prec prec = kDefaultPrec);

// Comparison reference ratio*sqrt(x)[ln_dL(1/pi + 5.3/lnx) + n_L(2 + lnx/(2pi))];
// flagged "unproven comparison reference".
BoundReport pi_oesterle_bound(const Interval& x, const FieldParams& p,
                              Prec prec = kDefaultPrec);

// Unconditional pi bound: ratio*Li(x^beta0) (when present) plus
// 783846699796966*x*exp(-(1/99)sqrt(ln x/n_L)); threshold uses factor 8.
BoundReport pi_uncond_bound(const Interval& x, const FieldParams& p,
                            const ExceptionalZero& ez, bool force = false,
                            Prec prec = kDefaultPrec);

// --- auxiliary checks and presets -------------------------------------------

// True iff the parameters certainly satisfy d_L >= (pi/3)(3pi/4)^{n_L - 1}
// (n_L = 1 always passes). Undecided-at-precision reports false.
bool hermite_minkowski_check(const FieldParams& p, Prec prec = kAuditPrec);

// Real-zero envelope 1 - 1/(c * d_L^{1/n_L}).
Interval stark_beta_envelope(const FieldParams& p, const Interval& c,
                             Prec prec = kDefaultPrec);

// Validity threshold exp(multiplier * n_L * (ln 150867 + e44_5 * ln_dL)^2)
// where e44_5 is 44/5 when disc_exponent is true (the statement form) and 1
// otherwise (the variant appearing in one proof passage).
Interval uncond_threshold(const FieldParams& p, long multiplier, bool disc_exponent,
                          Prec prec = kDefaultPrec);

// Named T choices: sqrt(x) + 1, and the exponential unconditional choice
//   exp(sqrt(ln x/n_L)) / (b (a d_L)^{44/5}) - 3,
// with a = exp(15/44), b = 3^{4/5} exp(2156/335).
Interval preset_T_sqrt(const Interval& x, Prec prec = kDefaultPrec);
Interval preset_T_uncond(const Interval& x, const FieldParams& p,
                         Prec prec = kDefaultPrec);

}  // namespace cheb
