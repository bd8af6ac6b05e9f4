#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string_view>

#include "cheb/interval.hpp"
#include "cheb/rational.hpp"

namespace cheb {

struct ConstantExpr;
using ExprPtr = std::shared_ptr<ConstantExpr>;

// Closed-form constant expression: rational leaves, the named constants
// e, pi, gamma0 (Euler-Mascheroni), sqrt3, and the operators ln, exp, sqrt,
// negation, +, -, *, /, ^. Evaluable to an enclosure at any precision;
// no free variables.
struct ConstantExpr {
  enum class Kind {
    kRational,
    kE,
    kPi,
    kGamma0,
    kSqrt3,
    kLn,
    kExp,
    kSqrt,
    kNeg,
    kAdd,
    kSub,
    kMul,
    kDiv,
    kPow,
  };

  Kind kind = Kind::kRational;
  Rational value;                     // kRational only
  std::array<ExprPtr, 2> args{};      // unary ops use args[0]

  Interval eval(Prec prec) const;

  // Exact rational value when the subtree closes over rational arithmetic
  // (+, -, *, / and integer powers of rational leaves); nullopt as soon as a
  // transcendental constant or function is involved. Lets equality-tight
  // claims be decided exactly instead of staying undecided at every precision.
  std::optional<Rational> eval_exact() const;
};

// Convenience constructors for building expression trees in code.
struct ExprBuilder {
  static ExprPtr rat(const Rational& q);
  static ExprPtr rat(long num, long den);
  static ExprPtr integer(long v);
  static ExprPtr e();
  static ExprPtr pi();
  static ExprPtr gamma0();
  static ExprPtr sqrt3();
  static ExprPtr ln(ExprPtr a);
  static ExprPtr exp(ExprPtr a);
  static ExprPtr sqrt(ExprPtr a);
  static ExprPtr neg(ExprPtr a);
  static ExprPtr add(ExprPtr a, ExprPtr b);
  static ExprPtr sub(ExprPtr a, ExprPtr b);
  static ExprPtr mul(ExprPtr a, ExprPtr b);
  static ExprPtr div(ExprPtr a, ExprPtr b);
  static ExprPtr pow(ExprPtr a, ExprPtr b);

 private:
  static ExprPtr named(ConstantExpr::Kind k);
  static ExprPtr unary(ConstantExpr::Kind k, ExprPtr a);
  static ExprPtr binary(ConstantExpr::Kind k, ExprPtr a, ExprPtr b);
};

// Parses the small arithmetic grammar used by the rationalize command:
// numbers (decimal/scientific, exact), e, pi, gamma0, ln(), exp(), sqrt(),
// + - * / ^ and parentheses. Throws ParseError.
ExprPtr parse_expression(std::string_view text);

}  // namespace cheb
