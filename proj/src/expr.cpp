#include "cheb/expr.hpp"

#include <cctype>
#include <cstdlib>
#include <memory>
#include <utility>

namespace cheb {

// ---------- rational parsing ----------

Rational rational_from_fraction(std::string_view s) {
  mpq_class q;
  if (q.set_str(std::string(s), 10) != 0)
    throw ParseError("malformed rational literal: '" + std::string(s) + "'", 1);
  if (q.get_den() == 0) throw ParseError("zero denominator", 1);
  q.canonicalize();
  return q;
}

Rational rational_from_decimal(std::string_view s) {
  // [sign] digits [. digits] [ (e|E) [sign] digits ]  -> exact rational
  std::size_t i = 0;
  auto fail = [&]() -> Rational {
    throw ParseError("malformed numeric literal: '" + std::string(s) + "'", 1);
  };
  if (s.empty()) return fail();
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
  std::string int_digits, frac_digits;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) int_digits += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) frac_digits += s[i++];
  }
  if (int_digits.empty() && frac_digits.empty()) return fail();
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
    if (i == s.size()) return fail();
    std::string ed;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed += s[i++];
    if (ed.empty() || ed.size() > 6) return fail();
    exp10 = std::strtol(ed.c_str(), nullptr, 10);
    if (eneg) exp10 = -exp10;
  }
  if (i != s.size()) return fail();
  BigInt mantissa((int_digits.empty() ? "0" : int_digits) + frac_digits, 10);
  long shift = exp10 - static_cast<long>(frac_digits.size());
  BigInt num = mantissa, den = 1;
  BigInt ten = 10;
  if (shift > 0) {
    BigInt f;
    mpz_pow_ui(f.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(shift));
    num *= f;
  } else if (shift < 0) {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-shift));
  }
  Rational q(num, den);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

Rational rational_from_string(std::string_view s) {
  if (s.find('/') != std::string_view::npos) return rational_from_fraction(s);
  return rational_from_decimal(s);
}

// ---------- constant-expression trees ----------

Interval ConstantExpr::eval(Prec prec) const {
  switch (kind) {
    case Kind::kRational:
      return Interval::from_rational(value, prec);
    case Kind::kE:
      return Interval::e(prec);
    case Kind::kPi:
      return Interval::pi(prec);
    case Kind::kGamma0:
      return Interval::euler_gamma(prec);
    case Kind::kSqrt3:
      return Interval::sqrt3(prec);
    case Kind::kLn:
      return log(args[0]->eval(prec));
    case Kind::kExp:
      return exp(args[0]->eval(prec));
    case Kind::kSqrt:
      return sqrt(args[0]->eval(prec));
    case Kind::kNeg:
      return -args[0]->eval(prec);
    case Kind::kAdd:
      return args[0]->eval(prec) + args[1]->eval(prec);
    case Kind::kSub:
      return args[0]->eval(prec) - args[1]->eval(prec);
    case Kind::kMul:
      return args[0]->eval(prec) * args[1]->eval(prec);
    case Kind::kDiv:
      return args[0]->eval(prec) / args[1]->eval(prec);
    case Kind::kPow: {
      // exact integer exponents use the monotone integer power
      if (args[1]->kind == Kind::kRational && args[1]->value.get_den() == 1 &&
          args[1]->value.get_num().fits_slong_p())
        return pow(args[0]->eval(prec), args[1]->value.get_num().get_si());
      return pow(args[0]->eval(prec), args[1]->eval(prec));
    }
  }
  throw Error("unreachable expression kind");
}

std::optional<Rational> ConstantExpr::eval_exact() const {
  switch (kind) {
    case Kind::kRational:
      return value;
    case Kind::kNeg: {
      auto a = args[0]->eval_exact();
      if (!a) return std::nullopt;
      return Rational(-*a);
    }
    case Kind::kAdd:
    case Kind::kSub:
    case Kind::kMul:
    case Kind::kDiv: {
      auto a = args[0]->eval_exact();
      auto b = args[1]->eval_exact();
      if (!a || !b) return std::nullopt;
      switch (kind) {
        case Kind::kAdd:
          return Rational(*a + *b);
        case Kind::kSub:
          return Rational(*a - *b);
        case Kind::kMul:
          return Rational(*a * *b);
        default:
          if (*b == 0) return std::nullopt;  // let the interval path report it
          return Rational(*a / *b);
      }
    }
    case Kind::kPow: {
      auto a = args[0]->eval_exact();
      auto b = args[1]->eval_exact();
      if (!a || !b || b->get_den() != 1 || !b->get_num().fits_slong_p())
        return std::nullopt;
      long n = b->get_num().get_si();
      if (n < 0) {
        if (*a == 0) return std::nullopt;
        Rational inv(a->get_den(), a->get_num());
        inv.canonicalize();
        a = inv;
        n = -n;
      }
      Rational out(1);
      BigInt num, den;
      mpz_pow_ui(num.get_mpz_t(), a->get_num().get_mpz_t(), static_cast<unsigned long>(n));
      mpz_pow_ui(den.get_mpz_t(), a->get_den().get_mpz_t(), static_cast<unsigned long>(n));
      out = Rational(num, den);
      out.canonicalize();
      return out;
    }
    default:
      return std::nullopt;  // transcendental constant or function
  }
}

ExprPtr ExprBuilder::rat(const Rational& q) {
  auto n = std::make_shared<ConstantExpr>();
  n->kind = ConstantExpr::Kind::kRational;
  n->value = q;
  return n;
}

ExprPtr ExprBuilder::rat(long num, long den) {
  Rational q{BigInt(num), BigInt(den)};
  q.canonicalize();
  return rat(q);
}
ExprPtr ExprBuilder::integer(long v) { return rat(Rational(static_cast<signed long>(v))); }

ExprPtr ExprBuilder::named(ConstantExpr::Kind k) {
  auto n = std::make_shared<ConstantExpr>();
  n->kind = k;
  return n;
}

ExprPtr ExprBuilder::e() { return named(ConstantExpr::Kind::kE); }
ExprPtr ExprBuilder::pi() { return named(ConstantExpr::Kind::kPi); }
ExprPtr ExprBuilder::gamma0() { return named(ConstantExpr::Kind::kGamma0); }
ExprPtr ExprBuilder::sqrt3() { return named(ConstantExpr::Kind::kSqrt3); }

ExprPtr ExprBuilder::unary(ConstantExpr::Kind k, ExprPtr a) {
  auto n = std::make_shared<ConstantExpr>();
  n->kind = k;
  n->args[0] = std::move(a);
  return n;
}

ExprPtr ExprBuilder::binary(ConstantExpr::Kind k, ExprPtr a, ExprPtr b) {
  auto n = std::make_shared<ConstantExpr>();
  n->kind = k;
  n->args[0] = std::move(a);
  n->args[1] = std::move(b);
  return n;
}

ExprPtr ExprBuilder::ln(ExprPtr a) { return unary(ConstantExpr::Kind::kLn, std::move(a)); }
ExprPtr ExprBuilder::exp(ExprPtr a) { return unary(ConstantExpr::Kind::kExp, std::move(a)); }
ExprPtr ExprBuilder::sqrt(ExprPtr a) { return unary(ConstantExpr::Kind::kSqrt, std::move(a)); }
ExprPtr ExprBuilder::neg(ExprPtr a) { return unary(ConstantExpr::Kind::kNeg, std::move(a)); }
ExprPtr ExprBuilder::add(ExprPtr a, ExprPtr b) {
  return binary(ConstantExpr::Kind::kAdd, std::move(a), std::move(b));
}
ExprPtr ExprBuilder::sub(ExprPtr a, ExprPtr b) {
  return binary(ConstantExpr::Kind::kSub, std::move(a), std::move(b));
}
ExprPtr ExprBuilder::mul(ExprPtr a, ExprPtr b) {
  return binary(ConstantExpr::Kind::kMul, std::move(a), std::move(b));
}
ExprPtr ExprBuilder::div(ExprPtr a, ExprPtr b) {
  return binary(ConstantExpr::Kind::kDiv, std::move(a), std::move(b));
}
ExprPtr ExprBuilder::pow(ExprPtr a, ExprPtr b) {
  return binary(ConstantExpr::Kind::kPow, std::move(a), std::move(b));
}

// ---------- tiny recursive-descent grammar ----------
// expr    := term (('+'|'-') term)*
// term    := factor (('*'|'/') factor)*
// factor  := unary ('^' factor)?          (right-assoc)
// unary   := '-' unary | primary
// primary := number | name | name '(' expr ')' | '(' expr ')'

namespace {

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError("expression parse error: " + what + " at offset " + std::to_string(pos), 1);
  }

  ExprPtr parse_expr() {
    ExprPtr a = parse_term();
    for (;;) {
      if (eat('+'))
        a = ExprBuilder::add(a, parse_term());
      else if (eat('-'))
        a = ExprBuilder::sub(a, parse_term());
      else
        return a;
    }
  }

  ExprPtr parse_term() {
    ExprPtr a = parse_factor();
    for (;;) {
      if (eat('*'))
        a = ExprBuilder::mul(a, parse_factor());
      else if (eat('/'))
        a = ExprBuilder::div(a, parse_factor());
      else
        return a;
    }
  }

  ExprPtr parse_factor() {
    ExprPtr a = parse_unary();
    if (eat('^')) return ExprBuilder::pow(a, parse_factor());
    return a;
  }

  ExprPtr parse_unary() {
    if (eat('-')) return ExprBuilder::neg(parse_unary());
    return parse_primary();
  }

  ExprPtr parse_primary() {
    skip_ws();
    if (pos >= src.size()) fail("unexpected end of input");
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_name();
    if (eat('(')) {
      ExprPtr a = parse_expr();
      if (!eat(')')) fail("missing ')'");
      return a;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  ExprPtr parse_number() {
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.'))
      ++pos;
    // scientific suffix: digits must follow 'e'/'E' (else 'e' is Euler's number)
    if (pos < src.size() && (src[pos] == 'e' || src[pos] == 'E')) {
      std::size_t save = pos;
      ++pos;
      if (pos < src.size() && (src[pos] == '+' || src[pos] == '-')) ++pos;
      if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
        while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      } else {
        pos = save;
      }
    }
    return ExprBuilder::rat(rational_from_decimal(src.substr(start, pos - start)));
  }

  ExprPtr parse_name() {
    std::size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_'))
      ++pos;
    std::string name(src.substr(start, pos - start));
    if (name == "e") return ExprBuilder::e();
    if (name == "pi") return ExprBuilder::pi();
    if (name == "gamma0") return ExprBuilder::gamma0();
    if (name == "ln" || name == "exp" || name == "sqrt") {
      if (!eat('(')) fail("expected '(' after function name");
      ExprPtr a = parse_expr();
      if (!eat(')')) fail("missing ')'");
      if (name == "ln") return ExprBuilder::ln(a);
      if (name == "exp") return ExprBuilder::exp(a);
      return ExprBuilder::sqrt(a);
    }
    fail("unknown name '" + name + "'");
  }
};

}  // namespace

ExprPtr parse_expression(std::string_view text) {
  Parser p{text};
  ExprPtr a = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return a;
}

}  // namespace cheb
