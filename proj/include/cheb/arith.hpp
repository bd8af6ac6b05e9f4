#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cheb/bounds.hpp"
#include "cheb/interval.hpp"
#include "cheb/rational.hpp"

namespace cheb {

inline constexpr std::uint64_t kDefaultSieveBudget = 100'000'000;

// All primes <= limit, ascending. BudgetExceeded when limit > budget.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit,
                                        std::uint64_t budget = kDefaultSieveBudget);

// Kronecker symbol (D|n) for a fundamental-discriminant-sized D.
int kronecker_symbol(long D, std::uint64_t n);

// The abelian settings whose Frobenius classes we can enumerate directly:
// the trivial extension, a quadratic field, or a cyclotomic field.
// Conjugacy classes are labeled by:
//   trivial:    1 (identity)
//   quadratic:  +1 / -1 (value of the Kronecker symbol at unramified p)
//   cyclotomic: residues a mod m with gcd(a, m) = 1.
class GaloisSetup {
 public:
  enum class Family { kTrivialQ, kQuadratic, kCyclotomic };

  static GaloisSetup trivial_q();
  // d squarefree, d != 0, d != 1.
  static GaloisSetup quadratic(long d, std::vector<long> classes);
  // m >= 3 and m != 2 (mod 4) (those moduli duplicate odd ones).
  static GaloisSetup cyclotomic(long m, std::vector<long> classes);

  Family family() const { return family_; }
  long parameter() const { return param_; }           // d or m
  long discriminant() const { return disc_; }          // quadratic: signed D
  const std::vector<long>& selected_classes() const { return classes_; }
  long group_order() const;                            // |G|
  std::vector<long> all_classes() const;
  bool class_selected(long label) const;
  // Power of a class label in the group (class^k), for prime-power terms.
  long class_power(long label, std::uint64_t k) const;

  std::string family_id() const;   // "q", "quad:5", "quad:-8", "cyclo:4"
  std::string class_id() const;    // selection, filename-safe ("1+3", "m1")

  // Degrees, |d_L|, and class density for the bounds module (base field Q).
  FieldParams field_params() const;
  BigInt abs_discriminant() const;

 private:
  GaloisSetup() = default;
  Family family_ = Family::kTrivialQ;
  long param_ = 0;
  long disc_ = 1;  // quadratic only: fundamental discriminant
  std::vector<long> classes_{1};
};

struct FrobeniusClassification {
  std::uint64_t prime = 0;
  bool ramified = false;
  long element = 0;  // class label; meaningful only when !ramified
};

FrobeniusClassification frobenius_class(const GaloisSetup& setup, std::uint64_t p);

// pi_C / theta_C / psi_C up to x. theta/psi are compensated double sums
// (deterministic, fixed order); ramified primes contribute to none of the
// three and are tallied separately.
struct CountResult {
  std::uint64_t x = 0;
  std::uint64_t pi_c = 0;
  double theta_c = 0.0;
  double psi_c = 0.0;
  std::uint64_t ramified_seen = 0;
};

struct CountOptions {
  std::uint64_t sieve_budget = kDefaultSieveBudget;
  std::string cache_dir;  // empty: no caching
};

CountResult count_up_to(const GaloisSetup& setup, std::uint64_t x,
                        const CountOptions& opt = {});

// Field invariants of the setup's extension over Q.
struct FieldInvariants {
  long n_L = 1;
  BigInt abs_disc = 1;
  long group_order = 1;
};
FieldInvariants field_invariants(const GaloisSetup& setup);

enum class BoundMode { kGrh, kGrhPrecise, kOesterle };

// |pi_C(x) - (|C|/|G|) Li(x)| against the selected pi-deviation bound.
struct Comparison {
  std::uint64_t x = 0;
  std::uint64_t pi_c = 0;
  Interval expected;  // (|C|/|G|) Li(x)
  Interval lhs;       // |pi_c - expected|
  Interval rhs;       // bound value
  bool holds = false; // lhs.hi <= rhs.lo
  double margin = 0;  // rhs.lo / lhs.hi
  std::vector<std::string> flags;
};

Comparison compare_to_bound(std::uint64_t x, const GaloisSetup& setup,
                            BoundMode mode, const CountOptions& opt = {},
                            Prec prec = kDefaultPrec);

}  // namespace cheb
