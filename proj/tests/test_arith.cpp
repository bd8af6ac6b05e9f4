// Tests for prime sieving, class classification, and counting, against
// independent oracles implemented here: trial-division primality, a direct
// Jacobi-symbol evaluator, and naive prime-power double loops.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "cheb/arith.hpp"
#include "cheb/errors.hpp"

using namespace cheb;

namespace {

bool is_prime_td(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Jacobi symbol (a/n) for odd n > 0; independent of the library path.
int jacobi(long long a, long long n) {
  a %= n;
  if (a < 0) a += n;
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// Kronecker oracle for odd prime p not dividing D.
int kronecker_at_prime(long long D, long long p) { return jacobi(D, p); }

std::string fresh_dir() {
  char tmpl[] = "/tmp/cheb_cache_XXXXXX";
  REQUIRE(mkdtemp(tmpl) != nullptr);
  return tmpl;
}

}  // namespace

TEST_CASE("sieve agrees with trial division and known prime counts") {
  const std::vector<std::uint64_t> primes = sieve_primes(1000, kDefaultSieveBudget);
  std::vector<std::uint64_t> expect;
  for (std::uint64_t n = 2; n <= 1000; ++n)
    if (is_prime_td(n)) expect.push_back(n);
  CHECK(primes == expect);

  CHECK(sieve_primes(100, kDefaultSieveBudget).size() == 25);
  CHECK(sieve_primes(10000, kDefaultSieveBudget).size() == 1229);
  CHECK(sieve_primes(100000, kDefaultSieveBudget).size() == 9592);
}

TEST_CASE("sieve budget is enforced") {
  CHECK_THROWS_AS(sieve_primes(1000000, 10), BudgetExceeded);
}

TEST_CASE("kronecker symbol matches the Jacobi oracle") {
  std::mt19937 rng(5);
  const long Ds[] = {5, -4, -3, 12, 24, -8, 13};
  const std::vector<std::uint64_t> primes = sieve_primes(500, kDefaultSieveBudget);
  for (long D : Ds) {
    for (std::uint64_t p : primes) {
      if (p == 2 || (D >= 0 ? std::uint64_t(D) : std::uint64_t(-D)) % p == 0)
        continue;
      CHECK_MESSAGE(kronecker_symbol(D, p) ==
                        kronecker_at_prime(D, static_cast<long long>(p)),
                    "D=" << D << " p=" << p);
    }
  }
}

TEST_CASE("quadratic setup computes the fundamental discriminant") {
  CHECK(GaloisSetup::quadratic(5, {1}).discriminant() == 5);
  CHECK(GaloisSetup::quadratic(-1, {1}).discriminant() == -4);
  CHECK(GaloisSetup::quadratic(-3, {1}).discriminant() == -3);
  CHECK(GaloisSetup::quadratic(3, {1}).discriminant() == 12);
  CHECK(GaloisSetup::quadratic(6, {1}).discriminant() == 24);

  CHECK_THROWS_AS(GaloisSetup::quadratic(0, {1}), DomainError);
  CHECK_THROWS_AS(GaloisSetup::quadratic(1, {1}), DomainError);
  CHECK_THROWS_AS(GaloisSetup::quadratic(4, {1}), DomainError);
  CHECK_THROWS_AS(GaloisSetup::quadratic(12, {1}), DomainError);
  CHECK_THROWS_AS(GaloisSetup::quadratic(5, {}), DomainError);
  CHECK_THROWS_AS(GaloisSetup::quadratic(5, {2}), DomainError);
}

TEST_CASE("cyclotomic setup: degree, discriminant, class validation") {
  const GaloisSetup c5 = GaloisSetup::cyclotomic(5, {2});
  CHECK(field_invariants(c5).n_L == 4);
  CHECK(field_invariants(c5).abs_disc == BigInt(125));

  const GaloisSetup c4 = GaloisSetup::cyclotomic(4, {1, 3});
  CHECK(field_invariants(c4).n_L == 2);
  CHECK(field_invariants(c4).abs_disc == BigInt(4));

  const GaloisSetup c8 = GaloisSetup::cyclotomic(8, {3});
  CHECK(field_invariants(c8).n_L == 4);
  CHECK(field_invariants(c8).abs_disc == BigInt(256));

  CHECK_THROWS_AS(GaloisSetup::cyclotomic(2, {1}), DomainError);
  CHECK_THROWS_AS(GaloisSetup::cyclotomic(6, {1}), DomainError);
  CHECK_THROWS_AS(GaloisSetup::cyclotomic(4, {2}), DomainError);
}

TEST_CASE("class powers follow the group law") {
  const GaloisSetup q5 = GaloisSetup::quadratic(5, {1});
  CHECK(q5.class_power(-1, 2) == 1);
  CHECK(q5.class_power(-1, 3) == -1);
  CHECK(q5.class_power(1, 7) == 1);

  const GaloisSetup c5 = GaloisSetup::cyclotomic(5, {2});
  CHECK(c5.class_power(2, 2) == 4);
  CHECK(c5.class_power(2, 4) == 1);
  CHECK(c5.class_power(3, 2) == 4);
}

TEST_CASE("frobenius classification at small primes") {
  const GaloisSetup qi = GaloisSetup::quadratic(-1, {1, -1});
  CHECK(frobenius_class(qi, 2).ramified);
  CHECK(frobenius_class(qi, 5).element == 1);
  CHECK(frobenius_class(qi, 7).element == -1);

  const GaloisSetup c4 = GaloisSetup::cyclotomic(4, {1, 3});
  CHECK(frobenius_class(c4, 2).ramified);
  CHECK(frobenius_class(c4, 5).element == 1);
  CHECK(frobenius_class(c4, 7).element == 3);
}

TEST_CASE("class counts partition the primes") {
  for (std::uint64_t x : {100ULL, 10000ULL}) {
    const std::uint64_t pi_all =
        count_up_to(GaloisSetup::trivial_q(), x).pi_c;
    const CountResult plus = count_up_to(GaloisSetup::quadratic(5, {1}), x);
    const CountResult minus = count_up_to(GaloisSetup::quadratic(5, {-1}), x);
    CHECK(plus.pi_c + minus.pi_c + plus.ramified_seen == pi_all);
    CHECK(plus.ramified_seen == minus.ramified_seen);
  }
  CHECK(count_up_to(GaloisSetup::trivial_q(), 100).pi_c == 25);
  CHECK(count_up_to(GaloisSetup::trivial_q(), 10000).pi_c == 1229);
}

TEST_CASE("weighted counts match a naive prime-power double loop") {
  const std::uint64_t x = 10000;
  for (long cls : {1L, -1L}) {
    const CountResult got = count_up_to(GaloisSetup::quadratic(-1, {cls}), x);
    std::uint64_t pi = 0;
    double theta = 0, psi = 0;
    for (std::uint64_t p = 2; p <= x; ++p) {
      if (!is_prime_td(p)) continue;
      if (p == 2) continue;  // ramified: divides the discriminant -4
      const long elt = jacobi(-4, static_cast<long long>(p));
      const double lp = std::log(double(p));
      if (elt == cls) {
        pi += 1;
        theta += lp;
      }
      std::uint64_t pk = p;
      int k = 1;
      while (true) {
        const long powcls = (elt == -1 && k % 2 == 1) ? -1L : 1L;
        if (powcls == cls) psi += lp;
        if (pk > x / p) break;
        pk *= p;
        ++k;
      }
    }
    CHECK(got.pi_c == pi);
    CHECK(std::abs(got.theta_c - theta) < 1e-6);
    CHECK(std::abs(got.psi_c - psi) < 1e-6);
  }
}

TEST_CASE("full psi over the rationals matches a sieve oracle at 1e5") {
  const std::uint64_t x = 100000;
  const CountResult got = count_up_to(GaloisSetup::trivial_q(), x);
  std::vector<bool> comp(x + 1, false);
  double psi = 0;
  for (std::uint64_t p = 2; p <= x; ++p) {
    if (comp[p]) continue;
    for (std::uint64_t m = p * p; m <= x; m += p) comp[m] = true;
    const double lp = std::log(double(p));
    for (std::uint64_t pk = p; pk <= x; pk *= p) {
      psi += lp;
      if (pk > x / p) break;
    }
  }
  CHECK(std::abs(got.psi_c - psi) < 1e-6);
  CHECK(got.psi_c >= got.theta_c);
}

TEST_CASE("counts are monotone in x") {
  const GaloisSetup s = GaloisSetup::quadratic(5, {1});
  const CountResult a = count_up_to(s, 1000);
  const CountResult b = count_up_to(s, 10000);
  CHECK(a.pi_c <= b.pi_c);
  CHECK(a.theta_c <= b.theta_c);
  CHECK(a.psi_c <= b.psi_c);
}

TEST_CASE("two encodings of the Gaussian field agree exactly") {
  for (std::uint64_t x : {100ULL, 10000ULL}) {
    const CountResult a = count_up_to(GaloisSetup::cyclotomic(4, {3}), x);
    const CountResult b = count_up_to(GaloisSetup::quadratic(-1, {-1}), x);
    CHECK(a.pi_c == b.pi_c);
    CHECK(a.theta_c == b.theta_c);  // identical accumulation order: bitwise
    CHECK(a.psi_c == b.psi_c);
    CHECK(a.ramified_seen == b.ramified_seen);
  }
}

TEST_CASE("cache round-trips and survives corruption") {
  const std::string dir = fresh_dir();
  CountOptions opt;
  opt.cache_dir = dir;
  const GaloisSetup s = GaloisSetup::quadratic(5, {1});

  const CountResult first = count_up_to(s, 5000, opt);
  bool have_file = false;
  for (const auto& e : std::filesystem::directory_iterator(dir))
    if (e.path().extension() == ".counts") have_file = true;
  CHECK(have_file);

  const CountResult again = count_up_to(s, 5000, opt);
  CHECK(first.pi_c == again.pi_c);
  CHECK(first.theta_c == again.theta_c);
  CHECK(first.psi_c == again.psi_c);
  CHECK(first.ramified_seen == again.ramified_seen);

  // Corrupt every cache file; counting must silently recompute.
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    std::ofstream out(e.path(), std::ios::trunc);
    out << "not a cache\n";
  }
  const CountResult rec = count_up_to(s, 5000, opt);
  CHECK(first.pi_c == rec.pi_c);
  CHECK(first.theta_c == rec.theta_c);
  CHECK(first.psi_c == rec.psi_c);
}

TEST_CASE("comparison to the conditional bound holds with a wide margin") {
  const Comparison c =
      compare_to_bound(10000, GaloisSetup::quadratic(5, {1}), BoundMode::kGrh);
  CHECK(c.holds);
  CHECK(c.margin > 1.0);
  CHECK(c.expected.lo_double() > 600.0);
  CHECK(c.expected.hi_double() < 650.0);
  CHECK(c.pi_c == 609);

  const Comparison o = compare_to_bound(10000, GaloisSetup::quadratic(5, {1}),
                                        BoundMode::kOesterle);
  CHECK(o.rhs.hi_double() < c.rhs.lo_double());
}

TEST_CASE("comparison rejects tiny x") {
  CHECK_THROWS_AS(compare_to_bound(1, GaloisSetup::trivial_q(), BoundMode::kGrh),
                  DomainError);
}
