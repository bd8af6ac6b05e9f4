#include "cheb/arith.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "cheb/errors.hpp"
#include "cheb/special.hpp"

namespace cheb {

namespace {

// Compensated (Kahan) accumulator; fixed insertion order keeps results
// bit-reproducible across runs and thread counts.
struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

constexpr std::uint64_t kSegment = 1u << 20;

}  // namespace

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit, std::uint64_t budget) {
  if (limit > budget)
    throw BudgetExceeded("sieve limit " + std::to_string(limit) +
                         " exceeds budget " + std::to_string(budget));
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;

  // Base primes up to sqrt(limit) by a plain sieve.
  std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit)));
  while ((root + 1) * (root + 1) <= limit) ++root;
  std::vector<bool> base(root + 1, true);
  for (std::uint64_t i = 2; i * i <= root; ++i)
    if (base[i])
      for (std::uint64_t j = i * i; j <= root; j += i) base[j] = false;
  std::vector<std::uint64_t> base_primes;
  for (std::uint64_t i = 2; i <= root; ++i)
    if (base[i]) base_primes.push_back(i);

  std::vector<bool> seg;
  for (std::uint64_t lo = 2; lo <= limit; lo += kSegment) {
    std::uint64_t hi = std::min(limit, lo + kSegment - 1);
    seg.assign(hi - lo + 1, true);
    for (std::uint64_t p : base_primes) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, ((lo + p - 1) / p) * p);
      for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = false;
    }
    for (std::uint64_t v = lo; v <= hi; ++v)
      if (seg[v - lo]) primes.push_back(v);
  }
  return primes;
}

int kronecker_symbol(long D, std::uint64_t n) {
  BigInt a(D);
  return mpz_kronecker_ui(a.get_mpz_t(), static_cast<unsigned long>(n));
}

// --- GaloisSetup ---------------------------------------------------------------

namespace {

bool is_squarefree(long d) {
  long a = std::labs(d);
  for (long p = 2; p * p <= a; ++p) {
    if (a % (p * p) == 0) return false;
    while (a % p == 0) a /= p;
  }
  return true;
}

long euler_phi(long m) {
  long result = m, n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

long gcd_long(long a, long b) { return std::gcd(a, b); }

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % m);
}

}  // namespace

GaloisSetup GaloisSetup::trivial_q() {
  GaloisSetup s;
  s.family_ = Family::kTrivialQ;
  s.param_ = 0;
  s.disc_ = 1;
  s.classes_ = {1};
  return s;
}

GaloisSetup GaloisSetup::quadratic(long d, std::vector<long> classes) {
  if (d == 0 || d == 1) throw DomainError("quadratic parameter d must not be 0 or 1");
  if (!is_squarefree(d)) throw DomainError("quadratic parameter d must be squarefree");
  GaloisSetup s;
  s.family_ = Family::kQuadratic;
  s.param_ = d;
  long dm4 = ((d % 4) + 4) % 4;
  s.disc_ = (dm4 == 1) ? d : 4 * d;
  if (classes.empty()) throw DomainError("class selection must be nonempty");
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (long c : classes)
    if (c != 1 && c != -1)
      throw DomainError("quadratic class labels are +1 and -1");
  s.classes_ = std::move(classes);
  return s;
}

GaloisSetup GaloisSetup::cyclotomic(long m, std::vector<long> classes) {
  if (m < 3) throw DomainError("cyclotomic modulus must be >= 3");
  if (m % 4 == 2)
    throw DomainError("cyclotomic modulus 2 mod 4 duplicates the odd modulus m/2");
  GaloisSetup s;
  s.family_ = Family::kCyclotomic;
  s.param_ = m;
  s.disc_ = 0;
  if (classes.empty()) throw DomainError("class selection must be nonempty");
  for (long& c : classes) {
    c = ((c % m) + m) % m;
    if (gcd_long(c, m) != 1)
      throw DomainError("cyclotomic class labels must be units mod m");
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  s.classes_ = std::move(classes);
  return s;
}

long GaloisSetup::group_order() const {
  switch (family_) {
    case Family::kTrivialQ:
      return 1;
    case Family::kQuadratic:
      return 2;
    case Family::kCyclotomic:
    default:
      return euler_phi(param_);
  }
}

std::vector<long> GaloisSetup::all_classes() const {
  switch (family_) {
    case Family::kTrivialQ:
      return {1};
    case Family::kQuadratic:
      return {-1, 1};
    case Family::kCyclotomic:
    default: {
      std::vector<long> out;
      for (long a = 1; a < param_; ++a)
        if (gcd_long(a, param_) == 1) out.push_back(a);
      return out;
    }
  }
}

bool GaloisSetup::class_selected(long label) const {
  return std::binary_search(classes_.begin(), classes_.end(), label);
}

long GaloisSetup::class_power(long label, std::uint64_t k) const {
  switch (family_) {
    case Family::kTrivialQ:
      return 1;
    case Family::kQuadratic:
      return (label == -1 && (k % 2) == 1) ? -1 : 1;
    case Family::kCyclotomic:
    default: {
      std::uint64_t m = static_cast<std::uint64_t>(param_);
      std::uint64_t base = static_cast<std::uint64_t>(label) % m;
      std::uint64_t acc = 1 % m;
      std::uint64_t e = k;
      while (e > 0) {
        if (e & 1) acc = mulmod_u64(acc, base, m);
        base = mulmod_u64(base, base, m);
        e >>= 1;
      }
      return static_cast<long>(acc);
    }
  }
}

std::string GaloisSetup::family_id() const {
  switch (family_) {
    case Family::kTrivialQ:
      return "q";
    case Family::kQuadratic:
      return "quad:" + std::to_string(param_);
    case Family::kCyclotomic:
    default:
      return "cyclo:" + std::to_string(param_);
  }
}

std::string GaloisSetup::class_id() const {
  std::string out;
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (i) out += '+';
    long c = classes_[i];
    if (c < 0) {
      out += 'm';
      out += std::to_string(-c);
    } else {
      out += std::to_string(c);
    }
  }
  return out;
}

BigInt GaloisSetup::abs_discriminant() const {
  switch (family_) {
    case Family::kTrivialQ:
      return BigInt(1);
    case Family::kQuadratic:
      return BigInt(std::labs(disc_));
    case Family::kCyclotomic:
    default: {
      // |disc Q(zeta_m)| = m^phi(m) / prod_{p | m} p^{phi(m)/(p-1)}
      long m = param_, phi = euler_phi(param_);
      BigInt num;
      mpz_ui_pow_ui(num.get_mpz_t(), static_cast<unsigned long>(m),
                    static_cast<unsigned long>(phi));
      auto divide_out = [&](long p) {
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(phi / (p - 1)));
        num /= den;
      };
      long n = m;
      for (long p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        divide_out(p);
      }
      if (n > 1) divide_out(n);
      return num;
    }
  }
}

FieldParams GaloisSetup::field_params() const {
  FieldParams fp;
  fp.n_L = group_order();
  fp.n_K = 1;
  fp.order_G = fp.n_L;
  fp.class_ratio = Rational(static_cast<long>(classes_.size()), fp.n_L);
  fp.class_ratio.canonicalize();
  fp.ln_dL = LnDisc::from_abs_disc(abs_discriminant());
  fp.validate();
  return fp;
}

FrobeniusClassification frobenius_class(const GaloisSetup& setup, std::uint64_t p) {
  if (p < 2) throw DomainError("p must be a prime >= 2");
  FrobeniusClassification fc;
  fc.prime = p;
  switch (setup.family()) {
    case GaloisSetup::Family::kTrivialQ:
      fc.ramified = false;
      fc.element = 1;
      return fc;
    case GaloisSetup::Family::kQuadratic: {
      std::uint64_t absD = static_cast<std::uint64_t>(std::labs(setup.discriminant()));
      if (absD % p == 0) {
        fc.ramified = true;
        return fc;
      }
      fc.element = kronecker_symbol(setup.discriminant(), p);
      return fc;
    }
    case GaloisSetup::Family::kCyclotomic:
    default: {
      std::uint64_t m = static_cast<std::uint64_t>(setup.parameter());
      if (m % p == 0) {
        fc.ramified = true;
        return fc;
      }
      fc.element = static_cast<long>(p % m);
      return fc;
    }
  }
}

// --- counting with a text cache ---------------------------------------------------

namespace {

constexpr const char* kCacheMagic = "chebcount v1";

struct CacheEntry {
  std::uint64_t pi_c = 0;
  double theta_c = 0.0, psi_c = 0.0;
  std::uint64_t ramified = 0;
};

std::string hex_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

std::filesystem::path cache_path(const CountOptions& opt, const GaloisSetup& s) {
  std::string name = s.family_id() + "_" + s.class_id() + ".counts";
  for (char& c : name)
    if (c == ':') c = '_';
  return std::filesystem::path(opt.cache_dir) / name;
}

// Loads every entry; empty map when the file is absent or corrupt in any way
// (corrupt caches are silently recomputed, never trusted).
std::map<std::uint64_t, CacheEntry> load_cache(const std::filesystem::path& path) {
  std::map<std::uint64_t, CacheEntry> entries;
  std::ifstream in(path);
  if (!in) return entries;
  std::string line;
  if (!std::getline(in, line) || line != kCacheMagic) return entries;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::uint64_t x = 0;
    CacheEntry e;
    std::string theta_s, psi_s;
    if (!(ls >> x >> e.pi_c >> theta_s >> psi_s >> e.ramified)) return {};
    char* end = nullptr;
    e.theta_c = std::strtod(theta_s.c_str(), &end);
    if (end == nullptr || *end != '\0') return {};
    e.psi_c = std::strtod(psi_s.c_str(), &end);
    if (end == nullptr || *end != '\0') return {};
    std::string rest;
    if (ls >> rest) return {};
    entries[x] = e;
  }
  return entries;
}

void store_cache(const std::filesystem::path& path,
                 const std::map<std::uint64_t, CacheEntry>& entries) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::trunc);
  if (!out) return;  // caching is best-effort
  out << kCacheMagic << '\n';
  for (const auto& [x, e] : entries)
    out << x << ' ' << e.pi_c << ' ' << hex_double(e.theta_c) << ' '
        << hex_double(e.psi_c) << ' ' << e.ramified << '\n';
}

CountResult count_direct(const GaloisSetup& setup, std::uint64_t x,
                         const CountOptions& opt) {
  CountResult r;
  r.x = x;
  if (x < 2) return r;
  const std::vector<std::uint64_t> primes = sieve_primes(x, opt.sieve_budget);

  Kahan theta, psi;
  for (std::uint64_t p : primes) {
    FrobeniusClassification fc = frobenius_class(setup, p);
    if (fc.ramified) {
      ++r.ramified_seen;
      continue;
    }
    if (setup.class_selected(fc.element)) {
      ++r.pi_c;
      double lp = std::log(static_cast<double>(p));
      theta.add(lp);
      psi.add(lp);
    }
  }
  // Prime-power terms p^k <= x, k >= 2: sigma_p^k must land in the selection.
  for (std::uint64_t p : primes) {
    if (p * p > x) break;
    FrobeniusClassification fc = frobenius_class(setup, p);
    if (fc.ramified) continue;
    double lp = std::log(static_cast<double>(p));
    std::uint64_t pk = p * p;
    for (std::uint64_t k = 2;; ++k) {
      if (setup.class_selected(setup.class_power(fc.element, k))) psi.add(lp);
      if (pk > x / p) break;
      pk *= p;
    }
  }
  r.theta_c = theta.sum;
  r.psi_c = psi.sum;
  return r;
}

}  // namespace

CountResult count_up_to(const GaloisSetup& setup, std::uint64_t x,
                        const CountOptions& opt) {
  if (opt.cache_dir.empty()) return count_direct(setup, x, opt);

  const std::filesystem::path path = cache_path(opt, setup);
  std::map<std::uint64_t, CacheEntry> entries = load_cache(path);
  if (auto it = entries.find(x); it != entries.end()) {
    CountResult r;
    r.x = x;
    r.pi_c = it->second.pi_c;
    r.theta_c = it->second.theta_c;
    r.psi_c = it->second.psi_c;
    r.ramified_seen = it->second.ramified;
    return r;
  }
  CountResult r = count_direct(setup, x, opt);
  entries[x] = CacheEntry{r.pi_c, r.theta_c, r.psi_c, r.ramified_seen};
  store_cache(path, entries);
  return r;
}

FieldInvariants field_invariants(const GaloisSetup& setup) {
  FieldInvariants fi;
  fi.group_order = setup.group_order();
  fi.n_L = fi.group_order;
  fi.abs_disc = setup.abs_discriminant();
  return fi;
}

Comparison compare_to_bound(std::uint64_t x, const GaloisSetup& setup,
                            BoundMode mode, const CountOptions& opt, Prec prec) {
  if (x < 2) throw DomainError("x must be >= 2");
  Comparison cmp;
  cmp.x = x;

  const CountResult counts = count_up_to(setup, x, opt);
  cmp.pi_c = counts.pi_c;

  const FieldParams fp = setup.field_params();
  const Interval X = Interval::point(static_cast<long>(x), prec);
  const Interval li = li_from_2(X, prec);
  const Interval ratio = Interval::from_rational(fp.class_ratio, prec);
  cmp.expected = ratio * li;
  cmp.lhs = abs(Interval::point(static_cast<long>(counts.pi_c), prec) - cmp.expected);

  BoundReport report;
  switch (mode) {
    case BoundMode::kGrh:
      report = pi_grh_bound(X, fp, prec);
      break;
    case BoundMode::kGrhPrecise:
      report = pi_grh_precise_bound(X, fp, prec);
      break;
    case BoundMode::kOesterle:
    default:
      report = pi_oesterle_bound(X, fp, prec);
      break;
  }
  cmp.rhs = report.total;
  cmp.flags = report.flags;
  cmp.holds = cmp.lhs.certainly_le(cmp.rhs);
  double denom = cmp.lhs.hi_double();
  cmp.margin = denom > 0 ? cmp.rhs.lo_double() / denom
                         : std::numeric_limits<double>::infinity();
  return cmp;
}

}  // namespace cheb
