// Acceptance gate: one pass/fail line per shipped criterion, exit code =
// number of failures. argv[1] = CLI binary, argv[2] = zero-table path.
#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cheb/arith.hpp"
#include "cheb/audit.hpp"
#include "cheb/bounds.hpp"
#include "cheb/complex_interval.hpp"
#include "cheb/errors.hpp"
#include "cheb/interval.hpp"
#include "cheb/rational.hpp"
#include "cheb/special.hpp"
#include "cheb/zeros.hpp"

using namespace cheb;

namespace {

int g_failures = 0;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void report(int index, const std::string& name, bool pass,
            const std::string& detail, double secs) {
  std::printf("[%s] C%d %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str(), secs);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

Interval iv_rat(const Rational& q, Prec prec) {
  return Interval::from_rational(q, prec);
}

// ---------------------------------------------------------------------------
// C1: spot audit of the headline catalog constants.

void criterion_1() {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  const std::vector<std::string> ids = {
      "s2_69_4",  "s3_65_3",      "r1_73_4",   "nchi_1075_134", "ll_571_25",
      "fe_19683_812", "dig_827_36", "dig_164_7", "hm_8945_9"};
  try {
    int verified = 0;
    for (const auto& id : ids) {
      const AuditReport r = run_audit_item(find_audit_item(id), 256);
      if (r.status == AuditStatus::kVerified) {
        ++verified;
      } else {
        pass = false;
        detail << id << " not verified at 256 bits; ";
      }
    }
    const AuditReport deep = run_audit_item(find_audit_item("ll_50096_255"), 512);
    const bool decided = deep.status == AuditStatus::kVerified ||
                         deep.status == AuditStatus::kRefuted;
    if (!decided) {
      pass = false;
      detail << "ll_50096_255 undecided at 512 bits; ";
    }
    detail << verified << "/9 verified at 256 bits, ll_50096_255 "
           << status_name(deep.status) << " with slack in ["
           << deep.slack.lo_string(6) << ", " << deep.slack.hi_string(6) << "]";
  } catch (const Error& e) {
    pass = false;
    detail << "exception: " << e.what();
  }
  const double secs = timer.seconds();
  if (secs >= 10.0) {
    pass = false;
    detail << "; over the 10 s budget";
  }
  report(1, "constants audit", pass, detail.str(), secs);
}

// ---------------------------------------------------------------------------
// C2: truncated Mellin inversion inequalities on the 10 x 10 x 5 grid.

void criterion_2() {
  Timer timer;
  const Prec prec = 96;
  const std::vector<Rational> ys = {
      Rational(1, 10), Rational(3, 10), Rational(1, 2), Rational(7, 10),
      Rational(9, 10), Rational(1),     Rational(11, 10), Rational(3, 2),
      Rational(2),     Rational(3)};
  const std::vector<Rational> sigmas = {
      Rational(1, 2), Rational(3, 5), Rational(3, 4), Rational(9, 10),
      Rational(1),    Rational(11, 10), Rational(5, 4), Rational(3, 2),
      Rational(7, 4), Rational(2)};
  const std::vector<Rational> Ts = {Rational(5), Rational(10), Rational(50),
                                    Rational(100), Rational(500)};
  const Rational one(1);
  long cells = 0, violations = 0;
  std::ostringstream first;
  for (const auto& ry : ys) {
    for (const auto& rs : sigmas) {
      for (const auto& rT : Ts) {
        ++cells;
        const Interval y = iv_rat(ry, prec);
        const Interval sg = iv_rat(rs, prec);
        const Interval Tt = iv_rat(rT, prec);
        const Interval M = mellin_truncated(y, sg, Tt, prec);
        bool ok = false;
        if (ry == one) {
          const Interval lhs = abs(M - iv_rat(Rational(1, 2), prec));
          ok = lhs.certainly_le(sg / Tt);
        } else {
          const Interval target =
              ry > one ? Interval::point(1L, prec) : Interval::point(0L, prec);
          const Interval lhs = abs(M - target);
          const Interval ypow = exp(sg * log(y));
          const Interval tln = Tt * abs(log(y));
          // lhs <= y^sigma * min(1, 1/(T|ln y|)) is the conjunction of
          // lhs <= y^sigma and lhs <= y^sigma / (T|ln y|).
          ok = lhs.certainly_le(ypow) && lhs.certainly_le(ypow / tln);
        }
        if (!ok) {
          ++violations;
          if (violations == 1)
            first << "; first at y=" << to_string(ry)
                  << " sigma=" << to_string(rs) << " T=" << to_string(rT);
        }
      }
    }
  }
  std::ostringstream detail;
  detail << cells << " cells, " << violations << " violations" << first.str();
  report(2, "Mellin truncation inequalities", violations == 0 && cells == 500,
         detail.str(), timer.seconds());
}

// ---------------------------------------------------------------------------
// C3: digamma magnitude bounds, 10^4 samples per region.

void criterion_3() {
  Timer timer;
  const Prec prec = 64;
  const int N = 10000;
  const Interval pi_iv = Interval::pi(prec);
  const Interval one = Interval::point(1L, prec);
  const Interval two = Interval::point(2L, prec);
  long violations = 0;
  std::ostringstream first;
  auto record = [&](const char* region, double re, double im) {
    ++violations;
    if (violations == 1)
      first << "; first in region " << region << " at z = " << re << " + "
            << im << "i";
  };

  // Region 1: Re z >= a with a >= 1; |psi(z)| <= ln|z| + pi/2 + 1/a.
  {
    std::mt19937 rng(1001);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < N; ++i) {
      const double a = 1.0 + 9.0 * U(rng);
      const double re = a + 50.0 * U(rng);
      const double im = -50.0 + 100.0 * U(rng);
      const ComplexInterval z = ComplexInterval::point(re, im, prec);
      const Interval bound =
          log(abs(z)) + pi_iv / two + one / Interval::point(a, prec);
      if (!abs(digamma(z, prec)).certainly_le(bound)) record("Re>=a", re, im);
    }
  }

  // Region 2: |Im z| >= b with b >= 1; |psi(z)| <= ln|z| + pi(1+1/2b) + 1/2b.
  {
    std::mt19937 rng(1002);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int i = 0; i < N; ++i) {
      const double b = 1.0 + 9.0 * U(rng);
      const double sign = U(rng) < 0.5 ? -1.0 : 1.0;
      const double im = sign * (b + 50.0 * U(rng));
      const double re = -50.0 + 100.0 * U(rng);
      const ComplexInterval z = ComplexInterval::point(re, im, prec);
      const Interval inv2b = one / (two * Interval::point(b, prec));
      const Interval bound = log(abs(z)) + pi_iv * (one + inv2b) + inv2b;
      if (!abs(digamma(z, prec)).certainly_le(bound)) record("|Im|>=b", re, im);
    }
  }

  // Region 3: |z+k| >= 1/8 for every integer k >= 0; |psi(z)| <= ln|z| + 83/5.
  {
    std::mt19937 rng(1003);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    const Interval c835 = iv_rat(Rational(83, 5), prec);
    int done = 0;
    while (done < N) {
      const double re = -30.0 + 33.0 * U(rng);
      const double im = -3.0 + 6.0 * U(rng);
      const long k = std::max(0L, std::lround(-re));
      if (std::hypot(re + static_cast<double>(k), im) < 0.125 + 1e-9) continue;
      ++done;
      const ComplexInterval z = ComplexInterval::point(re, im, prec);
      const Interval bound = log(abs(z)) + c835;
      if (!abs(digamma(z, prec)).certainly_le(bound))
        record("|z+k|>=1/8", re, im);
    }
  }

  const double secs = timer.seconds();
  bool pass = violations == 0;
  std::ostringstream detail;
  detail << 3 * N << " samples, " << violations << " violations" << first.str();
  if (secs >= 30.0) {
    pass = false;
    detail << "; over the 30 s budget";
  }
  report(3, "digamma region bounds", pass, detail.str(), secs);
}

// ---------------------------------------------------------------------------
// C4: window zero counts against the density bound, t = 0..999.

void criterion_4(const ZeroTable& table) {
  Timer timer;
  const Prec prec = 128;
  CharacterParams zeta;
  zeta.ln_A = Interval::point(0.0, prec);
  zeta.n_E = 1;
  zeta.a_chi = 1;
  zeta.b_chi = 0;
  zeta.is_principal = true;

  long violations = 0;
  long max_count = 0;
  std::ostringstream first;
  try {
    for (long t = 0; t <= 999; ++t) {
      const double td = static_cast<double>(t);
      const long cnt =
          count_zeros_window(td, table) + count_zeros_window(-td, table);
      max_count = std::max(max_count, cnt);
      const Interval bound =
          nchi_bound(Interval::point(td, prec), zeta, prec);
      if (!(static_cast<double>(cnt) <= bound.lo_double())) {
        ++violations;
        if (violations == 1) first << "; first at t=" << t;
      }
    }
  } catch (const Error& e) {
    violations = 1000;
    first << "; exception: " << e.what();
  }
  std::ostringstream detail;
  detail << "1000 centers, " << violations
         << " violations, max window count " << max_count << first.str();
  report(4, "zero-density window bound", violations == 0, detail.str(),
         timer.seconds());
}

// ---------------------------------------------------------------------------
// C5: explicit-formula residuals on the (x, T) grid.

void criterion_5(const ZeroTable& table) {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  double worst = 0.0;
  try {
    for (const double x : {100.0, 1000.0, 10000.0}) {
      for (const double T : {50.0, 100.0, 500.0}) {
        const ExplicitFormulaResidual r =
            check_explicit_formula(x, T, table, 128);
        const double ratio = r.residual / r.bound.lo_double();
        worst = std::max(worst, ratio);
        if (!r.holds || !(ratio < 0.1)) {
          pass = false;
          detail << "cell x=" << x << " T=" << T << " ratio=" << ratio << "; ";
        }
      }
    }
  } catch (const Error& e) {
    pass = false;
    detail << "exception: " << e.what();
  }
  const double secs = timer.seconds();
  if (secs >= 60.0) {
    pass = false;
    detail << "; over the 60 s budget";
  }
  detail << "9 cells, worst residual/bound = " << worst;
  report(5, "explicit-formula residuals", pass, detail.str(), secs);
}

// ---------------------------------------------------------------------------
// C6: Frobenius counting against the conditional deviation bound.

void criterion_6() {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  const std::vector<std::uint64_t> xs = {10000, 100000, 1000000};
  const CountOptions opt;  // no cache: cold every run
  double min_margin = 1e300;
  try {
    const std::vector<GaloisSetup> setups = {
        GaloisSetup::cyclotomic(4, {1}), GaloisSetup::cyclotomic(4, {3}),
        GaloisSetup::quadratic(5, {1}), GaloisSetup::quadratic(5, {-1})};
    for (const auto& setup : setups) {
      for (const std::uint64_t x : xs) {
        const Comparison c = compare_to_bound(x, setup, BoundMode::kGrh, opt, 128);
        min_margin = std::min(min_margin, c.margin);
        if (!c.holds || !(c.margin > 10.0)) {
          pass = false;
          detail << setup.family_id() << " x=" << x << " margin=" << c.margin
                 << "; ";
        }
      }
    }

    // Partition identity: the two classes plus ramified primes tile pi(x).
    for (const std::uint64_t x : xs) {
      const std::uint64_t pi_x = count_up_to(GaloisSetup::trivial_q(), x, opt).pi_c;
      const CountResult c4a = count_up_to(GaloisSetup::cyclotomic(4, {1}), x, opt);
      const CountResult c4b = count_up_to(GaloisSetup::cyclotomic(4, {3}), x, opt);
      const CountResult q5a = count_up_to(GaloisSetup::quadratic(5, {1}), x, opt);
      const CountResult q5b = count_up_to(GaloisSetup::quadratic(5, {-1}), x, opt);
      if (c4a.pi_c + c4b.pi_c + c4a.ramified_seen != pi_x ||
          q5a.pi_c + q5b.pi_c + q5a.ramified_seen != pi_x) {
        pass = false;
        detail << "partition identity broken at x=" << x << "; ";
      }
      if (x == 1000000 && pi_x != 78498) {
        pass = false;
        detail << "pi(10^6) = " << pi_x << " != 78498; ";
      }
    }

    // Independent trial-division oracle over the tail block (999000, 10^6].
    auto is_prime_td = [](std::uint64_t n) {
      if (n < 2) return false;
      for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
      return true;
    };
    std::uint64_t tail_td = 0;
    for (std::uint64_t n = 999001; n <= 1000000; ++n)
      if (is_prime_td(n)) ++tail_td;
    const std::uint64_t tail_sieve =
        count_up_to(GaloisSetup::trivial_q(), 1000000, opt).pi_c -
        count_up_to(GaloisSetup::trivial_q(), 999000, opt).pi_c;
    if (tail_td != tail_sieve) {
      pass = false;
      detail << "trial-division tail " << tail_td << " != sieve tail "
             << tail_sieve << "; ";
    }
  } catch (const Error& e) {
    pass = false;
    detail << "exception: " << e.what();
  }
  const double secs = timer.seconds();
  if (secs >= 120.0) {
    pass = false;
    detail << "; over the 120 s budget";
  }
  detail << "12 bound cells, min margin = " << min_margin
         << "; partitions exact";
  report(6, "Frobenius-count deviation bound", pass, detail.str(), secs);
}

// ---------------------------------------------------------------------------
// C7: psi - theta gap envelope.

void criterion_7() {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  const Prec prec = 128;
  const CountOptions opt;
  double worst_frac = 0.0;
  try {
    std::vector<GaloisSetup> setups = {GaloisSetup::trivial_q()};
    for (const long d : {5L, -1L}) {
      setups.push_back(GaloisSetup::quadratic(d, {1}));
      setups.push_back(GaloisSetup::quadratic(d, {-1}));
    }
    const std::vector<std::uint64_t> xs = {10, 100, 1000, 10000, 100000};
    for (const auto& setup : setups) {
      const FieldParams p = setup.field_params();
      for (const std::uint64_t x : xs) {
        const CountResult c = count_up_to(setup, x, opt);
        const double gap = c.psi_c - c.theta_c;
        const Interval envelope = theta_from_psi_gap(
            Interval::point(static_cast<double>(x), prec), p, prec);
        if (!(gap >= 0.0) || !(gap <= envelope.lo_double())) {
          pass = false;
          detail << setup.family_id() << "/" << setup.class_id()
                 << " x=" << x << " gap=" << gap << "; ";
        }
        worst_frac = std::max(worst_frac, gap / envelope.lo_double());
      }
    }
  } catch (const Error& e) {
    pass = false;
    detail << "exception: " << e.what();
  }
  detail << "25 cells, max gap/envelope = " << worst_frac;
  report(7, "psi-theta gap envelope", pass, detail.str(), timer.seconds());
}

// ---------------------------------------------------------------------------
// C8: zero-free-region scan, genuine pass + synthetic catch.

void criterion_8(const ZeroTable& table) {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  try {
    const FieldParams q;
    const ZeroFreeReport good = check_zero_free_region(table, q, 128);
    if (!good.ok || !good.violations.empty() || !(good.min_ordinate > 14.0)) {
      pass = false;
      detail << "genuine table scan failed; ";
    }

    ZeroTable bad = table;
    bad.ordinates.insert(bad.ordinates.begin(), 13.9);
    const ZeroFreeReport caught = check_zero_free_region(bad, q, 128);
    bool detected = false;
    for (const auto& v : caught.violations)
      if (std::abs(v.gamma - 13.9) < 1e-12) detected = true;
    if (caught.ok || !detected) {
      pass = false;
      detail << "synthetic 13.9 ordinate not flagged; ";
    }
    detail << good.zeros_checked << " zeros scanned, min ordinate "
           << good.min_ordinate << ", min margin " << good.min_margin
           << ", synthetic injection " << (detected ? "detected" : "missed");
  } catch (const Error& e) {
    pass = false;
    detail << "exception: " << e.what();
  }
  report(8, "zero-free-region scan", pass, detail.str(), timer.seconds());
}

// ---------------------------------------------------------------------------
// C9: byte-identical machine output across reruns and thread counts.

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& bin, const std::string& args) {
  const std::string cmd = bin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  if (status != -1 && WIFEXITED(status)) r.code = WEXITSTATUS(status);
  return r;
}

void criterion_9(const std::string& bin, const std::string& zeros) {
  Timer timer;
  bool pass = true;
  std::ostringstream detail;
  const std::vector<std::string> commands = {
      "audit",
      "bound --theorem pi-grh --nl 2 --nk 1 --lndl 1.3862944 --ratio 0.5 "
      "--x 1e6",
      "count --family quad:5 --class 1 --x 1000",
      "compare --family quad:5 --class 1 --x 1000",
      "--zeros " + zeros + " zeros nchi --t 14",
      "--zeros " + zeros + " zeros explicit --x 1000 --T 500",
      "--zeros " + zeros + " zeros region",
      "rationalize --expr '4*e*ln(3)/ln(2)'"};
  int checked = 0;
  for (const auto& base : commands) {
    for (const std::string fmt : {"csv", "json"}) {
      std::vector<std::string> outs;
      int code0 = -1;
      for (const std::string threads : {"1", "8", "1", "8"}) {
        const RunResult r = run_cli(
            bin, "--format " + fmt + " --threads " + threads + " " + base);
        if (outs.empty()) code0 = r.code;
        if (r.code != code0) {
          pass = false;
          detail << "exit-code drift on '" << base << "'; ";
        }
        outs.push_back(r.out);
      }
      ++checked;
      if (code0 != 0) {
        pass = false;
        detail << "nonzero exit on '" << base << "' (" << fmt << "); ";
        continue;
      }
      for (std::size_t i = 1; i < outs.size(); ++i) {
        if (outs[i] != outs[0]) {
          pass = false;
          detail << "byte drift on '" << base << "' (" << fmt << "); ";
          break;
        }
      }
      if (outs[0].empty()) {
        pass = false;
        detail << "empty output on '" << base << "' (" << fmt << "); ";
      }
    }
  }
  detail << checked << " command/format pairs, 4 runs each";
  report(9, "machine-output determinism", pass, detail.str(), timer.seconds());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <cli-binary> <zeros-table>\n", argv[0]);
    return 70;
  }
  const std::string bin = argv[1];
  const std::string zeros_file = argv[2];

  ZeroTable table;
  try {
    table = load_zeros(zeros_file);
  } catch (const Error& e) {
    std::fprintf(stderr, "cannot load zero table: %s\n", e.what());
    return 70;
  }

  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4(table);
  criterion_5(table);
  criterion_6();
  criterion_7();
  criterion_8(table);
  criterion_9(bin, zeros_file);

  if (g_failures == 0)
    std::printf("all 9 criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures;
}
