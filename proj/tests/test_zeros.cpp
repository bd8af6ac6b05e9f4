// Tests for zero-table ingestion, window counts, the oscillating zero sum,
// the explicit-formula residual, and the zero-free-region scan. The real
// table path arrives in the CHEB_ZEROS environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "cheb/bounds.hpp"
#include "cheb/errors.hpp"
#include "cheb/zeros.hpp"

using namespace cheb;

namespace {

std::string zeros_path() {
  const char* p = std::getenv("CHEB_ZEROS");
  REQUIRE_MESSAGE(p != nullptr, "CHEB_ZEROS must point at the zero table");
  return p;
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::trunc);
  out << content;
  return path.string();
}

}  // namespace

TEST_CASE("the shipped table loads complete past height 1000") {
  const ZeroTable t = load_zeros(zeros_path());
  CHECK(t.complete);
  CHECK(t.ordinates.size() >= 650);
  CHECK(t.max_height >= 1000.0);
  CHECK(t.ordinates.front() == doctest::Approx(14.134725141734693).epsilon(1e-9));
  for (std::size_t i = 1; i < t.ordinates.size(); ++i)
    CHECK(t.ordinates[i - 1] < t.ordinates[i]);
}

TEST_CASE("loader: malformed files fail with line numbers") {
  CHECK_THROWS_AS(load_zeros("/nonexistent/zeros.txt"), IoError);

  const std::string bad = write_temp("cheb_bad.txt", "abc\n");
  try {
    load_zeros(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }

  const std::string dec = write_temp("cheb_dec.txt", "14.13\n13.0\n");
  try {
    load_zeros(dec);
    FAIL("expected MonotonicityError");
  } catch (const MonotonicityError& e) {
    CHECK(e.line == 2);
  }

  const std::string neg = write_temp("cheb_neg.txt", "-1.0\n");
  CHECK_THROWS_AS(load_zeros(neg), MonotonicityError);

  const std::string badh = write_temp("cheb_badh.txt", "!complete-to abc\n");
  CHECK_THROWS_AS(load_zeros(badh), ParseError);

  const std::string badd = write_temp("cheb_badd.txt", "!unknown 5\n");
  CHECK_THROWS_AS(load_zeros(badd), ParseError);
}

TEST_CASE("loader: empty and header-only files stay incomplete") {
  const ZeroTable empty = load_zeros(write_temp("cheb_empty.txt", ""));
  CHECK(empty.ordinates.empty());
  CHECK_FALSE(empty.complete);

  const ZeroTable only =
      load_zeros(write_temp("cheb_onlyh.txt", "!complete-to 1000\n"));
  CHECK(only.ordinates.empty());
  CHECK_FALSE(only.complete);

  // Without the completeness directive the flag stays down even with data.
  const ZeroTable nohdr =
      load_zeros(write_temp("cheb_nohdr.txt", "14.1347\n21.0220\n"));
  CHECK_FALSE(nohdr.complete);
  CHECK(nohdr.max_height == doctest::Approx(21.0220));
}

TEST_CASE("window counts at integer centers") {
  const ZeroTable t = load_zeros(zeros_path());
  CHECK(count_zeros_window(14.0, t) == 1);
  CHECK(count_zeros_window(0.0, t) == 0);
  CHECK(count_zeros_window(-14.0, t) == 1);
  CHECK(count_zeros_window(21.0, t) == 1);  // second zero 21.022 is inside
  CHECK(count_zeros_window(17.0, t) == 0);  // [16, 18] sits between the first two
  CHECK(count_zeros_window(21.5, t) == 1);

  CHECK_THROWS_AS(count_zeros_window(1001.0, t), WindowError);

  const ZeroTable nohdr = load_zeros(
      write_temp("cheb_nohdr2.txt", "14.1347\n21.0220\n"));
  CHECK_THROWS_AS(count_zeros_window(14.0, nohdr), WindowError);
}

TEST_CASE("zero sum matches a direct complex-arithmetic oracle at T = 30") {
  const ZeroTable t = load_zeros(zeros_path());
  const double x = 100.0;
  double oracle = 0.0;
  for (int i = 0; i < 3; ++i) {  // exactly the ordinates below 30
    const std::complex<double> rho(0.5, t.ordinates[i]);
    oracle += 2.0 * std::real(std::pow(std::complex<double>(x, 0.0), rho) / rho);
  }
  CHECK(t.ordinates[2] < 30.0);
  CHECK(t.ordinates[3] > 30.0);
  const double s = s_x_t(x, 30.0, t);
  CHECK(std::abs(s - oracle) < 1e-9);
}

TEST_CASE("zero sum: strict cut, domain checks, thread determinism") {
  const ZeroTable t = load_zeros(zeros_path());
  // The cut excludes an ordinate sitting exactly at T.
  const double T = t.ordinates[10];
  const double with = s_x_t(50.0, std::nextafter(T, 1e9), t);
  const double without = s_x_t(50.0, T, t);
  CHECK(with != without);

  CHECK_THROWS_AS(s_x_t(1.0, 100.0, t), DomainError);
  CHECK_THROWS_AS(s_x_t(100.0, 1.0, t), DomainError);
  CHECK_THROWS_AS(s_x_t(100.0, 2000.0, t), WindowError);

  const double s1 = s_x_t(12345.0, 1000.0, t, 1);
  const double s4 = s_x_t(12345.0, 1000.0, t, 4);
  const double s8 = s_x_t(12345.0, 1000.0, t, 8);
  CHECK(s1 == s4);  // bitwise: fixed accumulation order
  CHECK(s1 == s8);
}

TEST_CASE("explicit formula: degenerate point x = 2, T = 2") {
  const ZeroTable t = load_zeros(zeros_path());
  const ExplicitFormulaResidual r = check_explicit_formula(2.0, 2.0, t, 128);
  CHECK(r.s_sum == 0.0);  // no ordinates below 2
  CHECK(r.residual ==
        doctest::Approx(2.0 - std::log(2.0)).epsilon(1e-12));
  CHECK(r.holds);  // the bound is enormous at this scale
}

TEST_CASE("explicit formula at the documented spot (x=100, T=236)") {
  const ZeroTable t = load_zeros(zeros_path());
  const ExplicitFormulaResidual r = check_explicit_formula(100.0, 236.0, t, 128);
  CHECK(r.holds);
  CHECK(r.residual < r.bound.lo_double());
  CHECK(r.residual / r.bound.lo_double() < 1.0);
}

TEST_CASE("zero-free scan passes on the genuine table") {
  const ZeroTable t = load_zeros(zeros_path());
  const ZeroFreeReport rep = check_zero_free_region(t, FieldParams{}, 128);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
  CHECK(rep.zeros_checked == t.ordinates.size());
  CHECK(rep.min_ordinate > 14.0);
  CHECK(rep.min_margin > 0.4);
  CHECK(rep.min_margin < 0.5);
}

TEST_CASE("zero-free scan detects a synthetic low ordinate") {
  std::string content = "!complete-to 30\n13.9\n";
  content += "14.134725141734693\n21.022039638771555\n25.010857580145688\n";
  const ZeroTable bad = load_zeros(write_temp("cheb_syn.txt", content));
  const ZeroFreeReport rep = check_zero_free_region(bad, FieldParams{}, 128);
  CHECK_FALSE(rep.ok);
  REQUIRE(!rep.violations.empty());
  bool found = false;
  for (const auto& v : rep.violations)
    if (std::abs(v.gamma - 13.9) < 1e-12) found = true;
  CHECK(found);
}

TEST_CASE("incomplete tables cannot be scanned") {
  const ZeroTable nohdr = load_zeros(
      write_temp("cheb_nohdr3.txt", "14.1347\n21.0220\n"));
  CHECK_THROWS_AS(check_zero_free_region(nohdr, FieldParams{}, 128),
                  WindowError);
}
