#include "cheb/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "cheb/arith.hpp"
#include "cheb/errors.hpp"

namespace cheb {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_positive_real(const std::string& text, std::size_t line_no,
                           const char* what) {
  const char* c = text.c_str();
  char* end = nullptr;
  double v = std::strtod(c, &end);
  if (end == c || end != c + text.size())
    throw ParseError(std::string("malformed ") + what + ": '" + text + "'", line_no);
  if (!std::isfinite(v))
    throw ParseError(std::string(what) + " must be finite", line_no);
  return v;
}

constexpr std::size_t kChunk = 4096;

}  // namespace

ZeroTable load_zeros(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open zeros file '" + path + "'");

  ZeroTable t;
  t.source_label = path;
  bool header_seen = false;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line[0] == '!') {
      const std::string key = "!complete-to";
      if (line.rfind(key, 0) != 0)
        throw ParseError("unknown directive '" + line + "'", line_no);
      std::string arg = trim(line.substr(key.size()));
      double h = parse_positive_real(arg, line_no, "completeness height");
      if (h <= 0) throw ParseError("completeness height must be positive", line_no);
      t.declared_height = h;
      header_seen = true;
      continue;
    }
    double v = parse_positive_real(line, line_no, "ordinate");
    if (v <= 0) throw MonotonicityError("ordinate must be positive", line_no);
    if (!t.ordinates.empty() && v <= t.ordinates.back())
      throw MonotonicityError("ordinates must be strictly increasing", line_no);
    t.ordinates.push_back(v);
  }
  if (!t.ordinates.empty()) {
    t.max_height = t.ordinates.back();
    t.complete = header_seen;
  }
  return t;
}

long count_zeros_window(double t, const ZeroTable& table) {
  if (!table.complete || std::abs(t) + 1.0 > table.max_height)
    throw WindowError("window [t-1, t+1] is not covered by the zeros table");
  const auto& v = table.ordinates;
  auto count_in = [&](double lo, double hi) -> long {
    if (hi < lo) return 0;
    auto b = std::lower_bound(v.begin(), v.end(), lo);
    auto e = std::upper_bound(v.begin(), v.end(), hi);
    return static_cast<long>(e - b);
  };
  // Tabulated ordinates in the window, plus mirrored conjugates (-gamma).
  return count_in(t - 1.0, t + 1.0) + count_in(-t - 1.0, -t + 1.0);
}

namespace {

struct Kahan {
  double sum = 0.0, c = 0.0;
  void add(double v) {
    double y = v - c;
    double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double s_x_t(double x, double T, const ZeroTable& table, int threads) {
  if (!(x >= 2.0)) throw DomainError("x must be >= 2");
  if (!(T >= 2.0)) throw DomainError("T must be >= 2");
  if (!table.complete || T > table.max_height)
    throw WindowError("T exceeds the zeros table coverage");

  // All zeros here sit on the half-line, so |rho| >= 1/2 always: the
  // small-|rho| correction sum is provably empty rather than omitted.
  const auto& v = table.ordinates;
  const std::size_t n = static_cast<std::size_t>(
      std::lower_bound(v.begin(), v.end(), T) - v.begin());  // strict gamma < T

  const double lnx = std::log(x);
  const double sqx = std::sqrt(x);
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> chunk_sum(chunks, 0.0);

  auto work = [&](std::size_t c0, std::size_t stride) {
    for (std::size_t ci = c0; ci < chunks; ci += stride) {
      Kahan k;
      const std::size_t lo = ci * kChunk, hi = std::min(n, lo + kChunk);
      for (std::size_t i = lo; i < hi; ++i) {
        const double g = v[i];
        const double theta = g * lnx;
        const double term =
            2.0 * sqx * (0.5 * std::cos(theta) + g * std::sin(theta)) /
            (0.25 + g * g);
        k.add(term);
      }
      chunk_sum[ci] = k.sum;
    }
  };

  if (threads <= 1 || chunks <= 1) {
    work(0, 1);
  } else {
    const std::size_t nt = std::min<std::size_t>(threads, chunks);
    std::vector<std::thread> pool;
    pool.reserve(nt);
    for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(work, t, nt);
    for (auto& th : pool) th.join();
  }

  // Ascending fixed-order merge: the result is independent of thread count.
  Kahan total;
  for (double s : chunk_sum) total.add(s);
  return total.sum;
}

ExplicitFormulaResidual check_explicit_formula(double x, double T,
                                               const ZeroTable& table, Prec prec,
                                               int threads) {
  if (!(x >= 2.0)) throw DomainError("x must be >= 2");
  if (!(T >= 2.0)) throw DomainError("T must be >= 2");

  ExplicitFormulaResidual r;
  r.x = x;
  r.T = T;

  const GaloisSetup setup = GaloisSetup::trivial_q();
  const CountResult counts =
      count_up_to(setup, static_cast<std::uint64_t>(std::floor(x)));
  r.psi_direct = counts.psi_c;
  r.s_sum = s_x_t(x, T, table, threads);
  r.residual = std::abs(r.psi_direct - x + r.s_sum);

  FieldParams q;  // defaults: degree 1, unit ratio, ln|d| = 0
  const BoundReport report = explicit_formula_error(
      Interval::point(x, prec), Interval::point(T, prec), q, prec);
  r.bound = report.total;
  r.holds = r.residual <= r.bound.lo_double();
  return r;
}

ZeroFreeReport check_zero_free_region(const ZeroTable& table, const FieldParams& p,
                                      Prec prec) {
  if (!table.complete)
    throw WindowError("zero-free scan requires a complete table");

  ZeroFreeReport rep;
  rep.zeros_checked = table.ordinates.size();
  rep.min_margin = std::numeric_limits<double>::infinity();
  rep.min_ordinate = table.ordinates.empty() ? 0.0 : table.ordinates.front();

  const double beta =
      Interval::from_rational(table.assumed_beta, prec).hi_double();
  for (std::size_t i = 0; i < table.ordinates.size(); ++i) {
    const double g = table.ordinates[i];
    if (p.n_L == 1 && g < 14.0)
      rep.violations.push_back(
          {i, g, "ordinate below 14, inside the excluded low window"});
    try {
      const Interval boundary =
          zero_free_beta(Interval::point(g, prec), p, prec);
      const double margin = boundary.lo_double() - beta;
      rep.min_margin = std::min(rep.min_margin, margin);
      if (margin <= 0)
        rep.violations.push_back(
            {i, g, "zero not strictly left of the zero-free boundary"});
    } catch (const RegionError&) {
      rep.violations.push_back(
          {i, g, "below the validity height of the zero-free bound"});
    }
  }
  if (table.ordinates.empty()) rep.min_margin = 0.0;
  rep.ok = rep.violations.empty();
  return rep;
}

}  // namespace cheb
