#include "cheb/cli.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cheb/arith.hpp"
#include "cheb/audit.hpp"
#include "cheb/bounds.hpp"
#include "cheb/cf.hpp"
#include "cheb/errors.hpp"
#include "cheb/expr.hpp"
#include "cheb/text_util.hpp"
#include "cheb/zeros.hpp"

namespace cheb {
namespace {

// Bad command-line input discovered after CLI11 parsing (e.g. a flag value
// that fails exact-rational parsing). Mapped to the usage exit code.
struct UsageFailure {
  std::string msg;
};

constexpr int kDigits = 17;

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt_u64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%" PRIu64, v);
  return buf;
}

std::string iv_pair(const Interval& v) {
  return "[" + v.lo_string(kDigits) + ", " + v.hi_string(kDigits) + "]";
}

std::string js(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_ll_strict(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw UsageFailure{"empty integer value"};
  errno = 0;
  char* end = nullptr;
  long long v = std::strtoll(t.c_str(), &end, 10);
  if (errno != 0 || end == t.c_str() || *end != '\0')
    throw UsageFailure{"not an integer: " + text};
  return v;
}

// Exact decimal/fraction parsing for flag values ("1e6", "0.5", "3/4").
Rational exact_rational(const std::string& text) {
  try {
    return rational_from_string(trim(text));
  } catch (const ParseError& e) {
    throw UsageFailure{std::string("bad numeric value \"") + text +
                       "\": " + e.what()};
  } catch (const DomainError& e) {
    throw UsageFailure{std::string("bad numeric value \"") + text +
                       "\": " + e.what()};
  }
}

Interval exact_interval(const std::string& text, Prec prec) {
  return Interval::from_rational(exact_rational(text), prec);
}

std::uint64_t exact_u64(const std::string& text) {
  Rational q = exact_rational(text);
  q.canonicalize();
  if (q.get_den() != 1 || q < 0)
    throw UsageFailure{"expected a nonnegative integer, got " + text};
  if (!q.get_num().fits_ulong_p())
    throw UsageFailure{"integer too large: " + text};
  return static_cast<std::uint64_t>(q.get_num().get_ui());
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::string join_longs(const std::vector<long>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// configuration

void apply_config_kv(const std::string& key, const std::string& value,
                     std::size_t lineno, CliConfig& cfg) {
  if (key == "precision_bits") {
    errno = 0;
    char* end = nullptr;
    long v = std::strtol(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0')
      throw ParseError("precision_bits is not an integer", lineno);
    if (v < 64) throw ParseError("precision_bits must be >= 64", lineno);
    cfg.precision_bits = static_cast<Prec>(v);
  } else if (key == "cache_dir") {
    cfg.cache_dir = value;
  } else if (key == "zeros_path") {
    cfg.zeros_path = value;
  } else if (key == "output_format") {
    try {
      cfg.output_format = parse_output_format(value);
    } catch (const UnsupportedFormat&) {
      throw ParseError("unknown output_format: " + value, lineno);
    }
  } else if (key == "sieve_budget") {
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(value.c_str(), &end, 10);
    if (errno != 0 || end == value.c_str() || *end != '\0')
      throw ParseError("sieve_budget is not an integer", lineno);
    cfg.sieve_budget = v;
  } else {
    throw ParseError("unknown config key: " + key, lineno);
  }
}

}  // namespace

void load_config_file(const std::string& path, CliConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line is not of the form key = value", lineno);
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty()) throw ParseError("empty config key", lineno);
    apply_config_kv(key, value, lineno, cfg);
  }
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  if (name == "text") return OutputFormat::kText;
  throw UnsupportedFormat("unknown output format: " + name);
}

namespace {

// ---------------------------------------------------------------------------
// renderers

std::string render_bound(const BoundReport& rep, const std::string& theorem,
                         OutputFormat fmt) {
  std::ostringstream o;
  switch (fmt) {
    case OutputFormat::kText: {
      o << "bound " << theorem << "\n";
      o << "parameters:\n";
      for (const auto& kv : rep.parameters_echo)
        o << "  " << kv.first << " = " << kv.second << "\n";
      o << "terms:\n";
      for (const auto& t : rep.terms)
        o << "  " << t.label << " = " << iv_pair(t.value) << "   <- " << t.anchor
          << "\n";
      o << "total = " << iv_pair(rep.total) << "\n";
      if (!rep.flags.empty()) {
        o << "notes:\n";
        for (const auto& f : rep.flags) o << "  - " << f << "\n";
      }
      break;
    }
    case OutputFormat::kCsv: {
      o << "schema=1\n";
      o << "theorem,row,label,lo,hi,anchor\n";
      const std::string th = csv_escape(theorem);
      for (const auto& kv : rep.parameters_echo)
        o << th << ",param," << csv_escape(kv.first) << ","
          << csv_escape(kv.second) << ",,\n";
      for (const auto& t : rep.terms)
        o << th << ",term," << csv_escape(t.label) << ","
          << csv_escape(t.value.lo_string(kDigits)) << ","
          << csv_escape(t.value.hi_string(kDigits)) << ","
          << csv_escape(t.anchor) << "\n";
      o << th << ",total,total," << csv_escape(rep.total.lo_string(kDigits))
        << "," << csv_escape(rep.total.hi_string(kDigits)) << ",\n";
      for (const auto& f : rep.flags)
        o << th << ",note," << csv_escape(f) << ",,,\n";
      break;
    }
    case OutputFormat::kJson: {
      o << "{\"schema\":1,\"command\":\"bound\",\"theorem\":" << js(theorem)
        << ",\"parameters\":[";
      for (std::size_t i = 0; i < rep.parameters_echo.size(); ++i) {
        if (i) o << ",";
        o << "{\"key\":" << js(rep.parameters_echo[i].first)
          << ",\"value\":" << js(rep.parameters_echo[i].second) << "}";
      }
      o << "],\"terms\":[";
      for (std::size_t i = 0; i < rep.terms.size(); ++i) {
        const auto& t = rep.terms[i];
        if (i) o << ",";
        o << "{\"label\":" << js(t.label) << ",\"lo\":"
          << js(t.value.lo_string(kDigits)) << ",\"hi\":"
          << js(t.value.hi_string(kDigits)) << ",\"anchor\":" << js(t.anchor)
          << "}";
      }
      o << "],\"total_lo\":" << js(rep.total.lo_string(kDigits))
        << ",\"total_hi\":" << js(rep.total.hi_string(kDigits)) << ",\"notes\":[";
      for (std::size_t i = 0; i < rep.flags.size(); ++i) {
        if (i) o << ",";
        o << js(rep.flags[i]);
      }
      o << "]}\n";
      break;
    }
  }
  return o.str();
}

std::string render_counts(const GaloisSetup& setup,
                          const std::vector<CountResult>& rows,
                          OutputFormat fmt) {
  const std::string family = setup.family_id();
  const std::string classes = join_longs(setup.selected_classes());
  std::ostringstream o;
  switch (fmt) {
    case OutputFormat::kText: {
      o << "count family=" << family << " classes=" << classes << "\n";
      for (const auto& r : rows)
        o << "x=" << fmt_u64(r.x) << " pi=" << fmt_u64(r.pi_c)
          << " theta=" << fmt_double(r.theta_c) << " psi=" << fmt_double(r.psi_c)
          << " ramified=" << fmt_u64(r.ramified_seen) << "\n";
      break;
    }
    case OutputFormat::kCsv: {
      o << "schema=1\n";
      o << "family,classes,x,pi,theta,psi,ramified\n";
      for (const auto& r : rows)
        o << csv_escape(family) << "," << csv_escape(classes) << ","
          << fmt_u64(r.x) << "," << fmt_u64(r.pi_c) << ","
          << fmt_double(r.theta_c) << "," << fmt_double(r.psi_c) << ","
          << fmt_u64(r.ramified_seen) << "\n";
      break;
    }
    case OutputFormat::kJson: {
      o << "{\"schema\":1,\"command\":\"count\",\"family\":" << js(family)
        << ",\"classes\":" << js(classes) << ",\"rows\":[";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i) o << ",";
        o << "{\"x\":" << fmt_u64(r.x) << ",\"pi\":" << fmt_u64(r.pi_c)
          << ",\"theta\":" << js(fmt_double(r.theta_c)) << ",\"psi\":"
          << js(fmt_double(r.psi_c)) << ",\"ramified\":" << fmt_u64(r.ramified_seen)
          << "}";
      }
      o << "]}\n";
      break;
    }
  }
  return o.str();
}

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) out += "; ";
    out += flags[i];
  }
  return out;
}

std::string render_comparisons(const GaloisSetup& setup, const std::string& mode,
                               const std::vector<Comparison>& rows,
                               OutputFormat fmt) {
  const std::string family = setup.family_id();
  const std::string classes = join_longs(setup.selected_classes());
  std::ostringstream o;
  switch (fmt) {
    case OutputFormat::kText: {
      o << "compare family=" << family << " classes=" << classes
        << " mode=" << mode << "\n";
      for (const auto& r : rows) {
        o << "x=" << fmt_u64(r.x) << " pi=" << fmt_u64(r.pi_c)
          << " expected=" << iv_pair(r.expected) << " deviation=" << iv_pair(r.lhs)
          << " bound=" << iv_pair(r.rhs) << " holds="
          << (r.holds ? "true" : "false") << " margin=" << fmt_double(r.margin)
          << "\n";
        for (const auto& f : r.flags) o << "  note: " << f << "\n";
      }
      break;
    }
    case OutputFormat::kCsv: {
      o << "schema=1\n";
      o << "family,classes,mode,x,pi,expected_lo,expected_hi,lhs_lo,lhs_hi,"
           "rhs_lo,rhs_hi,holds,margin,flags\n";
      for (const auto& r : rows)
        o << csv_escape(family) << "," << csv_escape(classes) << ","
          << csv_escape(mode) << "," << fmt_u64(r.x) << "," << fmt_u64(r.pi_c)
          << "," << csv_escape(r.expected.lo_string(kDigits)) << ","
          << csv_escape(r.expected.hi_string(kDigits)) << ","
          << csv_escape(r.lhs.lo_string(kDigits)) << ","
          << csv_escape(r.lhs.hi_string(kDigits)) << ","
          << csv_escape(r.rhs.lo_string(kDigits)) << ","
          << csv_escape(r.rhs.hi_string(kDigits)) << ","
          << (r.holds ? "true" : "false") << "," << fmt_double(r.margin) << ","
          << csv_escape(join_flags(r.flags)) << "\n";
      break;
    }
    case OutputFormat::kJson: {
      o << "{\"schema\":1,\"command\":\"compare\",\"family\":" << js(family)
        << ",\"classes\":" << js(classes) << ",\"mode\":" << js(mode)
        << ",\"rows\":[";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i) o << ",";
        o << "{\"x\":" << fmt_u64(r.x) << ",\"pi\":" << fmt_u64(r.pi_c)
          << ",\"expected_lo\":" << js(r.expected.lo_string(kDigits))
          << ",\"expected_hi\":" << js(r.expected.hi_string(kDigits))
          << ",\"lhs_lo\":" << js(r.lhs.lo_string(kDigits))
          << ",\"lhs_hi\":" << js(r.lhs.hi_string(kDigits))
          << ",\"rhs_lo\":" << js(r.rhs.lo_string(kDigits))
          << ",\"rhs_hi\":" << js(r.rhs.hi_string(kDigits))
          << ",\"holds\":" << (r.holds ? "true" : "false")
          << ",\"margin\":" << js(fmt_double(r.margin)) << ",\"flags\":[";
        for (std::size_t j = 0; j < r.flags.size(); ++j) {
          if (j) o << ",";
          o << js(r.flags[j]);
        }
        o << "]}";
      }
      o << "]}\n";
      break;
    }
  }
  return o.str();
}

std::string render_plot_rows(
    const std::vector<std::pair<std::string, std::pair<std::string, std::string>>>&
        rows) {
  std::ostringstream o;
  o << "# x lhs rhs\n";
  for (const auto& r : rows)
    o << r.first << " " << r.second.first << " " << r.second.second << "\n";
  return o.str();
}

std::string render_nchi(double t, long count, const Interval& bound, bool holds,
                        OutputFormat fmt) {
  std::ostringstream o;
  switch (fmt) {
    case OutputFormat::kText:
      o << "zeros nchi t=" << fmt_double(t) << "\n";
      o << "count = " << count << "\n";
      o << "bound = " << iv_pair(bound) << "\n";
      o << "holds = " << (holds ? "true" : "false") << "\n";
      break;
    case OutputFormat::kCsv:
      o << "schema=1\n";
      o << "t,count,bound_lo,bound_hi,holds\n";
      o << fmt_double(t) << "," << count << ","
        << csv_escape(bound.lo_string(kDigits)) << ","
        << csv_escape(bound.hi_string(kDigits)) << ","
        << (holds ? "true" : "false") << "\n";
      break;
    case OutputFormat::kJson:
      o << "{\"schema\":1,\"command\":\"zeros-nchi\",\"t\":" << js(fmt_double(t))
        << ",\"count\":" << count << ",\"bound_lo\":"
        << js(bound.lo_string(kDigits)) << ",\"bound_hi\":"
        << js(bound.hi_string(kDigits)) << ",\"holds\":"
        << (holds ? "true" : "false") << "}\n";
      break;
  }
  return o.str();
}

std::string render_explicit(const ExplicitFormulaResidual& r, OutputFormat fmt) {
  const double ratio = r.residual / r.bound.lo_double();
  std::ostringstream o;
  switch (fmt) {
    case OutputFormat::kText:
      o << "zeros explicit x=" << fmt_double(r.x) << " T=" << fmt_double(r.T)
        << "\n";
      o << "psi_direct = " << fmt_double(r.psi_direct) << "\n";
      o << "zero_sum = " << fmt_double(r.s_sum) << "\n";
      o << "residual = " << fmt_double(r.residual) << "\n";
      o << "bound = " << iv_pair(r.bound) << "\n";
      o << "residual/bound = " << fmt_double(ratio) << "\n";
      o << "holds = " << (r.holds ? "true" : "false") << "\n";
      break;
    case OutputFormat::kCsv:
      o << "schema=1\n";
      o << "x,T,psi_direct,zero_sum,residual,bound_lo,bound_hi,ratio,holds\n";
      o << fmt_double(r.x) << "," << fmt_double(r.T) << ","
        << fmt_double(r.psi_direct) << "," << fmt_double(r.s_sum) << ","
        << fmt_double(r.residual) << "," << csv_escape(r.bound.lo_string(kDigits))
        << "," << csv_escape(r.bound.hi_string(kDigits)) << ","
        << fmt_double(ratio) << "," << (r.holds ? "true" : "false") << "\n";
      break;
    case OutputFormat::kJson:
      o << "{\"schema\":1,\"command\":\"zeros-explicit\",\"x\":"
        << js(fmt_double(r.x)) << ",\"T\":" << js(fmt_double(r.T))
        << ",\"psi_direct\":" << js(fmt_double(r.psi_direct)) << ",\"zero_sum\":"
        << js(fmt_double(r.s_sum)) << ",\"residual\":"
        << js(fmt_double(r.residual)) << ",\"bound_lo\":"
        << js(r.bound.lo_string(kDigits)) << ",\"bound_hi\":"
        << js(r.bound.hi_string(kDigits)) << ",\"ratio\":"
        << js(fmt_double(ratio)) << ",\"holds\":" << (r.holds ? "true" : "false")
        << "}\n";
      break;
  }
  return o.str();
}

std::string render_region(const ZeroFreeReport& r, OutputFormat fmt) {
  std::ostringstream o;
  switch (fmt) {
    case OutputFormat::kText: {
      o << "zeros region\n";
      o << "zeros_checked = " << r.zeros_checked << "\n";
      o << "min_margin = " << fmt_double(r.min_margin) << "\n";
      o << "min_ordinate = " << fmt_double(r.min_ordinate) << "\n";
      o << "ok = " << (r.ok ? "true" : "false") << "\n";
      for (const auto& v : r.violations)
        o << "violation index=" << v.index << " gamma=" << fmt_double(v.gamma)
          << " reason=" << v.reason << "\n";
      break;
    }
    case OutputFormat::kCsv: {
      o << "schema=1\n";
      o << "row,index,gamma,zeros_checked,min_margin,min_ordinate,ok,reason\n";
      o << "summary,,," << r.zeros_checked << "," << fmt_double(r.min_margin)
        << "," << fmt_double(r.min_ordinate) << "," << (r.ok ? "true" : "false")
        << ",\n";
      for (const auto& v : r.violations)
        o << "violation," << v.index << "," << fmt_double(v.gamma) << ",,,,,"
          << csv_escape(v.reason) << "\n";
      break;
    }
    case OutputFormat::kJson: {
      o << "{\"schema\":1,\"command\":\"zeros-region\",\"zeros_checked\":"
        << r.zeros_checked << ",\"min_margin\":" << js(fmt_double(r.min_margin))
        << ",\"min_ordinate\":" << js(fmt_double(r.min_ordinate)) << ",\"ok\":"
        << (r.ok ? "true" : "false") << ",\"violations\":[";
      for (std::size_t i = 0; i < r.violations.size(); ++i) {
        const auto& v = r.violations[i];
        if (i) o << ",";
        o << "{\"index\":" << v.index << ",\"gamma\":" << js(fmt_double(v.gamma))
          << ",\"reason\":" << js(v.reason) << "}";
      }
      o << "]}\n";
      break;
    }
  }
  return o.str();
}

std::string render_rationalize(const std::string& expr, const std::string& dir,
                               long max_order, const Interval& value,
                               const CfResult& cf, OutputFormat fmt) {
  const std::string frac = to_string(cf.value);
  std::ostringstream o;
  switch (fmt) {
    case OutputFormat::kText:
      o << "rationalize " << expr << " direction=" << dir
        << " max-order=" << max_order << "\n";
      o << "value = " << iv_pair(value) << "\n";
      o << "result = " << frac << " (order " << cf.order << ", "
        << (cf.semiconvergent ? "semiconvergent" : "convergent") << ")\n";
      break;
    case OutputFormat::kCsv:
      o << "schema=1\n";
      o << "expr,direction,max_order,result,order,semiconvergent,value_lo,"
           "value_hi\n";
      o << csv_escape(expr) << "," << csv_escape(dir) << "," << max_order << ","
        << csv_escape(frac) << "," << cf.order << ","
        << (cf.semiconvergent ? "true" : "false") << ","
        << csv_escape(value.lo_string(kDigits)) << ","
        << csv_escape(value.hi_string(kDigits)) << "\n";
      break;
    case OutputFormat::kJson:
      o << "{\"schema\":1,\"command\":\"rationalize\",\"expr\":" << js(expr)
        << ",\"direction\":" << js(dir) << ",\"max_order\":" << max_order
        << ",\"result\":" << js(frac) << ",\"order\":" << cf.order
        << ",\"semiconvergent\":" << (cf.semiconvergent ? "true" : "false")
        << ",\"value_lo\":" << js(value.lo_string(kDigits)) << ",\"value_hi\":"
        << js(value.hi_string(kDigits)) << "}\n";
      break;
  }
  return o.str();
}

// ---------------------------------------------------------------------------
// command implementations

GaloisSetup make_setup(const std::string& family, const std::string& class_list) {
  std::vector<long> classes;
  if (!trim(class_list).empty()) {
    for (const auto& piece : split_list(class_list)) {
      if (piece.empty()) throw UsageFailure{"empty class label in list"};
      classes.push_back(static_cast<long>(parse_ll_strict(piece)));
    }
  }
  const std::string fam = trim(family);
  if (fam == "q") {
    if (!classes.empty() && !(classes.size() == 1 && classes[0] == 1))
      throw UsageFailure{"family q has a single class, labeled 1"};
    return GaloisSetup::trivial_q();
  }
  const std::size_t colon = fam.find(':');
  if (colon != std::string::npos) {
    const std::string head = fam.substr(0, colon);
    const std::string param = fam.substr(colon + 1);
    if (head == "quad") {
      if (classes.empty())
        throw UsageFailure{"--class is required for quadratic families"};
      return GaloisSetup::quadratic(static_cast<long>(parse_ll_strict(param)),
                                    classes);
    }
    if (head == "cyclo") {
      if (classes.empty())
        throw UsageFailure{"--class is required for cyclotomic families"};
      return GaloisSetup::cyclotomic(static_cast<long>(parse_ll_strict(param)),
                                     classes);
    }
  }
  throw UsageFailure{"unknown family \"" + family +
                     "\" (expected q, quad:D, or cyclo:M)"};
}

struct BoundArgs {
  std::string theorem;
  long nl = 1;
  long nk = 1;
  std::string lndl;
  std::string ratio = "1";
  std::string x;
  std::string T;
  std::string beta0;
  long chi0 = 0;
  bool force = false;
  bool precise = false;
  std::string variant = "statement";
};

int cmd_bound(const BoundArgs& a, const CliConfig& cfg) {
  const Prec prec = cfg.precision_bits;

  FieldParams fp;
  fp.n_L = a.nl;
  fp.n_K = a.nk;
  if (a.nk <= 0 || a.nl <= 0 || a.nl % a.nk != 0)
    throw DomainError("degrees must be positive with n_K dividing n_L");
  fp.order_G = a.nl / a.nk;
  fp.class_ratio = exact_rational(a.ratio);
  fp.ln_dL = LnDisc::from_rational(exact_rational(a.lndl));
  fp.validate();

  ExceptionalZero ez;
  const bool has_beta0 = !a.beta0.empty();
  const bool has_chi0 = a.chi0 != 0;
  if (has_beta0 != has_chi0)
    throw UsageFailure{"--beta0 and --chi0 must be given together"};
  if (has_beta0) {
    ez.chi0_sign = static_cast<int>(a.chi0);
    ez.beta0 = exact_interval(a.beta0, prec);
  }

  const Interval x = exact_interval(a.x, prec);
  UncondVariant variant = UncondVariant::kStatement;
  if (a.variant == "proof-a") variant = UncondVariant::kProofA;
  else if (a.variant == "proof-b") variant = UncondVariant::kProofB;
  else if (a.variant != "statement")
    throw UsageFailure{"unknown variant: " + a.variant};

  BoundReport rep;
  if (a.theorem == "explicit-formula") {
    if (a.T.empty())
      throw UsageFailure{"--T is required for --theorem explicit-formula"};
    rep = explicit_formula_error(x, exact_interval(a.T, prec), fp, prec);
  } else if (a.theorem == "psi-grh") {
    rep = psi_grh_bound(x, fp, a.precise, prec);
  } else if (a.theorem == "psi-uncond") {
    rep = psi_uncond_bound(x, fp, ez, variant, a.force, prec);
  } else if (a.theorem == "pi-grh") {
    rep = pi_grh_bound(x, fp, prec);
  } else if (a.theorem == "pi-grh-precise") {
    rep = pi_grh_precise_bound(x, fp, prec);
  } else if (a.theorem == "pi-oesterle") {
    rep = pi_oesterle_bound(x, fp, prec);
  } else if (a.theorem == "pi-uncond") {
    rep = pi_uncond_bound(x, fp, ez, a.force, prec);
  } else {
    throw NotFoundError("unknown theorem: " + a.theorem);
  }

  std::cout << render_bound(rep, a.theorem, cfg.output_format);
  return kExitOk;
}

int cmd_audit(const std::string& id, Prec precision, bool ladder,
              const CliConfig& cfg) {
  std::vector<AuditItem> items;
  if (id.empty()) {
    items = audit_catalog();
  } else {
    items.push_back(find_audit_item(id));
  }
  const std::vector<AuditReport> reports =
      ladder ? run_audit_ladder(items) : run_audit(items, precision);

  switch (cfg.output_format) {
    case OutputFormat::kText:
      std::cout << render_audit_text(reports);
      break;
    case OutputFormat::kCsv:
      std::cout << "schema=1\n" << render_audit_csv(reports);
      break;
    case OutputFormat::kJson:
      std::cout << "{\"schema\":1,\"command\":\"audit\",\"precision\":"
                << (ladder ? 0 : static_cast<long>(precision))
                << ",\"ladder\":" << (ladder ? "true" : "false")
                << ",\"items\":" << render_audit_json(reports) << "}\n";
      break;
  }
  return kExitOk;
}

int cmd_count(const std::string& family, const std::string& class_list,
              const std::string& x_list, const CliConfig& cfg) {
  const GaloisSetup setup = make_setup(family, class_list);
  CountOptions opt;
  opt.sieve_budget = cfg.sieve_budget;
  opt.cache_dir = cfg.cache_dir;
  std::vector<CountResult> rows;
  for (const auto& xs : split_list(x_list))
    rows.push_back(count_up_to(setup, exact_u64(xs), opt));
  std::cout << render_counts(setup, rows, cfg.output_format);
  return kExitOk;
}

int cmd_compare(const std::string& family, const std::string& class_list,
                const std::string& x_list, const std::string& mode,
                bool emit_plot, const CliConfig& cfg) {
  const GaloisSetup setup = make_setup(family, class_list);
  BoundMode bmode;
  if (mode == "grh") bmode = BoundMode::kGrh;
  else if (mode == "grh-precise") bmode = BoundMode::kGrhPrecise;
  else if (mode == "oesterle") bmode = BoundMode::kOesterle;
  else throw UsageFailure{"unknown mode: " + mode};

  CountOptions opt;
  opt.sieve_budget = cfg.sieve_budget;
  opt.cache_dir = cfg.cache_dir;
  std::vector<Comparison> rows;
  for (const auto& xs : split_list(x_list))
    rows.push_back(
        compare_to_bound(exact_u64(xs), setup, bmode, opt, cfg.precision_bits));

  if (emit_plot) {
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
        plot;
    for (const auto& r : rows)
      plot.push_back({fmt_u64(r.x),
                      {r.lhs.hi_string(kDigits), r.rhs.lo_string(kDigits)}});
    std::cout << render_plot_rows(plot);
    return kExitOk;
  }
  std::cout << render_comparisons(setup, mode, rows, cfg.output_format);
  return kExitOk;
}

ZeroTable load_table(const CliConfig& cfg) {
  if (cfg.zeros_path.empty())
    throw UsageFailure{
        "a zero table is required (--zeros PATH or zeros_path in the config)"};
  return load_zeros(cfg.zeros_path);
}

int cmd_zeros_nchi(double t, const CliConfig& cfg) {
  const ZeroTable table = load_table(cfg);
  const long count = count_zeros_window(t, table);
  CharacterParams c;  // zeta: ln A = 0, n_E = 1, principal
  c.ln_A = Interval::point(0.0, cfg.precision_bits);
  c.n_E = 1;
  c.a_chi = 1;
  c.b_chi = 0;
  c.is_principal = true;
  const Interval bound =
      nchi_bound(Interval::point(t, cfg.precision_bits), c, cfg.precision_bits);
  const bool holds = static_cast<double>(count) <= bound.lo_double();
  std::cout << render_nchi(t, count, bound, holds, cfg.output_format);
  return kExitOk;
}

int cmd_zeros_explicit(double x, double T, const CliConfig& cfg) {
  const ZeroTable table = load_table(cfg);
  const ExplicitFormulaResidual r =
      check_explicit_formula(x, T, table, cfg.precision_bits, cfg.threads);
  std::cout << render_explicit(r, cfg.output_format);
  return kExitOk;
}

int cmd_zeros_region(const CliConfig& cfg) {
  const ZeroTable table = load_table(cfg);
  FieldParams p;  // rational field: degree 1, ln|d| = 0
  const ZeroFreeReport r = check_zero_free_region(table, p, cfg.precision_bits);
  std::cout << render_region(r, cfg.output_format);
  return kExitOk;
}

int cmd_rationalize(const std::string& expr_text, long order,
                    const std::string& direction, const CliConfig& cfg) {
  ExprPtr expr;
  try {
    expr = parse_expression(expr_text);
  } catch (const ParseError& e) {
    throw UsageFailure{std::string("bad expression: ") + e.what()};
  }
  const Interval value = expr->eval(cfg.precision_bits);
  const RoundDirection dir = direction == "lower" ? RoundDirection::kLower
                                                  : RoundDirection::kUpper;
  const CfResult cf = cf_rationalize(value, static_cast<int>(order), dir);
  std::cout << render_rationalize(expr_text, direction, order, value, cf,
                                  cfg.output_format);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"rigorous evaluation of effective density bounds"};
  app.require_subcommand(1);

  std::string config_path;
  long long precision_flag = 0;
  std::string cache_dir_flag;
  std::string zeros_flag;
  std::string format_flag;
  long long sieve_budget_flag = 0;
  long long threads_flag = 0;

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--precision", precision_flag, "working precision in bits")
      ->check(CLI::Range(64LL, 1048576LL));
  app.add_option("--cache-dir", cache_dir_flag,
                 "directory for counting caches (empty: no caching)");
  app.add_option("--zeros", zeros_flag, "path to a zero-ordinate table");
  app.add_option("--format", format_flag, "output format")
      ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--sieve-budget", sieve_budget_flag,
                 "largest sieve limit allowed")
      ->check(CLI::Range(1LL, 1000000000000LL));
  app.add_option("--threads", threads_flag, "worker threads for zero sums")
      ->check(CLI::Range(1LL, 256LL));

  // bound
  BoundArgs ba;
  CLI::App* bound = app.add_subcommand("bound", "evaluate an error bound");
  bound->add_option("--theorem", ba.theorem, "bound to evaluate")
      ->required()
      ->check(CLI::IsMember({"pi-grh", "pi-grh-precise", "pi-uncond",
                             "pi-oesterle", "psi-grh", "psi-uncond",
                             "explicit-formula"}));
  bound->add_option("--nl", ba.nl, "degree of the upper field")->required();
  bound->add_option("--nk", ba.nk, "degree of the base field");
  bound->add_option("--lndl", ba.lndl, "ln of the absolute discriminant")
      ->required();
  bound->add_option("--ratio", ba.ratio, "class ratio |C|/|G|");
  bound->add_option("--x", ba.x, "evaluation point")->required();
  bound->add_option("--T", ba.T, "truncation height");
  bound->add_option("--beta0", ba.beta0, "exceptional real zero");
  bound->add_option("--chi0", ba.chi0, "exceptional character class (+1/-1)")
      ->check(CLI::IsMember({-1, 1}));
  bound->add_flag("--force", ba.force, "evaluate below the validity threshold");
  bound->add_flag("--precise", ba.precise,
                  "expanded lower-order form (psi-grh only)");
  bound->add_option("--variant", ba.variant,
                    "unconditional envelope constant variant")
      ->check(CLI::IsMember({"statement", "proof-a", "proof-b"}));

  // audit
  std::string audit_id;
  long long audit_precision = 256;
  bool audit_ladder = false;
  CLI::App* audit =
      app.add_subcommand("audit", "check recorded rational constants");
  audit->add_option("--id", audit_id, "single item to audit (default: all)");
  audit->add_option("--precision", audit_precision, "audit precision in bits")
      ->check(CLI::Range(64LL, 1048576LL));
  audit->add_flag("--ladder", audit_ladder,
                  "escalate precision until every item is decided");

  // count / compare
  std::string count_family, count_classes, count_x, count_mode = "grh";
  CLI::App* count = app.add_subcommand("count", "count Frobenius classes");
  count->add_option("--family", count_family, "q, quad:D, or cyclo:M")
      ->required();
  count->add_option("--class", count_classes, "comma-separated class labels");
  count->add_option("--x", count_x, "upper limit(s), comma-separated")
      ->required();
  count->add_option("--mode", count_mode, "accepted for symmetry; unused");

  std::string cmp_family, cmp_classes, cmp_x, cmp_mode = "grh";
  bool cmp_plot = false;
  CLI::App* compare =
      app.add_subcommand("compare", "compare counts against a bound");
  compare->add_option("--family", cmp_family, "q, quad:D, or cyclo:M")
      ->required();
  compare->add_option("--class", cmp_classes, "comma-separated class labels");
  compare->add_option("--x", cmp_x, "upper limit(s), comma-separated")
      ->required();
  compare->add_option("--mode", cmp_mode, "bound to compare against")
      ->check(CLI::IsMember({"grh", "grh-precise", "oesterle"}));
  compare->add_flag("--emit-plot-data", cmp_plot,
                    "write (x, lhs, rhs) columns instead of a report");

  // zeros
  CLI::App* zeros = app.add_subcommand("zeros", "zero-table calculations");
  zeros->require_subcommand(1);
  double nchi_t = 0.0;
  CLI::App* nchi = zeros->add_subcommand("nchi", "window zero count and bound");
  nchi->add_option("--t", nchi_t, "window center")->required();
  double ex_x = 0.0, ex_T = 0.0;
  CLI::App* expl =
      zeros->add_subcommand("explicit", "truncated explicit-formula residual");
  expl->add_option("--x", ex_x, "evaluation point")->required()
      ->check(CLI::Range(2.0, 1e18));
  expl->add_option("--T", ex_T, "truncation height")->required()
      ->check(CLI::Range(2.0, 1e18));
  CLI::App* region =
      zeros->add_subcommand("region", "zero-free-region scan of the table");

  // rationalize
  std::string rat_expr, rat_direction = "upper";
  long long rat_order = 3;
  CLI::App* rationalize =
      app.add_subcommand("rationalize", "directed rational approximation");
  rationalize->add_option("--expr", rat_expr, "closed-form constant expression")
      ->required();
  rationalize->add_option("--order", rat_order,
                          "largest continued-fraction order")
      ->check(CLI::Range(0LL, 64LL));
  rationalize
      ->add_option("--direction", rat_direction, "side to bound the value from")
      ->check(CLI::IsMember({"lower", "upper"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    CliConfig cfg;
    if (!config_path.empty()) load_config_file(config_path, cfg);
    if (app.count("--precision")) cfg.precision_bits = static_cast<Prec>(precision_flag);
    if (app.count("--cache-dir")) cfg.cache_dir = cache_dir_flag;
    if (app.count("--zeros")) cfg.zeros_path = zeros_flag;
    if (app.count("--format")) cfg.output_format = parse_output_format(format_flag);
    if (app.count("--sieve-budget"))
      cfg.sieve_budget = static_cast<unsigned long long>(sieve_budget_flag);
    if (app.count("--threads")) cfg.threads = static_cast<int>(threads_flag);

    if (app.got_subcommand(bound)) return cmd_bound(ba, cfg);
    if (app.got_subcommand(audit))
      return cmd_audit(audit_id, static_cast<Prec>(audit_precision),
                       audit_ladder, cfg);
    if (app.got_subcommand(count))
      return cmd_count(count_family, count_classes, count_x, cfg);
    if (app.got_subcommand(compare))
      return cmd_compare(cmp_family, cmp_classes, cmp_x, cmp_mode, cmp_plot,
                         cfg);
    if (app.got_subcommand(zeros)) {
      if (zeros->got_subcommand(nchi)) return cmd_zeros_nchi(nchi_t, cfg);
      if (zeros->got_subcommand(expl))
        return cmd_zeros_explicit(ex_x, ex_T, cfg);
      if (zeros->got_subcommand(region)) return cmd_zeros_region(cfg);
    }
    if (app.got_subcommand(rationalize))
      return cmd_rationalize(rat_expr, static_cast<long>(rat_order),
                             rat_direction, cfg);
    std::cerr << "error: no command selected\n";
    return kExitUsage;
  } catch (const UsageFailure& u) {
    std::cerr << "error: " << u.msg << "\n";
    return kExitUsage;
  } catch (const NotFoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotFound;
  } catch (const ThresholdError& e) {
    std::cerr << "error: " << e.what() << "; threshold in ["
              << e.threshold_lo << ", " << e.threshold_hi << "]\n";
    return kExitDomain;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const MonotonicityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UnsupportedFormat& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace cheb
