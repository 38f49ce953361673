#include "altkurepa/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "altkurepa/analysis.hpp"
#include "altkurepa/errors.hpp"
#include "altkurepa/kurepa.hpp"
#include "altkurepa/specfun.hpp"

namespace altkurepa::cli {

namespace {

using nlohmann::json;

constexpr const char* kTolEnv = "ALT_KUREPA_TOL";
constexpr long kMaxTableRows = 1000000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double round15(double v) { return std::stod(format_sig15(v)); }

json optional_number(const std::optional<double>& v) {
  return v ? json(round15(*v)) : json(nullptr);
}

kurepa::EvalOptions resolve_options(const std::optional<double>& tol_flag) {
  kurepa::EvalOptions opts;
  std::optional<double> tol = tol_flag;
  if (!tol) {
    if (const char* env = std::getenv(kTolEnv); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        tol = std::stod(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw UsageError(std::string(kTolEnv) + " is not a number: " + env);
      }
    }
  }
  if (tol) {
    if (!(*tol >= 1e-14 && *tol <= 1e-4)) {
      throw UsageError("tolerance must lie in [1e-14, 1e-4], got " + format_sig15(*tol));
    }
    opts.rel_tol = *tol;
  }
  return opts;
}

OutputRecord evaluate(double x, const kurepa::EvalOptions& opts) {
  const kurepa::EvalPoint point(x);
  const auto re = kurepa::re_A(point, opts);
  const auto be = kurepa::beta(point, opts);
  if (!re.converged || !be.converged) {
    throw ToleranceNotMet("quadrature did not reach the requested tolerance at x = " +
                          format_sig15(x));
  }
  return {x, re.value, kurepa::im_A(x), be.value, kurepa::gamma_cos(x), re.abs_err_estimate};
}

int cmd_eval(double x, bool exact, const std::string& format, const kurepa::EvalOptions& opts,
             std::ostream& out) {
  if (exact && x >= 1.0 && x == std::floor(x) && x <= 100000.0) {
    out << kurepa::alt_factorial(static_cast<int>(x)).str() << '\n';
    return kSuccess;
  }
  const auto rec = evaluate(x, opts);
  if (format == "json") {
    out << to_json_object(rec) << '\n';
  } else {
    out << kCsvHeader << '\n' << to_csv_row(rec) << '\n';
  }
  return kSuccess;
}

int cmd_table(double from, double to, double step, const std::string& format,
              const kurepa::EvalOptions& opts, std::ostream& out) {
  if (!(from > -2.0 + kurepa::kBoundaryMargin)) {
    throw UsageError("--from must exceed -2 + 1e-6");
  }
  if (!(to > from)) throw UsageError("--to must exceed --from");
  if (!(step > 0.0) || !std::isfinite(step)) throw UsageError("--step must be positive");
  const double span = (to - from) / step;
  if (span + 1.0 > kMaxTableRows) throw UsageError("table would exceed 1e6 rows");
  const long last = static_cast<long>(std::floor(span + 1e-9));

  std::vector<OutputRecord> rows;
  rows.reserve(static_cast<std::size_t>(last) + 1);
  for (long i = 0; i <= last; ++i) rows.push_back(evaluate(from + step * i, opts));

  std::ostringstream buf;
  if (format == "json") {
    buf << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      buf << "  " << to_json_object(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    buf << "]\n";
  } else {
    buf << kCsvHeader << '\n';
    for (const auto& r : rows) buf << to_csv_row(r) << '\n';
  }
  out << buf.str();
  return kSuccess;
}

std::string fixed9(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

int cmd_roots(const kurepa::EvalOptions& opts, std::ostream& out) {
  const auto min = analysis::find_beta_minimum(opts);
  const auto roots = analysis::find_reA_roots(min.x0, opts);
  out << "x0 " << fixed9(min.x0) << '\n'
      << "beta_min " << fixed9(min.beta_min) << '\n'
      << "x1 " << fixed9(roots.x1) << '\n'
      << "x2 " << fixed9(roots.x2) << '\n'
      << "ei_constant " << fixed9(specfun::ei_constant()) << '\n';
  return kSuccess;
}

json report_to_json(const analysis::VerificationReport& rep) {
  json j;
  j["theorem"] = std::string(analysis::to_string(rep.theorem));
  j["k"] = rep.k;
  j["grid"] = {{"start", round15(rep.grid.start)},
               {"end", round15(rep.grid.end)},
               {"count", rep.grid.count}};
  json eqs = json::array();
  for (const auto& e : rep.equality_points) {
    eqs.push_back({{"x", round15(e.x)},
                   {"side", std::string(analysis::to_string(e.side))},
                   {"gap", round15(e.gap)},
                   {"threshold", round15(e.threshold)},
                   {"ok", e.ok}});
  }
  j["equality_point"] = eqs.empty() ? json(nullptr) : eqs.front();
  j["equality_points"] = eqs;
  json viol = json::array();
  for (const auto& v : rep.violations) viol.push_back({{"x", round15(v.x)}, {"what", v.what}});
  j["violations"] = viol;
  json margins = json::array();
  for (const auto& m : rep.margins) {
    json row = {{"x", round15(m.x)},
                {"lower_margin", optional_number(m.lower_margin)},
                {"upper_margin", optional_number(m.upper_margin)},
                {"evaluated", m.evaluated}};
    if (!m.note.empty()) row["note"] = m.note;
    margins.push_back(std::move(row));
  }
  j["margins"] = margins;
  j["verdict"] = rep.pass() ? "pass" : "fail";
  return j;
}

void report_to_text(const analysis::VerificationReport& rep, std::ostream& out) {
  std::optional<double> min_lower, min_upper;
  int evaluated = 0;
  for (const auto& m : rep.margins) {
    if (m.evaluated) ++evaluated;
    if (m.lower_margin) min_lower = std::min(min_lower.value_or(*m.lower_margin), *m.lower_margin);
    if (m.upper_margin) min_upper = std::min(min_upper.value_or(*m.upper_margin), *m.upper_margin);
  }
  out << "theorem " << analysis::to_string(rep.theorem) << '\n'
      << "k " << rep.k << '\n'
      << "grid " << format_sig15(rep.grid.start) << ' ' << format_sig15(rep.grid.end) << ' '
      << rep.grid.count << '\n'
      << "evaluated " << evaluated << '\n';
  if (min_lower) out << "min_lower_margin " << format_sig15(*min_lower) << '\n';
  if (min_upper) out << "min_upper_margin " << format_sig15(*min_upper) << '\n';
  for (const auto& e : rep.equality_points) {
    out << "equality_point " << format_sig15(e.x) << ' ' << analysis::to_string(e.side)
        << " gap " << format_sig15(e.gap) << (e.ok ? " ok" : " FAILED") << '\n';
  }
  for (const auto& v : rep.violations) {
    out << "violation " << format_sig15(v.x) << ' ' << v.what << '\n';
  }
  out << "verdict " << (rep.pass() ? "pass" : "fail") << '\n';
}

int cmd_verify(const std::string& theorem_name, int k, double x_max, int samples,
               std::optional<double> x_min, const std::string& format,
               const kurepa::EvalOptions& opts, std::ostream& out) {
  const auto theorem = analysis::parse_theorem(theorem_name);
  if (!theorem) throw UsageError("unknown theorem " + theorem_name);
  analysis::VerificationReport rep;
  try {
    rep = analysis::verify_inequality(*theorem, k, x_max, samples, opts, x_min);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  if (format == "json") {
    out << report_to_json(rep).dump(2) << '\n';
  } else {
    report_to_text(rep, out);
  }
  return rep.pass() ? kSuccess : kVerificationFailed;
}

}  // namespace

std::string format_sig15(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.14e", v);
  return buf;
}

std::string to_csv_row(const OutputRecord& r) {
  return format_sig15(r.x) + ',' + format_sig15(r.re_A) + ',' + format_sig15(r.im_A) + ',' +
         format_sig15(r.beta) + ',' + format_sig15(r.gamma) + ',' + format_sig15(r.abs_err);
}

std::string to_json_object(const OutputRecord& r) {
  return "{\"x\": " + format_sig15(r.x) + ", \"re_A\": " + format_sig15(r.re_A) +
         ", \"im_A\": " + format_sig15(r.im_A) + ", \"beta\": " + format_sig15(r.beta) +
         ", \"gamma\": " + format_sig15(r.gamma) + ", \"abs_err\": " + format_sig15(r.abs_err) +
         "}";
}

std::vector<OutputRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("parse_csv: missing or wrong header");
  }
  std::vector<OutputRecord> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 6> v{};
    std::istringstream fields(line);
    std::string cell;
    std::size_t i = 0;
    while (std::getline(fields, cell, ',')) {
      if (i >= v.size()) throw std::invalid_argument("parse_csv: too many columns");
      v[i++] = std::stod(cell);
    }
    if (i != v.size()) throw std::invalid_argument("parse_csv: too few columns");
    rows.push_back({v[0], v[1], v[2], v[3], v[4], v[5]});
  }
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alternating Kurepa function: evaluation, tables, constants and inequality checks",
               "alt_kurepa"};
  app.require_subcommand(1);

  std::optional<double> tol;
  auto add_tol = [&tol](CLI::App* sub) {
    sub->add_option("--tol", tol, "relative quadrature tolerance (overrides ALT_KUREPA_TOL)");
  };

  double eval_x = 0.0;
  bool exact = false;
  std::string eval_format = "csv";
  auto* eval = app.add_subcommand("eval", "evaluate Re A, Im A, beta and gamma at one point");
  eval->add_option("--x", eval_x, "argument, x > -2")->required();
  eval->add_flag("--exact", exact, "print the exact integer A(n) for integer x >= 1");
  eval->add_option("--format", eval_format)->check(CLI::IsMember({"csv", "json"}));
  add_tol(eval);

  double from = 0.0, to = 0.0, step = 0.0;
  std::string table_format = "csv";
  auto* table = app.add_subcommand("table", "tabulate a uniform grid");
  table->add_option("--from", from)->required();
  table->add_option("--to", to)->required();
  table->add_option("--step", step)->required();
  table->add_option("--format", table_format)->check(CLI::IsMember({"csv", "json"}));
  add_tol(table);

  auto* roots = app.add_subcommand("roots", "print x0, beta(x0), x1, x2 and 1 + e Ei(-1)");
  add_tol(roots);

  std::string theorem;
  int k = 0;
  double x_max = 0.0;
  int samples = 200;
  std::optional<double> x_min;
  std::string verify_format = "text";
  auto* verify = app.add_subcommand("verify", "certify an inequality on a sampled grid");
  verify->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"ga1", "ga2", "ga3", "ga4", "gamma-ge"}));
  verify->add_option("--k", k, "sequence order (ignored by gamma-ge)");
  verify->add_option("--x-max", x_max)->required();
  verify->add_option("--samples", samples);
  verify->add_option("--x-min", x_min, "grid start (default k+1)");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  add_tol(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    const auto opts = resolve_options(tol);
    if (*eval) return cmd_eval(eval_x, exact, eval_format, opts, out);
    if (*table) return cmd_table(from, to, step, table_format, opts, out);
    if (*roots) return cmd_roots(opts, out);
    if (*verify) {
      return cmd_verify(theorem, k, x_max, samples, x_min, verify_format, opts, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("alt_kurepa");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace altkurepa::cli
