#include "polcovar/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "polcovar/decimal.hpp"
#include "polcovar/moments.hpp"
#include "polcovar/oracle.hpp"
#include "polcovar/pattern.hpp"
#include "polcovar/render.hpp"

namespace polcovar {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PatternSource {
  std::string builtin;
  std::string file;
  bool from_stdin = false;

  bool given() const { return !builtin.empty() || !file.empty() || from_stdin; }
};

Pattern load_pattern(const PatternSource& src, std::istream& in, const char* which) {
  const int count = !src.builtin.empty() + !src.file.empty() + src.from_stdin;
  if (count != 1) {
    throw UsageError(std::string("give exactly one source for ") + which +
                     " (--builtin, --file or --stdin)");
  }
  if (!src.builtin.empty()) return builtin_pattern(src.builtin);
  std::ostringstream text;
  if (src.from_stdin) {
    text << in.rdbuf();
  } else {
    std::ifstream file(src.file);
    if (!file) throw UsageError("cannot open pattern file '" + src.file + "'");
    text << file.rdbuf();
  }
  return parse_pattern(text.str());
}

struct Settings {
  PatternSource first;
  PatternSource second;
  std::string format = "human";
  std::string eval;
  bool stddev = false;
  int digits = 5;
  unsigned workers = 0;
  bool prune = false;
  std::vector<int> n_values;
  int oracle_cap = 6;
};

void add_source(CLI::App* cmd, PatternSource& src, const std::string& suffix, bool with_stdin) {
  cmd->add_option("--builtin" + suffix, src.builtin, "Builtin pattern name (see `builtins`)");
  cmd->add_option("--file" + suffix, src.file, "Adjacency-matrix or edge-list file");
  if (with_stdin) cmd->add_flag("--stdin", src.from_stdin, "Read the pattern from standard input");
}

void add_engine(CLI::App* cmd, Settings& s) {
  cmd->add_option("--workers", s.workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  cmd->add_flag("--prune", s.prune, "Collapse automorphic placements in the overlay sum");
}

void add_output(CLI::App* cmd, Settings& s) {
  cmd->add_option("--format", s.format, "Output encoding")
      ->check(CLI::IsMember({"human", "matrix-csv"}));
  cmd->add_option("--eval", s.eval, "Also evaluate at this n (arbitrary-precision integer)");
  cmd->add_option("--digits", s.digits, "Significant digits of decimal values")
      ->check(CLI::PositiveNumber);
}

class Printer {
 public:
  Printer(std::ostream& out, const Settings& s) : out_(out), s_(s) {}

  void polynomial(const Polynomial& p) {
    if (s_.format == "matrix-csv") {
      out_ << render_matrix_csv(p);
    } else {
      out_ << render_human(p) << '\n';
    }
  }

  // Evaluation lines; commented out in matrix-csv so the two data rows stay clean.
  void line(const std::string& text) { out_ << (s_.format == "matrix-csv" ? "# " : "") << text << '\n'; }

  void value(const std::string& label, const Rational& v) {
    line(label + " = " + format_decimal(v, s_.digits) + " (exact " + v.to_string() + ")");
  }

 private:
  std::ostream& out_;
  const Settings& s_;
};

std::optional<Rational> eval_point(const Settings& s) {
  if (s.eval.empty()) return std::nullopt;
  BigInt n;
  try {
    n = BigInt(s.eval);
  } catch (const std::exception&) {
    throw UsageError("--eval expects an integer, got '" + s.eval + "'");
  }
  return Rational(n);
}

EngineOptions engine_options(const Settings& s) {
  EngineOptions opt;
  opt.workers = s.workers;
  opt.prune_automorphisms = s.prune;
  return opt;
}

int cmd_mean(const Settings& s, std::istream& in, std::ostream& out) {
  const auto pattern = load_pattern(s.first, in, "the pattern");
  const auto mean = mean_polynomial(pattern);
  Printer print(out, s);
  print.polynomial(mean);
  if (auto n = eval_point(s)) {
    print.line("n = " + n->to_string());
    print.value("mean", mean.evaluate(*n));
  }
  return kExitOk;
}

int cmd_var(const Settings& s, std::istream& in, std::ostream& out) {
  const auto pattern = load_pattern(s.first, in, "the pattern");
  const auto report = variance_report(pattern, engine_options(s));
  Printer print(out, s);
  print.polynomial(report.covariance);
  if (auto n = eval_point(s)) {
    const Rational variance = report.covariance.evaluate(*n);
    print.line("n = " + n->to_string());
    print.value("mean", report.mean_a.evaluate(*n));
    print.value("variance", variance);
    if (s.stddev) {
      if (variance.sign() < 0) {
        throw std::logic_error("negative variance " + variance.to_string() + " at n = " + n->to_string());
      }
      print.line("stddev = " + format_sqrt_decimal(variance, s.digits));
    }
  }
  return kExitOk;
}

int cmd_cov(const Settings& s, std::istream& in, std::ostream& out) {
  const auto a = load_pattern(s.first, in, "the first pattern");
  const auto b = load_pattern(s.second, in, "the second pattern");
  const auto report = covariance_report(a, b, engine_options(s));
  Printer print(out, s);
  print.polynomial(report.covariance);
  if (auto n = eval_point(s)) {
    print.line("n = " + n->to_string());
    print.value("mean_a", report.mean_a.evaluate(*n));
    print.value("mean_b", report.mean_b.evaluate(*n));
    print.value("covariance", report.covariance.evaluate(*n));
  }
  return kExitOk;
}

int cmd_verify(const Settings& s, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto a = load_pattern(s.first, in, "the first pattern");
  const bool pair = s.second.given();
  const auto b = pair ? load_pattern(s.second, in, "the second pattern") : a;
  if (s.n_values.empty()) throw UsageError("--n needs at least one value");

  OracleOptions oracle;
  oracle.max_nodes = s.oracle_cap;
  oracle.workers = s.workers;
  if (s.oracle_cap == kOracleHardCap) {
    err << "warning: exhaustive cap raised to n = 7; each check enumerates 2^21 = 2097152 graphs\n";
  }
  const auto report = verify(a, b, s.n_values, engine_options(s), oracle);

  for (const auto& row : report.rows) {
    out << "n = " << row.n << ": ";
    if (pair) {
      out << "mean_a " << row.engine_mean_a << " (oracle " << row.oracle_mean_a << "), mean_b "
          << row.engine_mean_b << " (oracle " << row.oracle_mean_b << ")";
    } else {
      out << "mean " << row.engine_mean_a << " (oracle " << row.oracle_mean_a << ")";
    }
    out << ", " << (pair ? "covariance " : "variance ") << row.engine_covariance << " (oracle "
        << row.oracle_covariance << ")  " << (row.matches() ? "match" : "MISMATCH") << '\n';
  }
  const auto total = report.rows.size();
  if (report.all_passed()) {
    out << "all " << total << " checks passed\n";
    return kExitOk;
  }
  out << report.failures() << " of " << total << " checks failed\n";
  return kExitVerifyFailed;
}

int cmd_builtins(std::ostream& out) {
  for (const auto& name : builtin_names()) out << name << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact mean, variance and covariance polynomials of subgraph counts in G(n, 1/2)",
               "polcovar"};
  app.require_subcommand(1);
  Settings s;

  auto* mean = app.add_subcommand("mean", "Mean polynomial E[c_H]");
  add_source(mean, s.first, "", true);
  add_output(mean, s);

  auto* var = app.add_subcommand("var", "Variance polynomial Var[c_H]");
  add_source(var, s.first, "", true);
  add_output(var, s);
  add_engine(var, s);
  var->add_flag("--stddev", s.stddev, "With --eval, also print the standard deviation")
      ->needs(var->get_option("--eval"));

  auto* cov = app.add_subcommand("cov", "Covariance polynomial Cov[c_H1, c_H2]");
  add_source(cov, s.first, "", true);
  add_source(cov, s.second, "2", false);
  add_output(cov, s);
  add_engine(cov, s);

  auto* check = app.add_subcommand("verify", "Compare the polynomials with exhaustive enumeration");
  add_source(check, s.first, "", true);
  add_source(check, s.second, "2", false);
  add_engine(check, s);
  check->add_option("--n", s.n_values, "Comma-separated node counts")->delimiter(',')->required();
  check->add_option("--oracle-cap", s.oracle_cap, "Largest n enumerated (6, or 7 with a warning)")
      ->check(CLI::Range(0, kOracleHardCap));

  auto* builtins = app.add_subcommand("builtins", "List builtin pattern names");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*mean) return cmd_mean(s, in, out);
    if (*var) return cmd_var(s, in, out);
    if (*cov) return cmd_cov(s, in, out);
    if (*check) return cmd_verify(s, in, out, err);
    if (*builtins) return cmd_builtins(out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PatternError& e) {
    err << "error: invalid pattern: " << e.what() << '\n';
    return kExitInvalidPattern;
  } catch (const PatternTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const OracleCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace polcovar
