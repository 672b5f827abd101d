#pragma once

// Command-line front end: argument parsing, output formatting, cache
// handling and exit codes. `run` is what tools/zetaodd.cpp calls; tests
// drive it directly with string streams.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "zetaodd/gen_bernoulli.hpp"
#include "zetaodd/hyperbolic.hpp"
#include "zetaodd/quadrature.hpp"
#include "zetaodd/verify.hpp"
#include "zetaodd/weights.hpp"
#include "zetaodd/zeta.hpp"

namespace zetaodd::cli {

enum class Command { weights, bernoulli, tau, integral, zeta, scan, linform, verify };
enum class Format { text, json, csv };

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kNonConvergence = 3,
};

struct RunConfig {
  Command command = Command::verify;
  int m = 0;
  int n = 0;
  int l = 0;
  int to = 20;
  bool table = false;
  std::string method = "all";
  std::string suite = "all";
  int digits = 30;
  Format format = Format::text;
  std::filesystem::path cache_path;
  bool trust_cache = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by parse_args for --help; carries the rendered help text.
struct HelpRequested {
  std::string text;
};

/// Rejects parameter combinations the commands cannot honour.
inline void validate(const RunConfig& cfg) {
  if (cfg.digits < 15) throw UsageError("--digits must be at least 15");
  const auto need_odd = [&](int m, const char* flag) {
    if (m < 3 || m % 2 == 0) {
      throw UsageError(std::string(flag) + " must be an odd integer >= 3 (got " + std::to_string(m) + ")");
    }
  };
  switch (cfg.command) {
    case Command::weights:
      if (cfg.m < 2) throw UsageError("--m must be >= 2");
      break;
    case Command::tau:
    case Command::zeta:
      need_odd(cfg.m, "--m");
      break;
    case Command::bernoulli:
      if (cfg.n < 0 || cfg.l < 1) throw UsageError("need --n >= 0 and --l >= 1");
      break;
    case Command::integral:
    case Command::linform:
      if (cfg.n < 1) throw UsageError("--n must be >= 1");
      break;
    case Command::scan:
      if (cfg.to < 1) throw UsageError("--to must be >= 1");
      break;
    case Command::verify:
      break;
  }
  if (cfg.command == Command::zeta && cfg.method != "reference" && cfg.method != "eq23" &&
      cfg.method != "eq29" && cfg.method != "all") {
    throw UsageError("--method must be one of reference, eq23, eq29, all");
  }
}

namespace detail {

using Json = nlohmann::ordered_json;

inline std::vector<int> parse_suite(const std::string& suite) {
  if (suite == "all") return verify::all_criteria();
  std::vector<int> ids;
  std::stringstream in(suite);
  std::string item;
  const auto known = verify::all_criteria();
  while (std::getline(in, item, ',')) {
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--suite expects 'all' or a comma list of criterion numbers");
    }
    if (std::find(known.begin(), known.end(), id) == known.end()) {
      throw UsageError("unknown criterion " + std::to_string(id));
    }
    ids.push_back(id);
  }
  if (ids.empty()) throw UsageError("--suite is empty");
  return ids;
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

inline int run_weights(const RunConfig& cfg, std::ostream& out) {
  const WeightVector w = solve_weights(cfg.m);
  switch (cfg.format) {
    case Format::json: {
      Json j;
      j["m"] = cfg.m;
      j["s_m"] = w.s_m.str();
      j["weights"] = Json::array();
      for (const auto& v : w.weights) j["weights"].push_back(v.str());
      emit(out, j);
      break;
    }
    case Format::csv:
      out << "l,w\n";
      for (int l = 1; l <= cfg.m; ++l) out << l << ',' << w.w(l) << '\n';
      break;
    case Format::text:
      out << "m = " << cfg.m << "\nS_m = " << w.s_m << '\n';
      for (int l = 1; l <= cfg.m; ++l) out << "w_" << l << " = " << w.w(l) << '\n';
      break;
  }
  return kOk;
}

inline int run_bernoulli(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::array<int, 2>> keys;  // (n, l), sorted by (l, n)
  if (cfg.table) {
    for (int l = 1; l <= cfg.l; ++l) {
      for (int n = 0; n <= cfg.n; ++n) keys.push_back({n, l});
    }
  } else {
    keys.push_back({cfg.n, cfg.l});
  }
  Json rows = Json::array();
  if (cfg.format == Format::csv) out << "n,l,value\n";
  for (const auto& [n, l] : keys) {
    const Rational value = gen_bernoulli(n, l);
    switch (cfg.format) {
      case Format::json:
        rows.push_back(Json{{"n", n}, {"l", l}, {"value", value.str()}});
        break;
      case Format::csv:
        out << n << ',' << l << ',' << value << '\n';
        break;
      case Format::text:
        out << "B_" << n << "^(" << l << ") = " << value << '\n';
        break;
    }
  }
  if (cfg.format == Format::json) {
    if (cfg.table) {
      emit(out, Json{{"entries", rows}});
    } else {
      emit(out, rows.front());
    }
  }
  return kOk;
}

inline int run_tau(const RunConfig& cfg, std::ostream& out) {
  const TauTable row = tau_row(cfg.m);
  switch (cfg.format) {
    case Format::json: {
      Json j;
      j["m"] = cfg.m;
      j["taus"] = Json::object();
      for (const auto& [jj, value] : row.taus) j["taus"][std::to_string(jj)] = value.str();
      emit(out, j);
      break;
    }
    case Format::csv:
      out << "j,tau\n";
      for (const auto& [jj, value] : row.taus) out << jj << ',' << value << '\n';
      break;
    case Format::text:
      for (const auto& [jj, value] : row.taus) out << "tau_" << jj << "^(" << cfg.m << ") = " << value << '\n';
      break;
  }
  return kOk;
}

inline int run_integral(const RunConfig& cfg, std::ostream& out) {
  const PrecisionConfig precision = PrecisionConfig::for_target(cfg.digits);
  const QuadratureResult q = integral_In(cfg.n, precision);
  const std::string value = format_decimal(q.value, cfg.digits);
  const std::string error = format_decimal(q.error_estimate, cfg.digits);
  switch (cfg.format) {
    case Format::json: {
      Json j;
      j["n"] = cfg.n;
      j["value"] = value;
      j["error_estimate"] = error;
      j["nodes"] = q.nodes_used;
      j["levels"] = q.levels;
      emit(out, j);
      break;
    }
    case Format::csv:
      out << "n,value,error_estimate,nodes,levels\n"
          << cfg.n << ',' << value << ',' << error << ',' << q.nodes_used << ',' << q.levels << '\n';
      break;
    case Format::text:
      out << "I_" << cfg.n << " = " << value << "\nerror estimate = " << error << "\nnodes = " << q.nodes_used
          << "\nlevels = " << q.levels << '\n';
      break;
  }
  return kOk;
}

inline int run_zeta(const RunConfig& cfg, std::ostream& out) {
  const PrecisionConfig precision = PrecisionConfig::for_target(cfg.digits);
  if (cfg.method == "all") {
    const ZetaReport r = zeta_report(cfg.m, precision, 9);
    const bool pass = r.pass();
    switch (cfg.format) {
      case Format::json: {
        Json j;
        j["m"] = cfg.m;
        j["reference"] = format_decimal(r.reference, cfg.digits);
        j["via_eq23"] = format_decimal(r.via_eq23, cfg.digits);
        j["via_eq29"] = format_decimal(r.via_eq29, cfg.digits);
        j["max_abs_diff"] = format_decimal(r.max_abs_diff, cfg.digits);
        j["pass"] = pass;
        emit(out, j);
        break;
      }
      case Format::csv:
        out << "m,reference,via_eq23,via_eq29,max_abs_diff,pass\n"
            << cfg.m << ',' << format_decimal(r.reference, cfg.digits) << ','
            << format_decimal(r.via_eq23, cfg.digits) << ',' << format_decimal(r.via_eq29, cfg.digits) << ','
            << format_decimal(r.max_abs_diff, cfg.digits) << ',' << (pass ? "true" : "false") << '\n';
        break;
      case Format::text:
        out << "zeta(" << cfg.m << ")\n  reference = " << format_decimal(r.reference, cfg.digits)
            << "\n  exponential kernel = " << format_decimal(r.via_eq23, cfg.digits)
            << "\n  asech kernel = " << format_decimal(r.via_eq29, cfg.digits)
            << "\n  max |diff| = " << format_decimal(r.max_abs_diff, cfg.digits) << '\n'
            << (pass ? "PASS" : "FAIL") << '\n';
        break;
    }
    return pass ? kOk : kVerificationFailure;
  }

  PrecisionScope scope(static_cast<unsigned>(precision.working_digits));
  Real value;
  if (cfg.method == "reference") {
    value = zeta_reference(cfg.m, precision.working_digits);
  } else if (cfg.method == "eq23") {
    value = zeta_via_eq23(cfg.m, precision);
  } else {
    value = zeta_via_eq29(cfg.m, precision);
  }
  const std::string text = format_decimal(value, cfg.digits);
  switch (cfg.format) {
    case Format::json:
      emit(out, Json{{"m", cfg.m}, {"method", cfg.method}, {"value", text}});
      break;
    case Format::csv:
      out << "m,method,value\n" << cfg.m << ',' << cfg.method << ',' << text << '\n';
      break;
    case Format::text:
      out << "zeta(" << cfg.m << ") [" << cfg.method << "] = " << text << '\n';
      break;
  }
  return kOk;
}

inline int run_scan(const RunConfig& cfg, std::ostream& out) {
  const ScanReport report = dimension_scan(cfg.to);
  switch (cfg.format) {
    case Format::json: {
      Json rows = Json::array();
      for (const auto& r : report.rows) {
        rows.push_back(Json{{"n", r.n}, {"tau_top", r.tau_top.str()}, {"is_zero", r.is_zero}});
      }
      emit(out, Json{{"rows", rows}, {"summary", report.summary()}});
      break;
    }
    case Format::csv:
      out << "n,tau_numerator,tau_denominator,is_zero\n";
      for (const auto& r : report.rows) {
        out << r.n << ',' << r.tau_top.numerator() << ',' << r.tau_top.denominator() << ','
            << (r.is_zero ? "true" : "false") << '\n';
      }
      break;
    case Format::text:
      for (const auto& r : report.rows) {
        out << "n = " << r.n << "  tau_top = " << r.tau_top << (r.is_zero ? "  ZERO" : "  nonzero") << '\n';
      }
      out << report.summary() << '\n';
      break;
  }
  return kOk;
}

inline int run_linform(const RunConfig& cfg, std::ostream& out) {
  const LowerTriangular t = tau_matrix(cfg.n);
  const LinearForm form = solve_linear_form(t);
  const auto coeffs = integral_coefficients(t, form.thetas);
  const PrecisionConfig precision = PrecisionConfig::for_target(cfg.digits);
  PrecisionScope scope(static_cast<unsigned>(precision.working_digits));
  const std::string residual = format_decimal(linear_form_residual(form, precision), cfg.digits);
  switch (cfg.format) {
    case Format::json: {
      Json j;
      j["n"] = cfg.n;
      j["thetas"] = Json::array();
      for (const auto& v : form.thetas) j["thetas"].push_back(v.str());
      j["theta_next"] = form.theta_next;
      j["integral_coefficients"] = Json::array();
      for (const auto& v : coeffs) j["integral_coefficients"].push_back(v.str());
      j["residual"] = residual;
      emit(out, j);
      break;
    }
    case Format::csv:
      out << "k,theta\n";
      for (std::size_t k = 0; k < form.thetas.size(); ++k) out << k + 1 << ',' << form.thetas[k] << '\n';
      break;
    case Format::text:
      for (std::size_t k = 0; k < form.thetas.size(); ++k) {
        out << "theta_" << k + 1 << " = " << form.thetas[k] << '\n';
      }
      out << "theta_next = " << form.theta_next << "\nresidual = " << residual << '\n';
      break;
  }
  return kOk;
}

inline int run_verify(const RunConfig& cfg, std::ostream& out) {
  const auto ids = parse_suite(cfg.suite);
  bool all_pass = true;
  Json rows = Json::array();
  if (cfg.format == Format::csv) out << "id,pass,seconds\n";
  for (int id : ids) {
    const auto r = verify::run_criterion(id);
    all_pass = all_pass && r.passed;
    switch (cfg.format) {
      case Format::json:
        // Timings are left out so the document is reproducible byte for byte.
        rows.push_back(Json{{"id", r.id}, {"name", r.name}, {"pass", r.passed}});
        break;
      case Format::csv:
        out << r.id << ',' << (r.passed ? "true" : "false") << ',' << r.seconds << '\n';
        break;
      case Format::text:
        out << verify::format_line(r) << '\n' << std::flush;
        break;
    }
  }
  if (cfg.format == Format::json) emit(out, Json{{"criteria", rows}, {"pass", all_pass}});
  if (cfg.format == Format::text) out << (all_pass ? "ALL PASS" : "FAILURES") << '\n';
  return all_pass ? kOk : kVerificationFailure;
}

}  // namespace detail

/// Runs one validated command, loading and persisting the Bernoulli cache
/// around it when a cache path is configured.
inline int dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  BernoulliTable& table = shared_bernoulli_table();
  if (!cfg.cache_path.empty()) {
    try {
      table.load(cfg.cache_path, cfg.trust_cache);
    } catch (const CacheError& e) {
      err << "cache corrupt: " << e.what() << '\n';
      return kVerificationFailure;
    }
  }
  const std::size_t before = table.size();

  int code = kOk;
  try {
    switch (cfg.command) {
      case Command::weights: code = detail::run_weights(cfg, out); break;
      case Command::bernoulli: code = detail::run_bernoulli(cfg, out); break;
      case Command::tau: code = detail::run_tau(cfg, out); break;
      case Command::integral: code = detail::run_integral(cfg, out); break;
      case Command::zeta: code = detail::run_zeta(cfg, out); break;
      case Command::scan: code = detail::run_scan(cfg, out); break;
      case Command::linform: code = detail::run_linform(cfg, out); break;
      case Command::verify: code = detail::run_verify(cfg, out); break;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const NonConvergence& e) {
    err << "quadrature did not converge: " << e.what() << '\n';
    return kNonConvergence;
  }

  if (!cfg.cache_path.empty() && table.size() != before) {
    try {
      table.save(cfg.cache_path);
    } catch (const std::exception& e) {
      err << "warning: cache not saved: " << e.what() << '\n';
    }
  }
  return code;
}

/// Parses argv into a RunConfig. Throws CLI::ParseError on malformed flags
/// and HelpRequested for --help.
inline RunConfig parse_args(int argc, const char* const* argv) {
  RunConfig cfg;
  CLI::App app{"Exact weights, tau coefficients and quadrature for zeta at odd integers", "zetaodd"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::string cache;
  app.add_option("--digits", cfg.digits, "Significant decimal digits of quadrature output (>= 15)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--cache", cache, "Bernoulli table cache file (overrides ZETAODD_CACHE)");
  app.add_flag("--trust-cache", cfg.trust_cache, "Skip revalidation of cached entries");

  auto* weights = app.add_subcommand("weights", "Solve the unit-triangular system for w_1..w_m");
  weights->add_option("--m", cfg.m, "Order m >= 2")->required();

  auto* bernoulli = app.add_subcommand("bernoulli", "Generalized Bernoulli number B_n^(l)");
  bernoulli->add_option("--n", cfg.n, "Degree n >= 0")->required();
  bernoulli->add_option("--l", cfg.l, "Order l >= 1")->required();
  bernoulli->add_flag("--table", cfg.table, "Print every entry with degree <= n and order <= l");

  auto* tau_cmd = app.add_subcommand("tau", "Rational tau_j^(m) coefficients of the asech-kernel sum");
  tau_cmd->add_option("--m", cfg.m, "Odd order m >= 3")->required();

  auto* integral = app.add_subcommand("integral", "I_n = int_0^1 u^(2n-1)/asech(u) du");
  integral->add_option("--n", cfg.n, "Index n >= 1")->required();

  auto* zeta_cmd = app.add_subcommand("zeta", "zeta(m) by the series oracle and both integral forms");
  zeta_cmd->add_option("--m", cfg.m, "Odd argument m >= 3")->required();
  zeta_cmd->add_option("--method", cfg.method, "reference | eq23 | eq29 | all");

  auto* scan = app.add_subcommand("scan", "Exact zero test of tau_{n+1}^(2n+1) for n = 1..to");
  scan->add_option("--to", cfg.to, "Largest n");

  auto* linform = app.add_subcommand("linform", "Rational theta_k with sum theta_k zeta(2k+1)/pi^2k = theta_next I_n");
  linform->add_option("--n", cfg.n, "Index n >= 1")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance criteria");
  verify_cmd->add_option("--suite", cfg.suite, "'all' or comma-separated criterion numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested{app.help("", CLI::AppFormatMode::All)};
  }

  const std::vector<std::pair<CLI::App*, Command>> commands = {
      {weights, Command::weights}, {bernoulli, Command::bernoulli}, {tau_cmd, Command::tau},
      {integral, Command::integral}, {zeta_cmd, Command::zeta}, {scan, Command::scan},
      {linform, Command::linform}, {verify_cmd, Command::verify},
  };
  for (const auto& [sub, command] : commands) {
    if (sub->parsed()) cfg.command = command;
  }
  cfg.format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::text);
  if (!cache.empty()) {
    cfg.cache_path = cache;
  } else if (const char* env = std::getenv("ZETAODD_CACHE"); env != nullptr && *env != '\0') {
    cfg.cache_path = env;
  }
  return cfg;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    cfg = parse_args(argc, argv);
  } catch (const HelpRequested& help) {
    out << help.text;
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }
  return dispatch(cfg, out, err);
}

}  // namespace zetaodd::cli
