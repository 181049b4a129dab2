#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "freemoments/error.hpp"

namespace freemoments::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> warnings_for(const NCPolynomial& p) {
  std::vector<std::string> out;
  if (!p.is_self_adjoint())
    out.emplace_back("polynomial is not self-adjoint; moments may be non-real");
  return out;
}

bool has_real_coefficients(const NCPolynomial& p) {
  for (const auto& [w, c] : p.terms())
    if (!c.is_real()) return false;
  return true;
}

// Returns an empty string when the vector is consistent with its input.
std::string check_moment_invariants(const NCPolynomial& p, const MomentVector& mv, std::size_t order) {
  if (mv.values.size() != order) return "moment vector has the wrong length";
  if (p.is_self_adjoint() && has_real_coefficients(p)) {
    for (std::size_t m = 1; m <= order; ++m)
      if (!mv.at(m).is_real()) return "self-adjoint input produced a non-real moment at m = " + std::to_string(m);
  }
  return {};
}

NCPolynomial parse_input(const RunConfig& config) { return parse_polynomial(config.poly_text, config.n_vars); }

void write_moments_json(std::ostream& out, const NCPolynomial& p, const MomentVector& mv,
                        const std::vector<std::string>& warnings, bool decimal) {
  ordered_json j;
  j["poly"] = p.to_string();
  j["n_vars"] = p.n_vars();
  j["M"] = mv.max_order();
  j["N"] = mv.dim;
  j["iterations"] = mv.iterations;
  j["moments"] = ordered_json::array();
  for (std::size_t m = 1; m <= mv.max_order(); ++m) {
    ordered_json row;
    row["m"] = m;
    row["re"] = mv.at(m).re().get_str();
    row["im"] = mv.at(m).im().get_str();
    if (decimal) row["decimal"] = mv.at(m).to_decimal();
    j["moments"].push_back(std::move(row));
  }
  j["warnings"] = warnings;
  out << j.dump(2) << '\n';
}

void write_moments_csv(std::ostream& out, const MomentVector& mv, bool decimal) {
  out << "m,re,im" << (decimal ? ",decimal" : "") << '\n';
  for (std::size_t m = 1; m <= mv.max_order(); ++m) {
    out << m << ',' << mv.at(m).re().get_str() << ',' << mv.at(m).im().get_str();
    if (decimal) out << ',' << mv.at(m).to_decimal();
    out << '\n';
  }
}

void write_moments_text(std::ostream& out, const NCPolynomial& p, const MomentVector& mv, bool decimal) {
  out << "poly: " << p.to_string() << '\n'
      << "n_vars: " << p.n_vars() << '\n'
      << "deg: " << mv.degree << '\n'
      << "m_p: " << mv.n_terms << '\n'
      << "N: " << mv.dim << '\n'
      << "iterations: " << mv.iterations << '\n';
  for (std::size_t m = 1; m <= mv.max_order(); ++m) {
    out << "m_" << m << " = " << mv.at(m);
    if (decimal) out << "  (~" << mv.at(m).to_decimal() << ')';
    out << '\n';
  }
  if (mv.max_order() <= oracle::kMaxCumulantOrder) {
    auto kappa = oracle::free_cumulants(mv.values);
    for (std::size_t k = 1; k <= kappa.size(); ++k) out << "kappa_" << k << " = " << kappa[k - 1] << '\n';
  }
}

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int cmd_moments(const RunConfig& config, std::ostream& out, std::ostream& err) {
  NCPolynomial p = parse_input(config);
  MomentVector mv = moments(p, config.max_order);
  if (auto problem = check_moment_invariants(p, mv, config.max_order); !problem.empty()) {
    err << "error: internal invariant violated: " << problem << '\n';
    return kInvariantViolation;
  }
  auto warnings = warnings_for(p);
  switch (config.format) {
    case Format::json:
      write_moments_json(out, p, mv, warnings, config.decimal);
      break;
    case Format::csv:
      write_moments_csv(out, mv, config.decimal);
      break;
    case Format::text:
      write_moments_text(out, p, mv, config.decimal);
      break;
  }
  if (config.format != Format::json)
    for (const auto& w : warnings) err << "warning: " << w << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err, const MomentFunction& engine) {
  NCPolynomial p = parse_input(config);
  if (oracle::expansion_exceeds_cap(p, config.max_order, config.expansion_cap) ||
      p.degree() * config.max_order > 64) {
    err << "error: brute-force oracle refuses p^" << config.max_order << " (" << p.n_terms() << "^"
        << config.max_order << " monomials, cap " << config.expansion_cap
        << "); lower --max-order or raise --expansion-cap\n";
    return kOracleCapExceeded;
  }

  MomentVector mv = engine(p, config.max_order);
  struct Mismatch {
    std::size_t m;
    Scalar engine, oracle;
  };
  std::vector<Mismatch> mismatches;
  for (std::size_t m = 1; m <= config.max_order; ++m) {
    Scalar truth = oracle::brute_moment(p, m, config.expansion_cap);
    Scalar got = m <= mv.values.size() ? mv.at(m) : Scalar();
    if (!(got == truth)) mismatches.push_back({m, got, truth});
  }
  const bool pass = mismatches.empty();

  if (config.format == Format::json) {
    ordered_json j;
    j["poly"] = p.to_string();
    j["n_vars"] = p.n_vars();
    j["M"] = config.max_order;
    j["status"] = pass ? "PASS" : "FAIL";
    j["mismatches"] = ordered_json::array();
    for (const auto& mm : mismatches)
      j["mismatches"].push_back({{"m", mm.m}, {"engine", mm.engine.to_string()}, {"oracle", mm.oracle.to_string()}});
    j["warnings"] = warnings_for(p);
    out << j.dump(2) << '\n';
  } else if (config.format == Format::csv) {
    out << "m,engine,oracle,match\n";
    for (std::size_t m = 1; m <= config.max_order; ++m) {
      Scalar truth = oracle::brute_moment(p, m, config.expansion_cap);
      Scalar got = m <= mv.values.size() ? mv.at(m) : Scalar();
      out << m << ',' << got << ',' << truth << ',' << (got == truth ? "yes" : "no") << '\n';
    }
  } else {
    if (pass) {
      out << "PASS: engine equals brute-force oracle for m = 1.." << config.max_order << '\n';
    } else {
      out << "FAIL: first mismatch at m = " << mismatches.front().m << '\n';
      for (const auto& mm : mismatches)
        out << "  m = " << mm.m << ": engine " << mm.engine << ", oracle " << mm.oracle << '\n';
    }
  }
  return pass ? kOk : kInvariantViolation;
}

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& /*err*/) {
  NCPolynomial p = parse_input(config);
  ProbeReport report = complexity_probe(p, config.sweep, config.expansion_cap);

  if (config.format == Format::json) {
    ordered_json j;
    j["poly"] = p.to_string();
    j["n_vars"] = p.n_vars();
    j["expansion_cap"] = config.expansion_cap;
    j["rows"] = ordered_json::array();
    for (const auto& r : report.rows) {
      j["rows"].push_back({{"method", "engine"}, {"M", r.order}, {"seconds", r.engine_seconds}, {"status", "ok"}});
      ordered_json naive{{"method", "naive"}, {"M", r.order}};
      if (r.naive_seconds) {
        naive["seconds"] = *r.naive_seconds;
        naive["status"] = r.naive_matches ? "ok" : "mismatch";
      } else {
        naive["seconds"] = nullptr;
        naive["status"] = "capped";
      }
      j["rows"].push_back(std::move(naive));
    }
    j["slope"] = report.engine_slope;
    out << j.dump(2) << '\n';
    return kOk;
  }

  if (config.format == Format::csv) {
    out << "method,M,seconds,status\n";
    for (const auto& r : report.rows) out << "engine," << r.order << ',' << r.engine_seconds << ",ok\n";
    for (const auto& r : report.rows) {
      out << "naive," << r.order << ',';
      if (r.naive_seconds)
        out << *r.naive_seconds << ',' << (r.naive_matches ? "ok" : "mismatch") << '\n';
      else
        out << ",capped\n";
    }
    out << "slope,,," << report.engine_slope << '\n';
    return kOk;
  }

  out << "poly: " << p.to_string() << '\n';
  out << std::left << std::setw(8) << "method" << std::setw(6) << "M" << std::setw(14) << "seconds"
      << "status\n";
  for (const char* method : {"engine", "naive"}) {
    for (const auto& r : report.rows) {
      out << std::setw(8) << method << std::setw(6) << r.order;
      if (std::string(method) == "engine") {
        out << std::setw(14) << r.engine_seconds << "ok\n";
      } else if (r.naive_seconds) {
        out << std::setw(14) << *r.naive_seconds << (r.naive_matches ? "ok" : "mismatch") << '\n';
      } else {
        out << std::setw(14) << "-" << "capped\n";
      }
    }
  }
  out << "engine log-log slope: " << report.engine_slope << '\n';
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact moments of polynomials in free semicircular elements", "freemoments"};
  app.require_subcommand(1);

  RunConfig config;
  std::size_t n_vars = 0;
  std::string format = "text";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--poly", config.poly_text, "Polynomial, e.g. \"x1*x2 + x2*x1\"")->required();
    sub->add_option("--n-vars", n_vars, "Number of variables (default: highest index used)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-order", config.max_order, "Highest moment order M")->check(CLI::PositiveNumber);
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--expansion-cap", config.expansion_cap, "Brute-force expansion cap (monomials)")
        ->envname("FREEMOMENTS_EXPANSION_CAP")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--decimal", config.decimal, "Also print decimal approximations");
  };

  auto* moments_cmd = app.add_subcommand("moments", "Compute tau(p^m) for m = 1..M");
  auto* verify_cmd = app.add_subcommand("verify", "Compare the engine with the brute-force oracle");
  auto* bench_cmd = app.add_subcommand("bench", "Time engine and naive expansion over a sweep of M");
  add_common(moments_cmd);
  add_common(verify_cmd);
  add_common(bench_cmd);
  bench_cmd->add_option("--sweep", config.sweep, "Orders to time, e.g. 8,16,32")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  if (n_vars != 0) config.n_vars = n_vars;
  config.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

  try {
    if (moments_cmd->parsed()) {
      config.command = "moments";
      return cmd_moments(config, out, err);
    }
    if (verify_cmd->parsed()) {
      config.command = "verify";
      return cmd_verify(config, out, err);
    }
    config.command = "bench";
    return cmd_bench(config, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kOracleCapExceeded;
  } catch (const std::exception& e) {
    err << "error: internal failure: " << e.what() << '\n';
    return kInvariantViolation;
  }
}

}  // namespace freemoments::cli
