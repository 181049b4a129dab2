#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "freemoments/engine.hpp"
#include "freemoments/oracle.hpp"

namespace freemoments::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 2,
  kInvariantViolation = 3,
  kOracleCapExceeded = 4,
};

enum class Format { json, csv, text };

struct RunConfig {
  std::string command;  // moments | verify | bench
  std::string poly_text;
  std::optional<std::size_t> n_vars;
  std::size_t max_order = 8;
  Format format = Format::text;
  std::size_t expansion_cap = oracle::kDefaultExpansionCap;
  std::vector<std::size_t> sweep{8, 16, 32};
  bool decimal = false;
};

using MomentFunction = std::function<MomentVector(const NCPolynomial&, std::size_t)>;

int cmd_moments(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Engine against brute-force oracle for m = 1..M. `engine` is swappable so
/// tests can inject a faulty implementation.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err,
               const MomentFunction& engine = [](const NCPolynomial& p, std::size_t m) {
                 return moments(p, m);
               });

int cmd_bench(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and dispatches; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace freemoments::cli
