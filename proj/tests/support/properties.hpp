#pragma once

// Randomized invariant suites shared by the unit tests and the acceptance binary.
// Each check runs `cases` seeded trials and records the first counterexample.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace freemoments::testing {

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const noexcept { return failures == 0 && cases > 0; }
  void fail(std::string what) {
    if (failures++ == 0) first_failure = std::move(what);
  }
};

inline constexpr std::size_t kDefaultCases = 200;

// scalar-series
PropertyResult prop_series_ring_laws(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_series_mul_matches_polynomial(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_scalar_string_roundtrip(std::uint64_t seed, std::size_t cases = kDefaultCases);

// ncpoly
PropertyResult prop_parse_print_roundtrip(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_multiply_associative_degree(std::uint64_t seed, std::size_t cases = kDefaultCases);

// linrep
PropertyResult prop_linrep_soundness(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_star_correctness(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_linrep_dimensions(std::uint64_t seed, std::size_t cases = kDefaultCases);

// engine
PropertyResult prop_engine_matches_oracle(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_stabilization(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_odd_vanishing(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_scaling_covariance(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_self_adjoint_reality(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_hankel_positivity(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_kernels_agree(std::uint64_t seed, std::size_t cases = kDefaultCases);

// oracle
PropertyResult prop_pairing_counts();
PropertyResult prop_cross_oracle();
PropertyResult prop_brute_catalan();
PropertyResult prop_cumulant_roundtrip(std::uint64_t seed, std::size_t cases = kDefaultCases);
PropertyResult prop_traciality(std::uint64_t seed, std::size_t cases = kDefaultCases);

/// Every suite above with its default case count.
std::vector<PropertyResult> run_all_properties(std::uint64_t seed);

}  // namespace freemoments::testing
