#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freemoments/kernels.hpp"
#include "freemoments/linrep.hpp"
#include "freemoments/ncpoly.hpp"
#include "freemoments/series.hpp"

namespace freemoments {

enum class Kernel { parallel, reference };

/// tau(p(s_1..s_n)^m) for m = 1..M plus bookkeeping about how it was computed.
struct MomentVector {
  std::vector<Scalar> values;  // values[m-1] = m-th moment
  std::size_t dim = 0;         // N of the (zq)* representation; 0 when p is constant
  std::size_t iterations = 0;  // fixed-point steps performed
  std::size_t n_vars = 0;
  std::size_t degree = 0;
  std::size_t n_terms = 0;

  std::size_t max_order() const noexcept { return values.size(); }
  /// 1-based.
  const Scalar& at(std::size_t m) const { return values.at(m - 1); }
};

/// Entry-wise image of mu(x_i) in C[z]/(z^{M+1}), one matrix per variable.
std::vector<SeriesMatrix<Scalar>> reduce_rep(const LinearRepresentation& rep, std::size_t order);

/// Runs the fixed-point recurrence `iterations` times from P = 0 and returns entry (1, N).
TruncatedSeries iterate_system(const std::vector<SeriesMatrix<Scalar>>& mats, std::size_t dim,
                               std::size_t order, std::size_t iterations,
                               Kernel kernel = Kernel::parallel);

/// First M moments of p evaluated at free standard semicircular elements.
MomentVector moments(const NCPolynomial& p, std::size_t max_order, Kernel kernel = Kernel::parallel);

/// tau(q^m) for m = 1..M (no constant recombination); q must be nonzero and constant-free.
/// The representation size and iteration count are written to the optional outputs.
std::vector<Scalar> centered_moments(const NCPolynomial& q, std::size_t max_order, Kernel kernel,
                                     std::size_t* dim_out = nullptr,
                                     std::size_t* iterations_out = nullptr);

/// sum_k C(m,k) c^k tau(q^{m-k}) with tau(q^0) = 1.
std::vector<Scalar> recombine_constant(const Scalar& c, const std::vector<Scalar>& centered);

struct ProbeRow {
  std::size_t order = 0;
  double engine_seconds = 0;
  std::optional<double> naive_seconds;  // empty when the expansion cap refused the request
  bool naive_matches = false;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  double engine_slope = 0;  // least-squares slope of log(time) against log(M)
};

/// Times the engine and the naive expansion on a sweep of orders.
ProbeReport complexity_probe(const NCPolynomial& p, const std::vector<std::size_t>& sweep,
                             std::size_t expansion_cap);

}  // namespace freemoments
