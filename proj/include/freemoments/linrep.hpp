#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "freemoments/matrix.hpp"
#include "freemoments/ncpoly.hpp"
#include "freemoments/series.hpp"

namespace freemoments {

/// Monoid homomorphism mu: F(X) -> M_N(C[z]) for a constant-free rational series a,
/// with coefficient(a, F) = mu(F)(1, N). Matrices are stored 0-based, so the
/// readout entry is (0, N-1).
class LinearRepresentation {
 public:
  using Matrix = SquareMatrix<ZPolynomial>;

  LinearRepresentation(std::size_t n_vars, std::size_t dim);

  std::size_t n_vars() const noexcept { return mats_.size(); }
  std::size_t dim() const noexcept { return dim_; }

  /// mu(x_i), 1-based variable index.
  const Matrix& matrix(std::size_t var) const { return mats_.at(var - 1); }
  Matrix& matrix(std::size_t var) { return mats_.at(var - 1); }

  /// True when no transition enters the initial state (column 1 is zero in every matrix).
  bool initial_column_is_zero() const;

  friend bool operator==(const LinearRepresentation&, const LinearRepresentation&) = default;

 private:
  std::size_t dim_;
  std::vector<Matrix> mats_;
};

/// coeff * x_i, N = 2.
LinearRepresentation rep_variable(std::size_t var, std::size_t n_vars,
                                  const ZPolynomial& coeff = ZPolynomial(Scalar(1)));

/// Series product a*b, N = N_a + N_b.
LinearRepresentation rep_product(const LinearRepresentation& a, const LinearRepresentation& b);

/// r1*a + r2*b, N = N_a + N_b + 2. The scalars ride on the transitions out of
/// the fresh initial state, so every word picks them up exactly once.
LinearRepresentation rep_linear_combination(const ZPolynomial& r1, const LinearRepresentation& a,
                                            const ZPolynomial& r2, const LinearRepresentation& b);

/// a* = sum_{k>=1} a^k, same N: column 1 of every matrix is overwritten by column N.
/// Requires initial_column_is_zero(); throws InvalidInput otherwise.
LinearRepresentation rep_star(const LinearRepresentation& a);

/// Representation of (z*q)^* for a nonzero constant-free polynomial q.
LinearRepresentation build_zq_star(const NCPolynomial& q);

/// Coefficient of word F: entry (1, N) of mu(F).
ZPolynomial coefficient(const LinearRepresentation& rep, const Word& word);

/// One block per variable: "X<i>:" followed by N rows of space-separated entries.
std::string dump(const LinearRepresentation& rep);

}  // namespace freemoments
