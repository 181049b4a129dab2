#pragma once

// Fixed-point iteration P <- sum_i (mu_i (P + I))^2 over M_N(C[z]/(z^{M+1})).
//
// Two kernels compute the same recurrence:
//   iterate_reference  serial, dense, no shortcuts; kept as the test baseline.
//   iterate_parallel   skips zero entries and rows, OpenMP over output rows.
// Both return entry (1, N) of P^T.

#include <cstddef>
#include <vector>

#include "freemoments/matrix.hpp"
#include "freemoments/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace freemoments {

template <class Coeff>
using SeriesMatrix = SquareMatrix<BasicSeries<Coeff>>;

namespace detail {

template <class Coeff>
SeriesMatrix<Coeff> zero_matrix(std::size_t dim, std::size_t order) {
  return SeriesMatrix<Coeff>(dim, BasicSeries<Coeff>(order));
}

template <class Coeff>
SeriesMatrix<Coeff> dense_product(const SeriesMatrix<Coeff>& a, const SeriesMatrix<Coeff>& b,
                                  std::size_t order) {
  const std::size_t n = a.dim();
  auto out = zero_matrix<Coeff>(n, order);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < n; ++k) out(r, c).add_product_of(a(r, k), b(k, c));
  return out;
}

template <class Coeff>
void add_identity(SeriesMatrix<Coeff>& m) {
  for (std::size_t d = 0; d < m.dim(); ++d) m(d, d)[0] += Coeff(1);
}

}  // namespace detail

template <class Coeff>
BasicSeries<Coeff> iterate_reference(const std::vector<SeriesMatrix<Coeff>>& mats, std::size_t dim,
                                     std::size_t order, std::size_t iterations) {
  auto p = detail::zero_matrix<Coeff>(dim, order);
  for (std::size_t t = 0; t < iterations; ++t) {
    auto shifted = p;
    detail::add_identity(shifted);
    auto next = detail::zero_matrix<Coeff>(dim, order);
    for (const auto& mu : mats) {
      auto a = detail::dense_product(mu, shifted, order);
      auto sq = detail::dense_product(a, a, order);
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) next(r, c) += sq(r, c);
    }
    p = std::move(next);
  }
  return p(0, dim - 1);
}

template <class Coeff>
BasicSeries<Coeff> iterate_parallel(const std::vector<SeriesMatrix<Coeff>>& mats, std::size_t dim,
                                    std::size_t order, std::size_t iterations) {
  struct Entry {
    std::size_t col;
    const BasicSeries<Coeff>* value;
  };
  // Sparse rows of each mu_i; they never change during the iteration.
  std::vector<std::vector<std::vector<Entry>>> sparse(mats.size());
  for (std::size_t i = 0; i < mats.size(); ++i) {
    sparse[i].resize(dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        if (!mats[i](r, c).is_zero()) sparse[i][r].push_back({c, &mats[i](r, c)});
  }

  auto p = detail::zero_matrix<Coeff>(dim, order);
  auto a = detail::zero_matrix<Coeff>(dim, order);
  std::vector<char> a_nonzero(dim * dim);
  std::vector<long> active;

  for (std::size_t t = 0; t < iterations; ++t) {
    detail::add_identity(p);  // p now holds P + I
    auto next = detail::zero_matrix<Coeff>(dim, order);

    for (std::size_t i = 0; i < mats.size(); ++i) {
      active.clear();
      for (std::size_t r = 0; r < dim; ++r)
        if (!sparse[i][r].empty()) active.push_back(static_cast<long>(r));
      const long n_active = static_cast<long>(active.size());

      // a = mu_i (P + I), rows of mu_i that are entirely zero stay zero.
#pragma omp parallel for schedule(dynamic)
      for (long idx = 0; idx < n_active; ++idx) {
        const auto r = static_cast<std::size_t>(active[idx]);
        for (std::size_t c = 0; c < dim; ++c) {
          BasicSeries<Coeff> acc(order);
          for (const auto& e : sparse[i][r]) acc.add_product_of(*e.value, p(e.col, c));
          a_nonzero[r * dim + c] = acc.is_zero() ? 0 : 1;
          a(r, c) = std::move(acc);
        }
      }

      std::vector<char> row_active(dim, 0);
      for (long r : active) row_active[static_cast<std::size_t>(r)] = 1;

      // next += a * a, only through rows of a that were computed.
#pragma omp parallel for schedule(dynamic)
      for (long idx = 0; idx < n_active; ++idx) {
        const auto r = static_cast<std::size_t>(active[idx]);
        for (std::size_t k = 0; k < dim; ++k) {
          if (!row_active[k] || !a_nonzero[r * dim + k]) continue;
          for (std::size_t c = 0; c < dim; ++c) {
            if (!a_nonzero[k * dim + c]) continue;
            next(r, c).add_product_of(a(r, k), a(k, c));
          }
        }
      }
    }
    p = std::move(next);
  }
  return p(0, dim - 1);
}

inline int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace freemoments
