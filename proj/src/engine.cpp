#include "freemoments/engine.hpp"

#include "freemoments/error.hpp"

namespace freemoments {

namespace {

template <class Coeff, class Convert>
std::vector<SeriesMatrix<Coeff>> reduce_with(const LinearRepresentation& rep, std::size_t order,
                                             Convert convert) {
  const std::size_t n = rep.dim();
  std::vector<SeriesMatrix<Coeff>> out;
  out.reserve(rep.n_vars());
  for (std::size_t v = 1; v <= rep.n_vars(); ++v) {
    SeriesMatrix<Coeff> m(n, BasicSeries<Coeff>(order));
    const auto& src = rep.matrix(v);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        const auto& coeffs = src(r, c).coeffs();
        for (std::size_t k = 0; k < coeffs.size() && k <= order; ++k) m(r, c)[k] = convert(coeffs[k]);
      }
    }
    out.push_back(std::move(m));
  }
  return out;
}

// Least common multiple of every coefficient denominator (real and imaginary parts).
mpz_class common_denominator(const NCPolynomial& q) {
  mpz_class d = 1;
  for (const auto& [w, c] : q.terms()) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return d;
}

bool all_real(const NCPolynomial& q) {
  for (const auto& [w, c] : q.terms())
    if (!c.is_real()) return false;
  return true;
}

}  // namespace

std::vector<SeriesMatrix<Scalar>> reduce_rep(const LinearRepresentation& rep, std::size_t order) {
  return reduce_with<Scalar>(rep, order, [](const Scalar& s) { return s; });
}

TruncatedSeries iterate_system(const std::vector<SeriesMatrix<Scalar>>& mats, std::size_t dim,
                               std::size_t order, std::size_t iterations, Kernel kernel) {
  if (iterations == 0) throw InvalidInput("iteration count must be at least 1");
  if (kernel == Kernel::reference) return iterate_reference(mats, dim, order, iterations);
  return iterate_parallel(mats, dim, order, iterations);
}

std::vector<Scalar> centered_moments(const NCPolynomial& q, std::size_t max_order, Kernel kernel,
                                     std::size_t* dim_out, std::size_t* iterations_out) {
  if (max_order == 0) throw InvalidInput("max order must be at least 1");
  const std::size_t iterations = q.degree() * max_order;

  // tau((q/D)^m) = tau(q^m)/D^m: clearing denominators first keeps the
  // iteration in integers whenever the coefficients are real.
  const mpz_class denom = common_denominator(q);
  const NCPolynomial scaled = q * Scalar(mpq_class(denom));
  const LinearRepresentation rep = build_zq_star(scaled);
  if (dim_out) *dim_out = rep.dim();
  if (iterations_out) *iterations_out = iterations;

  std::vector<Scalar> raw(max_order);
  if (kernel == Kernel::parallel && all_real(scaled)) {
    auto mats = reduce_with<mpz_class>(rep, max_order, [](const Scalar& s) { return s.re().get_num(); });
    auto series = iterate_parallel(mats, rep.dim(), max_order, iterations);
    for (std::size_t m = 1; m <= max_order; ++m) raw[m - 1] = Scalar(mpq_class(series[m]));
  } else {
    auto series = iterate_system(reduce_rep(rep, max_order), rep.dim(), max_order, iterations, kernel);
    for (std::size_t m = 1; m <= max_order; ++m) raw[m - 1] = series[m];
  }

  Scalar scale(1);
  const Scalar step(mpq_class(1, denom));
  for (auto& v : raw) {
    scale *= step;
    v *= scale;
  }
  return raw;
}

std::vector<Scalar> recombine_constant(const Scalar& c, const std::vector<Scalar>& centered) {
  const std::size_t max_order = centered.size();
  std::vector<Scalar> c_pow(max_order + 1);
  c_pow[0] = Scalar(1);
  for (std::size_t k = 1; k <= max_order; ++k) c_pow[k] = c_pow[k - 1] * c;

  std::vector<Scalar> out(max_order);
  for (std::size_t m = 1; m <= max_order; ++m) {
    Scalar sum;
    for (std::size_t k = 0; k <= m; ++k) {
      const std::size_t rest = m - k;
      if (c_pow[k].is_zero()) continue;
      const Scalar& tau = rest == 0 ? Scalar(1) : centered[rest - 1];
      if (tau.is_zero()) continue;
      sum += Scalar(mpq_class(binomial(static_cast<unsigned>(m), static_cast<unsigned>(k)))) * c_pow[k] * tau;
    }
    out[m - 1] = std::move(sum);
  }
  return out;
}

MomentVector moments(const NCPolynomial& p, std::size_t max_order, Kernel kernel) {
  if (max_order == 0) throw InvalidInput("max order must be at least 1");
  MomentVector out;
  out.n_vars = p.n_vars();
  out.degree = p.degree();
  out.n_terms = p.n_terms();

  auto [c, q] = split_constant(p);
  if (q.is_zero()) {
    out.values.resize(max_order);
    Scalar power(1);
    for (auto& v : out.values) v = (power *= c);
    return out;
  }
  auto centered = centered_moments(q, max_order, kernel, &out.dim, &out.iterations);
  out.values = c.is_zero() ? std::move(centered) : recombine_constant(c, centered);
  return out;
}

}  // namespace freemoments
