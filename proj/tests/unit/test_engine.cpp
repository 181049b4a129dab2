#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "freemoments/engine.hpp"
#include "freemoments/error.hpp"
#include "freemoments/oracle.hpp"
#include "properties.hpp"

using namespace freemoments;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> v) {
  std::vector<Scalar> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::vector<Scalar> coeffs(const TruncatedSeries& s) {
  std::vector<Scalar> out;
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(s[k]);
  return out;
}

}  // namespace

TEST_CASE("reduce_rep truncates entries") {
  auto rep = rep_variable(1, 1, ZPolynomial::monomial(Scalar(3), 1));
  auto m4 = reduce_rep(rep, 4);
  REQUIRE(m4.size() == 1);
  CHECK(coeffs(m4[0](0, 1)) == ints({0, 3, 0, 0, 0}));
  CHECK(m4[0](0, 0).is_zero());

  auto m0 = reduce_rep(rep, 0);
  CHECK(coeffs(m0[0](0, 1)) == ints({0}));
}

TEST_CASE("iterate_system on a single semicircular") {
  auto rep = build_zq_star(parse_polynomial("x1"));
  for (auto kernel : {Kernel::parallel, Kernel::reference}) {
    auto s = iterate_system(reduce_rep(rep, 8), rep.dim(), 8, 8, kernel);
    CHECK(coeffs(s) == ints({0, 0, 1, 0, 2, 0, 5, 0, 14}));
  }
}

TEST_CASE("iterate_system on x1 + x2") {
  auto rep = build_zq_star(parse_polynomial("x1 + x2"));
  auto s = iterate_system(reduce_rep(rep, 4), rep.dim(), 4, 4);
  CHECK(s[2] == Scalar(2));
  CHECK(s[4] == Scalar(8));
  CHECK(s[1].is_zero());
  CHECK(s[3].is_zero());
}

TEST_CASE("iterate_system is stable past T") {
  auto q = parse_polynomial("x1*x2 + x2*x1 - x1^2");
  auto rep = build_zq_star(q);
  const std::size_t order = 6;
  const std::size_t t = q.degree() * order;
  auto mats = reduce_rep(rep, order);
  CHECK(iterate_system(mats, rep.dim(), order, t) == iterate_system(mats, rep.dim(), order, t + 5));
  CHECK_THROWS_AS(iterate_system(mats, rep.dim(), order, 0), InvalidInput);
}

TEST_CASE("moments of the cubic") {
  auto mv = moments(parse_polynomial("x1^3 - 3*x1"), 4);
  CHECK(mv.at(1).is_zero());
  CHECK(mv.at(2) == Scalar(2));
  CHECK(mv.at(3).is_zero());
  CHECK(mv.at(4) == Scalar(6));
  auto kappa = oracle::free_cumulants(mv.values);
  CHECK(kappa[3] == Scalar(-2));
  CHECK(mv.degree == 3);
  CHECK(mv.n_terms == 2);
  CHECK(mv.iterations == 12);
}

TEST_CASE("moments with constants") {
  auto c = moments(parse_polynomial("7"), 3);
  CHECK(c.values == ints({7, 49, 343}));
  CHECK(c.dim == 0);

  auto shifted = moments(parse_polynomial("x1 + 1"), 2);
  CHECK(shifted.values == ints({1, 2}));

  auto complex = moments(parse_polynomial("x1 + i"), 2);
  CHECK(complex.at(1) == Scalar::imaginary_unit());
  CHECK(complex.at(2) == Scalar(0));  // i^2 + tau(x1^2) = -1 + 1
}

TEST_CASE("rational coefficients") {
  auto mv = moments(parse_polynomial("1/2*x1"), 4);
  CHECK(mv.at(2) == Scalar(mpq_class(1, 4)));
  CHECK(mv.at(4) == Scalar(mpq_class(2, 16)));
}

TEST_CASE("kernels agree on a three-variable polynomial") {
  auto p = parse_polynomial("x1*x2*x3 + x3*x2*x1 + 2*x2^2 - 1");
  CHECK(moments(p, 6, Kernel::parallel).values == moments(p, 6, Kernel::reference).values);
}

TEST_CASE("concurrent invocations are independent") {
  auto p = parse_polynomial("x1*x2 + x2*x1");
  const auto expected = moments(p, 10).values;
  std::vector<std::vector<Scalar>> results(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < results.size(); ++t)
    threads.emplace_back([&, t] { results[t] = moments(p, 10).values; });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == expected);
}

TEST_CASE("complexity probe report") {
  auto report = complexity_probe(parse_polynomial("x1*x2 + x2*x1"), {4, 8, 16}, 1000);
  REQUIRE(report.rows.size() == 3);
  CHECK(report.rows[0].order == 4);
  CHECK(report.rows[0].naive_seconds.has_value());
  CHECK(report.rows[0].naive_matches);
  CHECK_FALSE(report.rows[2].naive_seconds.has_value());
  CHECK(std::isfinite(report.engine_slope));
}

TEST_CASE("property: engine equals brute-force oracle") {
  auto r = testing::prop_engine_matches_oracle(41);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: stabilization") {
  auto r = testing::prop_stabilization(42);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: odd moments vanish for odd polynomials") {
  auto r = testing::prop_odd_vanishing(43);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: scaling covariance") {
  auto r = testing::prop_scaling_covariance(44);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: self-adjoint polynomials have real moments") {
  auto r = testing::prop_self_adjoint_reality(45);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: Hankel positivity") {
  auto r = testing::prop_hankel_positivity(46);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: kernels agree") {
  auto r = testing::prop_kernels_agree(47);
  INFO(r.first_failure);
  CHECK(r.ok());
}
