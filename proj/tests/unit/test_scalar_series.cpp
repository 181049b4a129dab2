#include <doctest.h>

#include "freemoments/series.hpp"
#include "properties.hpp"

using namespace freemoments;

namespace {

TruncatedSeries ints(std::size_t order, std::initializer_list<long> values) {
  TruncatedSeries s(order);
  std::size_t k = 0;
  for (long v : values) s[k++] = Scalar(v);
  return s;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar a(mpq_class(1, 3));
  Scalar b(mpq_class(2, 6), mpq_class(-1, 2));
  CHECK(b.re() == mpq_class(1, 3));
  CHECK((a + b) - b == a);
  CHECK(Scalar::imaginary_unit() * Scalar::imaginary_unit() == Scalar(-1));
  CHECK((b / b) == Scalar(1));
  CHECK(pow(Scalar(mpq_class(-2, 3)), 3) == Scalar(mpq_class(-8, 27)));
  CHECK_THROWS_AS(a / Scalar(), std::domain_error);
}

TEST_CASE("scalar exact string form") {
  CHECK(Scalar(mpq_class(3, 2)).to_string() == "3/2");
  CHECK(Scalar(7).to_string() == "7");
  CHECK(Scalar(mpq_class(1, 2), mpq_class(-3, 4)).to_string() == "1/2-3/4*i");
  CHECK(Scalar(mpq_class(0), mpq_class(2)).to_string() == "0+2*i");
  CHECK(Scalar::from_string("-5/10+1/3*i") == Scalar(mpq_class(-1, 2), mpq_class(1, 3)));
  CHECK(Scalar::from_string("4*i") == Scalar(mpq_class(0), mpq_class(4)));
  CHECK_THROWS_AS(Scalar::from_string("1.5"), ParseError);
  CHECK_THROWS_AS(Scalar::from_string("1/0"), ParseError);
}

TEST_CASE("series_add examples") {
  CHECK(series_add(ints(1, {1, 2}), ints(1, {0, 3})) == ints(1, {1, 5}));
  auto a = ints(3, {4, -1, 0, 2});
  CHECK(series_add(a, TruncatedSeries(3)) == a);
  CHECK(series_add(ints(2, {1, 1, 0}), ints(2, {0, 0, 1})) == ints(2, {1, 1, 1}));
}

TEST_CASE("series_mul examples") {
  CHECK(series_mul(ints(2, {0, 1, 0}), ints(2, {0, 1, 0})) == ints(2, {0, 0, 1}));
  CHECK(series_mul(ints(1, {0, 1}), ints(1, {0, 1})) == ints(1, {0, 0}));
  // (1 + z + z^2)^2 = 1 + 2z + 3z^2 + 2z^3 + z^4
  CHECK(series_mul(ints(2, {1, 1, 1}), ints(2, {1, 1, 1})) == ints(2, {1, 2, 3}));
}

TEST_CASE("mismatched truncation orders are rejected") {
  CHECK_THROWS_AS(series_add(TruncatedSeries(1), TruncatedSeries(2)), OrderMismatch);
  CHECK_THROWS_AS(series_mul(TruncatedSeries(3), TruncatedSeries(2)), OrderMismatch);
}

TEST_CASE("series length is order + 1") {
  for (std::size_t m = 0; m < 6; ++m) {
    TruncatedSeries s(m);
    CHECK(s.size() == m + 1);
    CHECK((s * s).size() == m + 1);
  }
}

TEST_CASE("z-polynomial text form") {
  ZPolynomial p(std::vector<Scalar>{Scalar(0), Scalar(3), Scalar(mpq_class(-1, 2))});
  CHECK(p.to_string() == "3*z-1/2*z^2");
  CHECK(ZPolynomial().to_string() == "0");
  CHECK(p.degree() == 2);
  CHECK((p * ZPolynomial()).is_zero());
}

TEST_CASE("property: ring laws") {
  auto r = testing::prop_series_ring_laws(11);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: truncated product matches full product") {
  auto r = testing::prop_series_mul_matches_polynomial(12);
  INFO(r.first_failure);
  CHECK(r.ok());
}

TEST_CASE("property: scalar string round-trip") {
  auto r = testing::prop_scalar_string_roundtrip(13);
  INFO(r.first_failure);
  CHECK(r.ok());
}
