#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "freemoments/error.hpp"
#include "freemoments/scalar.hpp"

namespace freemoments {

/// Element of C[z]/(z^{M+1}): a dense coefficient vector of length exactly M+1.
///
/// The coefficient type only needs `+=`, `is_zero` and `add_product`; the
/// engine instantiates it with Scalar and, on its integral fast path, mpz_class.
template <class Coeff>
class BasicSeries {
 public:
  using value_type = Coeff;

  explicit BasicSeries(std::size_t order = 0) : coeffs_(order + 1) {}

  BasicSeries(std::size_t order, std::initializer_list<Coeff> init) : coeffs_(order + 1) {
    if (init.size() > coeffs_.size())
      throw OrderMismatch("initializer longer than truncation order + 1");
    std::size_t i = 0;
    for (const auto& c : init) coeffs_[i++] = c;
  }

  static BasicSeries one(std::size_t order) {
    BasicSeries s(order);
    s.coeffs_[0] = Coeff(1);
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const Coeff& operator[](std::size_t k) const { return coeffs_[k]; }
  Coeff& operator[](std::size_t k) { return coeffs_[k]; }

  const std::vector<Coeff>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!freemoments::is_zero(c)) return false;
    return true;
  }

  BasicSeries& operator+=(const BasicSeries& o) {
    check_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }

  /// this += a*b, schoolbook, truncated.
  void add_product_of(const BasicSeries& a, const BasicSeries& b) {
    check_order(a);
    check_order(b);
    const std::size_t n = coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (freemoments::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (freemoments::is_zero(b.coeffs_[j])) continue;
        add_product(coeffs_[i + j], a.coeffs_[i], b.coeffs_[j]);
      }
    }
  }

  friend BasicSeries operator+(BasicSeries a, const BasicSeries& b) { return a += b; }

  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    BasicSeries out(a.order());
    out.add_product_of(a, b);
    return out;
  }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void check_order(const BasicSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size())
      throw OrderMismatch("truncation orders differ: " + std::to_string(order()) + " vs " +
                          std::to_string(o.order()));
  }

  std::vector<Coeff> coeffs_;
};

using TruncatedSeries = BasicSeries<Scalar>;

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + b;
}

inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a * b;
}

/// Untruncated polynomial in z; trailing zero coefficients are never stored.
class ZPolynomial {
 public:
  ZPolynomial() = default;
  ZPolynomial(Scalar constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  explicit ZPolynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// c * z^k
  static ZPolynomial monomial(Scalar c, std::size_t k) {
    std::vector<Scalar> v(k + 1);
    v[k] = std::move(c);
    return ZPolynomial(std::move(v));
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

  ZPolynomial& operator+=(const ZPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }

  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }

  friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return ZPolynomial(std::move(out));
  }

  friend bool operator==(const ZPolynomial& a, const ZPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// e.g. "3*z-1/2*z^2"; "0" for zero.
  std::string to_string() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

}  // namespace freemoments
