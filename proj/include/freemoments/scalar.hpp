#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>

namespace freemoments {

/// Exact Gaussian rational a + b*i with arbitrary-precision rational parts.
///
/// mpq_class keeps both parts canonical (positive, coprime denominators),
/// so equality is structural.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses the exact form produced by to_string(): "a", "a/b", "c/d*i", "a/b+c/d*i".
  static Scalar from_string(std::string_view text);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }

  Scalar& operator+=(const Scalar& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Exact fraction string, "a/b" or "a/b+c/d*i"; integers drop the "/1".
  std::string to_string() const;
  /// Decimal approximation (display only).
  std::string to_decimal(int digits = 12) const;

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) {
    return os << s.to_string();
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

Scalar pow(const Scalar& base, unsigned exponent);
mpz_class binomial(unsigned n, unsigned k);

// Hooks used by the generic series/matrix kernels.
inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline void add_product(Scalar& acc, const Scalar& a, const Scalar& b) { acc += a * b; }

inline bool is_zero(const mpz_class& v) { return sgn(v) == 0; }
inline void add_product(mpz_class& acc, const mpz_class& a, const mpz_class& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace freemoments
