#include "freemoments/scalar.hpp"

#include <cstdio>

#include "freemoments/error.hpp"

namespace freemoments {

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  mpq_class norm = o.re_ * o.re_ + o.im_ * o.im_;
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / norm;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / norm;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string Scalar::to_string() const {
  std::string out = re_.get_str();
  if (is_real()) return out;
  if (sgn(im_) > 0) out += '+';
  out += im_.get_str();
  out += "*i";
  return out;
}

std::string Scalar::to_decimal(int digits) const {
  auto fmt = [digits](const mpq_class& q) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, q.get_d());
    return std::string(buf);
  };
  std::string out = fmt(re_);
  if (is_real()) return out;
  std::string im = fmt(im_);
  if (im.front() != '-') out += '+';
  return out + im + "*i";
}

namespace {

mpq_class parse_fraction(std::string_view text, std::size_t offset) {
  if (text.empty()) throw ParseError("empty number in scalar literal", offset);
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') ++i;
  bool seen_digit = false;
  bool seen_slash = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else if (c == '/' && seen_digit && !seen_slash) {
      seen_slash = true;
      seen_digit = false;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in scalar literal",
                       offset + i);
    }
  }
  if (!seen_digit) throw ParseError("malformed scalar literal", offset);
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  mpq_class value;
  if (value.set_str(owned, 10) != 0) throw ParseError("malformed scalar literal", offset);
  if (sgn(value.get_den()) == 0) throw ParseError("zero denominator", offset);
  value.canonicalize();
  return value;
}

}  // namespace

Scalar Scalar::from_string(std::string_view text) {
  if (text.size() >= 2 && text.substr(text.size() - 2) == "*i") {
    std::string_view body = text.substr(0, text.size() - 2);
    // Split at the sign that separates real and imaginary parts (skip a leading sign).
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if (body[i] == '+' || body[i] == '-') {
        split = i;
        break;
      }
    }
    if (split == std::string_view::npos) return Scalar(mpq_class(0), parse_fraction(body, 0));
    return Scalar(parse_fraction(body.substr(0, split), 0),
                  parse_fraction(body.substr(split), split));
  }
  return Scalar(parse_fraction(text, 0));
}

Scalar pow(const Scalar& base, unsigned exponent) {
  Scalar result(1);
  Scalar b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace freemoments
