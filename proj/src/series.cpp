#include "freemoments/series.hpp"

namespace freemoments {

std::string ZPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string term = c.is_real() ? c.to_string() : "(" + c.to_string() + ")";
    if (k == 1) term += "*z";
    if (k > 1) term += "*z^" + std::to_string(k);
    if (!out.empty() && term.front() != '-') out += '+';
    out += term;
  }
  return out;
}

}  // namespace freemoments
