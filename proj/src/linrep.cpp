#include "freemoments/linrep.hpp"

#include <optional>

#include "freemoments/error.hpp"

namespace freemoments {

LinearRepresentation::LinearRepresentation(std::size_t n_vars, std::size_t dim)
    : dim_(dim), mats_(n_vars, Matrix(dim, ZPolynomial())) {
  if (n_vars == 0) throw InvalidInput("representation needs at least one variable");
  if (dim < 2) throw InvalidInput("representation dimension must be at least 2");
}

bool LinearRepresentation::initial_column_is_zero() const {
  for (const auto& m : mats_)
    for (std::size_t r = 0; r < dim_; ++r)
      if (!m(r, 0).is_zero()) return false;
  return true;
}

namespace {

void require_same_vars(const LinearRepresentation& a, const LinearRepresentation& b) {
  if (a.n_vars() != b.n_vars())
    throw VariableMismatch("representations over " + std::to_string(a.n_vars()) + " and " +
                           std::to_string(b.n_vars()) + " variables");
}

}  // namespace

LinearRepresentation rep_variable(std::size_t var, std::size_t n_vars, const ZPolynomial& coeff) {
  if (var == 0 || var > n_vars)
    throw InvalidInput("variable index " + std::to_string(var) + " out of range 1.." +
                       std::to_string(n_vars));
  LinearRepresentation rep(n_vars, 2);
  rep.matrix(var)(0, 1) = coeff;
  return rep;
}

LinearRepresentation rep_product(const LinearRepresentation& a, const LinearRepresentation& b) {
  require_same_vars(a, b);
  const std::size_t n1 = a.dim();
  const std::size_t n2 = b.dim();
  LinearRepresentation out(a.n_vars(), n1 + n2);
  for (std::size_t v = 1; v <= a.n_vars(); ++v) {
    const auto& z = a.matrix(v);
    const auto& w = b.matrix(v);
    auto& m = out.matrix(v);
    for (std::size_t r = 0; r < n1; ++r) {
      for (std::size_t c = 0; c < n1; ++c) m(r, c) = z(r, c);
      // Reaching the final state of a also enters the initial state of b.
      m(r, n1) = z(r, n1 - 1);
    }
    for (std::size_t r = 0; r < n2; ++r)
      for (std::size_t c = 0; c < n2; ++c) m(n1 + r, n1 + c) = w(r, c);
  }
  return out;
}

LinearRepresentation rep_linear_combination(const ZPolynomial& r1, const LinearRepresentation& a,
                                            const ZPolynomial& r2, const LinearRepresentation& b) {
  require_same_vars(a, b);
  const std::size_t n1 = a.dim();
  const std::size_t n2 = b.dim();
  const std::size_t n = n1 + n2 + 2;
  const std::size_t last = n - 1;
  LinearRepresentation out(a.n_vars(), n);
  for (std::size_t v = 1; v <= a.n_vars(); ++v) {
    const auto& z = a.matrix(v);
    const auto& w = b.matrix(v);
    auto& m = out.matrix(v);

    for (std::size_t c = 0; c < n1; ++c) m(0, 1 + c) = r1 * z(0, c);
    for (std::size_t c = 0; c < n2; ++c) m(0, 1 + n1 + c) = r2 * w(0, c);
    m(0, last) = r1 * z(0, n1 - 1) + r2 * w(0, n2 - 1);

    for (std::size_t r = 0; r < n1; ++r) {
      for (std::size_t c = 0; c < n1; ++c) m(1 + r, 1 + c) = z(r, c);
      m(1 + r, last) = z(r, n1 - 1);
    }
    for (std::size_t r = 0; r < n2; ++r) {
      for (std::size_t c = 0; c < n2; ++c) m(1 + n1 + r, 1 + n1 + c) = w(r, c);
      m(1 + n1 + r, last) = w(r, n2 - 1);
    }
  }
  return out;
}

LinearRepresentation rep_star(const LinearRepresentation& a) {
  // Redirecting "enter final" to also "enter initial" only counts restarts
  // correctly when nothing else enters the initial state.
  if (!a.initial_column_is_zero())
    throw InvalidInput("star needs a representation whose initial state has no incoming transitions");
  LinearRepresentation out = a;
  const std::size_t last = a.dim() - 1;
  for (std::size_t v = 1; v <= a.n_vars(); ++v) {
    auto& m = out.matrix(v);
    for (std::size_t r = 0; r < a.dim(); ++r) m(r, 0) = m(r, last);
  }
  return out;
}

LinearRepresentation build_zq_star(const NCPolynomial& q) {
  if (q.is_zero()) throw InvalidInput("(zq)* needs a nonzero polynomial");
  if (!q.coefficient(Word{}).is_zero()) throw InvalidInput("(zq)* needs q without constant term");

  const std::size_t n = q.n_vars();
  std::optional<LinearRepresentation> acc;
  for (const auto& [word, c] : q.terms()) {
    LinearRepresentation term = rep_variable(word[0], n, ZPolynomial::monomial(c, 1));
    for (std::size_t k = 1; k < word.size(); ++k) term = rep_product(term, rep_variable(word[k], n));
    if (!acc) {
      acc = std::move(term);
    } else {
      acc = rep_linear_combination(Scalar(1), *acc, Scalar(1), term);
    }
  }
  return rep_star(*acc);
}

ZPolynomial coefficient(const LinearRepresentation& rep, const Word& word) {
  const std::size_t n = rep.dim();
  for (auto l : word.letters)
    if (l == 0 || l > rep.n_vars())
      throw InvalidInput("letter x" + std::to_string(l) + " out of range 1.." +
                         std::to_string(rep.n_vars()));
  // Row vector e_1^T mu(F), accumulated letter by letter.
  std::vector<ZPolynomial> row(n);
  row[0] = Scalar(1);
  for (auto l : word.letters) {
    const auto& m = rep.matrix(l);
    std::vector<ZPolynomial> next(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (row[k].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!m(k, c).is_zero()) next[c] += row[k] * m(k, c);
    }
    row = std::move(next);
  }
  return row[n - 1];
}

std::string dump(const LinearRepresentation& rep) {
  std::string out;
  for (std::size_t v = 1; v <= rep.n_vars(); ++v) {
    out += "X" + std::to_string(v) + ":\n";
    const auto& m = rep.matrix(v);
    for (std::size_t r = 0; r < rep.dim(); ++r) {
      for (std::size_t c = 0; c < rep.dim(); ++c) {
        if (c) out += ' ';
        out += m(r, c).to_string();
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace freemoments
