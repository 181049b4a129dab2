#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "freemoments/scalar.hpp"

namespace freemoments {

/// Element of the free monoid on x1..xn. Letters are 1-based variable indices;
/// the empty word is the unit.
struct Word {
  std::vector<std::uint32_t> letters;

  Word() = default;
  Word(std::initializer_list<std::uint32_t> init) : letters(init) {}
  explicit Word(std::vector<std::uint32_t> l) : letters(std::move(l)) {}

  std::size_t size() const noexcept { return letters.size(); }
  bool empty() const noexcept { return letters.empty(); }
  std::uint32_t operator[](std::size_t k) const { return letters[k]; }

  Word reversed() const { return Word(std::vector<std::uint32_t>(letters.rbegin(), letters.rend())); }

  friend Word operator*(const Word& a, const Word& b) {
    Word out = a;
    out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;

  // Length-lexicographic: shorter words first, ties broken lexicographically.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.letters <=> b.letters;
  }

  /// "x1*x2*x1", or "1" for the unit.
  std::string to_string() const;
};

/// Non-commutative polynomial: finite map Word -> Scalar with no zero values.
class NCPolynomial {
 public:
  using TermMap = std::map<Word, Scalar>;

  explicit NCPolynomial(std::size_t n_vars);

  static NCPolynomial constant(std::size_t n_vars, Scalar c);
  static NCPolynomial monomial(std::size_t n_vars, Word w, Scalar c = Scalar(1));

  std::size_t n_vars() const noexcept { return n_vars_; }
  /// Longest word among stored terms; 0 for the zero polynomial.
  std::size_t degree() const noexcept { return degree_; }
  std::size_t n_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Terms in length-lexicographic order.
  const TermMap& terms() const noexcept { return terms_; }
  Scalar coefficient(const Word& w) const;

  /// Adds c*w, dropping the term if it cancels.
  void add_term(const Word& w, const Scalar& c);

  /// Reverses every word and conjugates every coefficient.
  NCPolynomial adjoint() const;
  bool is_self_adjoint() const { return adjoint() == *this; }

  /// Canonical text form; parse_polynomial(to_string()) reproduces *this.
  std::string to_string() const;

  NCPolynomial& operator+=(const NCPolynomial& o);
  NCPolynomial& operator-=(const NCPolynomial& o);
  NCPolynomial& operator*=(const Scalar& c);

  friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
  friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }
  friend NCPolynomial operator*(NCPolynomial a, const Scalar& c) { return a *= c; }
  friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b);

  friend bool operator==(const NCPolynomial& a, const NCPolynomial& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_vars(const NCPolynomial& o) const;
  void check_word(const Word& w) const;
  void refresh_degree();

  std::size_t n_vars_;
  std::size_t degree_ = 0;
  TermMap terms_;
};

inline NCPolynomial multiply(const NCPolynomial& p, const NCPolynomial& q) { return p * q; }

/// Constant part c and the constant-free remainder q = p - c.
struct ConstantSplit {
  Scalar constant;
  NCPolynomial rest;
};
ConstantSplit split_constant(const NCPolynomial& p);

/// Parses the polynomial grammar
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := factor ('*' factor)*
///   factor := atom ('^' uint)?
///   atom := 'x' uint | uint ['/' uint] | 'i' | '(' expr ')'
/// Decimal literals and implicit multiplication are rejected. With no n_vars the
/// highest variable index that appears is used.
NCPolynomial parse_polynomial(std::string_view text, std::optional<std::size_t> n_vars = std::nullopt);

/// Highest variable index in the text (0 if none). Throws ParseError on bad syntax.
std::size_t max_variable_index(std::string_view text);

}  // namespace freemoments
