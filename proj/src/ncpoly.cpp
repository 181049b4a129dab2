#include "freemoments/ncpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "freemoments/error.hpp"

namespace freemoments {

std::string Word::to_string() const {
  if (letters.empty()) return "1";
  std::string out;
  for (std::size_t k = 0; k < letters.size();) {
    std::size_t run = 1;
    while (k + run < letters.size() && letters[k + run] == letters[k]) ++run;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(letters[k]);
    if (run > 1) out += '^' + std::to_string(run);
    k += run;
  }
  return out;
}

NCPolynomial::NCPolynomial(std::size_t n_vars) : n_vars_(n_vars) {
  if (n_vars == 0) throw InvalidInput("polynomial needs at least one variable");
}

NCPolynomial NCPolynomial::constant(std::size_t n_vars, Scalar c) {
  NCPolynomial p(n_vars);
  p.add_term(Word{}, c);
  return p;
}

NCPolynomial NCPolynomial::monomial(std::size_t n_vars, Word w, Scalar c) {
  NCPolynomial p(n_vars);
  p.add_term(w, c);
  return p;
}

Scalar NCPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void NCPolynomial::check_word(const Word& w) const {
  for (auto l : w.letters)
    if (l == 0 || l > n_vars_)
      throw InvalidInput("variable x" + std::to_string(l) + " out of range 1.." +
                         std::to_string(n_vars_));
}

void NCPolynomial::check_vars(const NCPolynomial& o) const {
  if (o.n_vars_ != n_vars_)
    throw VariableMismatch("polynomials over " + std::to_string(n_vars_) + " and " +
                           std::to_string(o.n_vars_) + " variables");
}

void NCPolynomial::refresh_degree() {
  // Length-lex order puts the longest word last.
  degree_ = terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

void NCPolynomial::add_term(const Word& w, const Scalar& c) {
  check_word(w);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  refresh_degree();
}

NCPolynomial NCPolynomial::adjoint() const {
  NCPolynomial out(n_vars_);
  for (const auto& [w, c] : terms_) out.terms_.emplace(w.reversed(), c.conj());
  out.refresh_degree();
  return out;
}

NCPolynomial& NCPolynomial::operator+=(const NCPolynomial& o) {
  check_vars(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NCPolynomial& NCPolynomial::operator-=(const NCPolynomial& o) {
  check_vars(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NCPolynomial& NCPolynomial::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
  } else {
    for (auto& [w, v] : terms_) v *= c;
  }
  refresh_degree();
  return *this;
}

NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
  a.check_vars(b);
  NCPolynomial out(a.n_vars_);
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Scalar c = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(wa * wb, c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return kv.second.is_zero(); });
  out.refresh_degree();
  return out;
}

std::string NCPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    bool negative = c.is_real() && sgn(c.re()) < 0;
    Scalar magnitude = negative ? -c : c;
    std::string coeff;
    if (!magnitude.is_real()) {
      coeff = "(" + magnitude.to_string() + ")";
    } else if (!(magnitude == Scalar(1)) || w.empty()) {
      coeff = magnitude.to_string();
    }
    std::string body = coeff;
    if (!w.empty()) body += (coeff.empty() ? "" : "*") + w.to_string();

    if (out.empty()) {
      out = negative ? "-" + body : body;
    } else {
      out += negative ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

ConstantSplit split_constant(const NCPolynomial& p) {
  Scalar c = p.coefficient(Word{});
  NCPolynomial rest = p;
  rest.add_term(Word{}, -c);
  return {std::move(c), std::move(rest)};
}

namespace {

class Parser {
 public:
  // limit == 0: accept any index (used for inference).
  Parser(std::string_view text, std::size_t limit) : text_(text), limit_(limit) {}

  NCPolynomial parse() {
    NCPolynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return p;
  }

  std::size_t max_index() const noexcept { return max_index_; }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::size_t vars() const { return limit_ == 0 ? 1 : limit_; }

  // Inference mode builds everything over a placeholder variable set, so words
  // are only stored once the real variable count is known.
  NCPolynomial empty() const { return NCPolynomial(vars()); }

  NCPolynomial expr() {
    NCPolynomial acc = empty();
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    NCPolynomial t = term();
    acc = negate ? acc - t : acc + t;
    while (true) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      NCPolynomial next = term();
      acc = c == '-' ? acc - next : acc + next;
    }
    return acc;
  }

  NCPolynomial term() {
    NCPolynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  NCPolynomial factor() {
    NCPolynomial base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("exponent must be a nonnegative integer");
    mpz_class k = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') fail("decimal literals are not allowed; use a fraction such as 3/2");
    if (k > 64) fail("exponent too large");
    NCPolynomial out = NCPolynomial::constant(vars(), Scalar(1));
    for (unsigned long e = k.get_ui(); e > 0; --e) out = out * base;
    return out;
  }

  NCPolynomial atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NCPolynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (c == 'x') {
      const std::size_t start = pos_;
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected variable index after 'x'");
      mpz_class idx = digits();
      if (idx == 0 || (limit_ != 0 && idx > limit_)) {
        pos_ = start;
        fail("variable index " + idx.get_str() + " out of range 1.." +
             std::to_string(limit_ == 0 ? std::numeric_limits<std::uint32_t>::max() : limit_));
      }
      if (!idx.fits_uint_p()) fail("variable index too large");
      const auto letter = static_cast<std::uint32_t>(idx.get_ui());
      max_index_ = std::max<std::size_t>(max_index_, letter);
      check_juxtaposition();
      if (limit_ == 0) return NCPolynomial::constant(vars(), Scalar(1));
      return NCPolynomial::monomial(vars(), Word{letter});
    }
    if (c == 'i') {
      ++pos_;
      check_juxtaposition();
      return NCPolynomial::constant(vars(), Scalar::imaginary_unit());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = digits();
      if (pos_ < text_.size() && (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        fail("decimal literals are not allowed (exact arithmetic); use a fraction such as 3/2");
      mpq_class value(num);
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
          fail("expected integer denominator after '/'");
        mpz_class den = digits();
        if (pos_ < text_.size() && text_[pos_] == '.')
          fail("decimal literals are not allowed (exact arithmetic); use a fraction such as 3/2");
        if (den == 0) fail("zero denominator");
        value = mpq_class(num, den);
        value.canonicalize();
      }
      check_juxtaposition();
      return NCPolynomial::constant(vars(), Scalar(value));
    }
    if (c == '.') fail("decimal literals are not allowed (exact arithmetic); use a fraction such as 3/2");
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  mpz_class digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  // Implicit multiplication ("2x1", "x1x2", "3i") is rejected.
  void check_juxtaposition() {
    if (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '(')
        fail("implicit multiplication is not allowed; use '*'");
    }
  }

  std::string_view text_;
  std::size_t limit_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

}  // namespace

std::size_t max_variable_index(std::string_view text) {
  Parser parser(text, 0);
  parser.parse();
  return parser.max_index();
}

NCPolynomial parse_polynomial(std::string_view text, std::optional<std::size_t> n_vars) {
  std::size_t n = n_vars ? *n_vars : std::max<std::size_t>(1, max_variable_index(text));
  if (n == 0) throw InvalidInput("n_vars must be positive");
  return Parser(text, n).parse();
}

}  // namespace freemoments
