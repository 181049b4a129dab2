#pragma once

// Word-truncated symbolic expansion of rational series, used as the oracle for
// the linear-representation constructions. It never builds a matrix.

#include <cstddef>
#include <map>
#include <memory>
#include <string>

#include "freemoments/linrep.hpp"
#include "generators.hpp"

namespace freemoments::testing {

using WordSeries = std::map<Word, ZPolynomial>;

inline void accumulate(WordSeries& s, const Word& w, const ZPolynomial& c) {
  if (c.is_zero()) return;
  auto& slot = s[w];
  slot += c;
  if (slot.is_zero()) s.erase(w);
}

inline WordSeries expand_product(const WordSeries& a, const WordSeries& b, std::size_t max_len) {
  WordSeries out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b)
      if (wa.size() + wb.size() <= max_len) accumulate(out, wa * wb, ca * cb);
  return out;
}

inline WordSeries expand_combination(const ZPolynomial& r1, const WordSeries& a, const ZPolynomial& r2,
                                     const WordSeries& b) {
  WordSeries out;
  for (const auto& [w, c] : a) accumulate(out, w, r1 * c);
  for (const auto& [w, c] : b) accumulate(out, w, r2 * c);
  return out;
}

/// sum_{k=1}^{max_len} a^k; higher powers only contain longer words when a is constant-free.
inline WordSeries expand_star(const WordSeries& a, std::size_t max_len) {
  WordSeries out;
  WordSeries power = a;
  for (std::size_t k = 1; k <= max_len && !power.empty(); ++k) {
    for (const auto& [w, c] : power) accumulate(out, w, c);
    power = expand_product(power, a, max_len);
  }
  return out;
}

/// Random construction tree evaluated both as a representation and as a truncated series.
struct Construction {
  LinearRepresentation rep;
  WordSeries series;
  std::string description;
  // No transition enters the initial state: star is applicable.
  bool star_ok;
};

inline ZPolynomial random_zpoly(Rng& rng) {
  return ZPolynomial(std::vector<Scalar>{small_rational(rng, 2), small_rational(rng, 2)});
}

inline Construction random_construction(Rng& rng, std::size_t n_vars, std::size_t depth, std::size_t max_len) {
  const long kind = depth == 0 ? 0 : uniform_int(rng, 0, 3);
  if (kind == 0) {
    const auto var = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long>(n_vars)));
    ZPolynomial c = uniform_int(rng, 0, 1) == 0 ? ZPolynomial(Scalar(1)) : random_zpoly(rng);
    WordSeries s;
    accumulate(s, Word{static_cast<std::uint32_t>(var)}, c);
    return {rep_variable(var, n_vars, c), s, "(" + c.to_string() + ")x" + std::to_string(var), true};
  }
  if (kind == 1) {
    auto a = random_construction(rng, n_vars, depth - 1, max_len);
    auto b = random_construction(rng, n_vars, depth - 1, max_len);
    return {rep_product(a.rep, b.rep), expand_product(a.series, b.series, max_len),
            "(" + a.description + ")(" + b.description + ")", a.star_ok};
  }
  if (kind == 2) {
    auto a = random_construction(rng, n_vars, depth - 1, max_len);
    auto b = random_construction(rng, n_vars, depth - 1, max_len);
    ZPolynomial r1 = random_zpoly(rng);
    ZPolynomial r2 = random_zpoly(rng);
    return {rep_linear_combination(r1, a.rep, r2, b.rep), expand_combination(r1, a.series, r2, b.series),
            "[" + r1.to_string() + "]" + a.description + " + [" + r2.to_string() + "]" + b.description, true};
  }
  auto a = random_construction(rng, n_vars, depth - 1, max_len);
  if (!a.star_ok) return a;
  return {rep_star(a.rep), expand_star(a.series, max_len), "(" + a.description + ")*", false};
}

/// Every word of length <= max_len over n_vars letters (including the unit).
inline std::vector<Word> all_words(std::size_t n_vars, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (std::uint32_t l = 1; l <= n_vars; ++l) next.push_back(w * Word{l});
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace freemoments::testing
