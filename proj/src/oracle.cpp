#include "freemoments/oracle.hpp"

#include <algorithm>
#include <functional>

#include "freemoments/error.hpp"

namespace freemoments::oracle {

namespace {

// Pairs positions first..last-1 (half-open, even length) in every non-crossing way.
void enumerate_into(std::size_t first, std::size_t last, std::vector<std::pair<std::size_t, std::size_t>>& acc,
                    const std::function<void()>& emit) {
  if (first == last) {
    emit();
    return;
  }
  for (std::size_t partner = first + 1; partner < last; partner += 2) {
    acc.emplace_back(first, partner);
    enumerate_into(first + 1, partner, acc, [&] { enumerate_into(partner + 1, last, acc, emit); });
    acc.pop_back();
  }
}

// Letter-consistent non-crossing pairings of the word, interval DP over [l, r).
std::uint64_t count_consistent_pairings(const Word& word) {
  const std::size_t n = word.size();
  if (n % 2 != 0) return 0;
  // memo[l][r] for 0 <= l <= r <= n, r - l even.
  std::vector<std::uint64_t> memo((n + 1) * (n + 1), 0);
  auto at = [&](std::size_t l, std::size_t r) -> std::uint64_t& { return memo[l * (n + 1) + r]; };
  for (std::size_t l = 0; l <= n; ++l) at(l, l) = 1;
  for (std::size_t len = 2; len <= n; len += 2) {
    for (std::size_t l = 0; l + len <= n; ++l) {
      const std::size_t r = l + len;
      std::uint64_t total = 0;
      for (std::size_t j = l + 1; j < r; j += 2)
        if (word[j] == word[l]) total += at(l + 1, j) * at(j + 1, r);
      at(l, r) = total;
    }
  }
  return at(0, n);
}

Scalar from_u64(std::uint64_t v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
  return Scalar(mpq_class(z));
}

// Restricted-growth strings enumerate set partitions of {0..n-1}.
bool is_non_crossing(const std::vector<std::size_t>& block, std::size_t n_blocks) {
  const std::size_t n = block.size();
  std::vector<std::size_t> lo(n_blocks, n), hi(n_blocks, 0);
  for (std::size_t i = 0; i < n; ++i) {
    lo[block[i]] = std::min(lo[block[i]], i);
    hi[block[i]] = std::max(hi[block[i]], i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t next = i + 1;
    while (next < n && block[next] != block[i]) ++next;
    if (next == n) continue;
    for (std::size_t k = i + 1; k < next; ++k)
      if (lo[block[k]] < i || hi[block[k]] > next) return false;
  }
  return true;
}

}  // namespace

mpz_class catalan(std::size_t k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * k, k);
  c /= static_cast<unsigned long>(k + 1);
  return c;
}

std::vector<Pairing> enumerate_nc_pairings(std::size_t k) {
  if (k > kMaxPairingHalfSize)
    throw CapExceeded("pairing enumeration is capped at 2k <= " + std::to_string(2 * kMaxPairingHalfSize) +
                      " points (requested " + std::to_string(2 * k) + ")");
  std::vector<Pairing> out;
  std::vector<std::pair<std::size_t, std::size_t>> acc;
  enumerate_into(0, 2 * k, acc, [&] {
    Pairing p;
    for (auto [a, b] : acc) p.pairs.emplace_back(a + 1, b + 1);
    std::sort(p.pairs.begin(), p.pairs.end());
    out.push_back(std::move(p));
  });
  return out;
}

Scalar word_moment(const Word& word, std::size_t max_length) {
  if (word.size() > max_length)
    throw CapExceeded("word moment is capped at length " + std::to_string(max_length) + " (got " +
                      std::to_string(word.size()) + ")");
  return from_u64(count_consistent_pairings(word));
}

bool expansion_exceeds_cap(const NCPolynomial& p, std::size_t order, std::size_t expansion_cap) {
  mpz_class terms;
  mpz_ui_pow_ui(terms.get_mpz_t(), p.n_terms(), order);
  return terms > expansion_cap;
}

namespace {

void check_expansion(const NCPolynomial& p, std::size_t order, std::size_t expansion_cap) {
  if (expansion_exceeds_cap(p, order, expansion_cap))
    throw CapExceeded("expanding p^" + std::to_string(order) + " needs up to " + std::to_string(p.n_terms()) +
                      "^" + std::to_string(order) + " monomials, above the cap of " +
                      std::to_string(expansion_cap));
  // Interval DP counts fit in 64 bits up to length 64 (Catalan(32) < 2^64).
  if (p.degree() * order > 64) throw CapExceeded("expanded words would exceed 64 letters");
}

Scalar trace_of(const NCPolynomial& expanded) {
  Scalar total;
  for (const auto& [word, c] : expanded.terms()) {
    if (word.size() % 2 != 0) continue;
    const std::uint64_t count = count_consistent_pairings(word);
    if (count != 0) total += c * from_u64(count);
  }
  return total;
}

}  // namespace

Scalar brute_moment(const NCPolynomial& p, std::size_t order, std::size_t expansion_cap) {
  check_expansion(p, order, expansion_cap);
  NCPolynomial power = NCPolynomial::constant(p.n_vars(), Scalar(1));
  for (std::size_t k = 0; k < order; ++k) power = power * p;
  return trace_of(power);
}

std::vector<Scalar> brute_moments(const NCPolynomial& p, std::size_t max_order, std::size_t expansion_cap) {
  check_expansion(p, max_order, expansion_cap);
  std::vector<Scalar> out;
  NCPolynomial power = NCPolynomial::constant(p.n_vars(), Scalar(1));
  for (std::size_t m = 1; m <= max_order; ++m) {
    power = power * p;
    out.push_back(trace_of(power));
  }
  return out;
}

std::vector<Scalar> free_cumulants(const std::vector<Scalar>& moments) {
  const std::size_t k = moments.size();
  if (k > kMaxCumulantOrder)
    throw CapExceeded("free cumulants are capped at order " + std::to_string(kMaxCumulantOrder));
  // m_n = sum_{s=1}^{n} kappa_s [z^{n-s}] M(z)^s with M(z) = 1 + sum m_i z^i.
  std::vector<Scalar> series(k + 1);
  series[0] = Scalar(1);
  for (std::size_t i = 1; i <= k; ++i) series[i] = moments[i - 1];

  auto truncated_mul = [k](const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    std::vector<Scalar> out(k + 1);
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; i + j <= k; ++j) out[i + j] += a[i] * b[j];
    return out;
  };

  std::vector<std::vector<Scalar>> powers(k + 1);  // powers[s] = M^s
  powers[0].assign(k + 1, Scalar());
  powers[0][0] = Scalar(1);
  for (std::size_t s = 1; s <= k; ++s) powers[s] = truncated_mul(powers[s - 1], series);

  std::vector<Scalar> kappa(k);
  for (std::size_t n = 1; n <= k; ++n) {
    Scalar value = moments[n - 1];
    for (std::size_t s = 1; s < n; ++s) value -= kappa[s - 1] * powers[s][n - s];
    kappa[n - 1] = std::move(value);
  }
  return kappa;
}

std::vector<Scalar> moments_from_cumulants(const std::vector<Scalar>& cumulants) {
  const std::size_t k = cumulants.size();
  if (k > kMaxCumulantOrder)
    throw CapExceeded("moment expansion is capped at order " + std::to_string(kMaxCumulantOrder));
  std::vector<Scalar> out(k);
  for (std::size_t n = 1; n <= k; ++n) {
    Scalar total;
    std::vector<std::size_t> block(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);  // largest label among block[0..i]
    std::function<void(std::size_t)> walk = [&](std::size_t i) {
      if (i == n) {
        const std::size_t n_blocks = prefix_max[n - 1] + 1;
        if (!is_non_crossing(block, n_blocks)) return;
        std::vector<std::size_t> sizes(n_blocks, 0);
        for (auto b : block) ++sizes[b];
        Scalar term(1);
        for (auto s : sizes) term *= cumulants[s - 1];
        total += term;
        return;
      }
      const std::size_t limit = i == 0 ? 0 : prefix_max[i - 1] + 1;
      for (std::size_t b = 0; b <= limit; ++b) {
        block[i] = b;
        prefix_max[i] = i == 0 ? b : std::max(prefix_max[i - 1], b);
        walk(i + 1);
      }
    };
    walk(0);
    out[n - 1] = std::move(total);
  }
  return out;
}

std::map<Word, mpz_class> psemi_series(std::size_t n_vars, std::size_t degree_cap) {
  if (degree_cap > kMaxPsemiDegree)
    throw CapExceeded("P_semi expansion is capped at word length " + std::to_string(kMaxPsemiDegree));
  if (n_vars == 0) throw InvalidInput("P_semi needs at least one variable");
  using Series = std::map<Word, mpz_class>;

  auto product = [degree_cap](const Series& a, const Series& b) {
    Series out;
    for (const auto& [wa, ca] : a)
      for (const auto& [wb, cb] : b)
        if (wa.size() + wb.size() <= degree_cap) out[wa * wb] += ca * cb;
    return out;
  };

  Series y;
  for (std::size_t step = 0; step < degree_cap; ++step) {
    Series next;
    for (std::uint32_t i = 1; i <= n_vars; ++i) {
      // x_i (Y + 1)
      Series t;
      if (degree_cap >= 1) t[Word{i}] = 1;
      for (const auto& [w, c] : y)
        if (w.size() + 1 <= degree_cap) t[Word{i} * w] += c;
      for (auto& [w, c] : product(t, t)) next[w] += c;
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    y = std::move(next);
  }
  return y;
}

Scalar psemi_coefficient(const Word& word, std::size_t degree_cap) {
  if (word.size() > degree_cap)
    throw InvalidInput("word longer than the P_semi degree cap");
  if (degree_cap > kMaxPsemiDegree)
    throw CapExceeded("P_semi expansion is capped at word length " + std::to_string(kMaxPsemiDegree));
  if (word.empty()) return Scalar();
  std::uint32_t n_vars = 1;
  for (auto l : word.letters) n_vars = std::max(n_vars, l);
  const auto series = psemi_series(n_vars, degree_cap);
  auto it = series.find(word);
  return it == series.end() ? Scalar() : Scalar(mpq_class(it->second));
}

}  // namespace freemoments::oracle
