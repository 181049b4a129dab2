#pragma once

// Exponential-time ground truth for the engine. Nothing here touches the
// linear-representation machinery.

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "freemoments/ncpoly.hpp"
#include "freemoments/scalar.hpp"

namespace freemoments::oracle {

inline constexpr std::size_t kMaxPairingHalfSize = 8;
inline constexpr std::size_t kMaxWordMomentLength = 16;
inline constexpr std::size_t kDefaultExpansionCap = 1'000'000;
inline constexpr std::size_t kMaxCumulantOrder = 12;
inline constexpr std::size_t kMaxPsemiDegree = 12;

/// Perfect non-crossing matching of {1..2k}; each pair is (a, b) with a < b, sorted by a.
struct Pairing {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  friend bool operator==(const Pairing&, const Pairing&) = default;
};

/// All non-crossing pairings of {1..2k}, k <= 8. Element 1 is matched with an
/// element at odd distance; inside and outside are filled recursively.
std::vector<Pairing> enumerate_nc_pairings(std::size_t k);

/// tau(F(s_1..s_n)): number of non-crossing pairings whose pairs join equal letters.
Scalar word_moment(const Word& word, std::size_t max_length = kMaxWordMomentLength);

/// tau(p^m) by expanding p^m into words. Refuses when n_terms(p)^m exceeds the cap.
Scalar brute_moment(const NCPolynomial& p, std::size_t order,
                    std::size_t expansion_cap = kDefaultExpansionCap);

/// brute_moment for every order 1..max_order, sharing the expansion of p^m.
std::vector<Scalar> brute_moments(const NCPolynomial& p, std::size_t max_order,
                                  std::size_t expansion_cap = kDefaultExpansionCap);

/// True when brute_moment(p, order, cap) would be refused.
bool expansion_exceeds_cap(const NCPolynomial& p, std::size_t order, std::size_t expansion_cap);

/// Free cumulants kappa_1..kappa_k from moments m_1..m_k (k <= 12).
std::vector<Scalar> free_cumulants(const std::vector<Scalar>& moments);

/// Moments from free cumulants by summing prod kappa_{|V|} over every
/// non-crossing partition (k <= 12).
std::vector<Scalar> moments_from_cumulants(const std::vector<Scalar>& cumulants);

/// P_semi truncated to words of length <= degree_cap, computed by iterating
/// Y <- sum_i (x_i (Y + 1))^2 from Y = 0, degree_cap times.
std::map<Word, mpz_class> psemi_series(std::size_t n_vars, std::size_t degree_cap);

/// Coefficient of `word` in P_semi via psemi_series. The unit word is not a term.
Scalar psemi_coefficient(const Word& word, std::size_t degree_cap);

mpz_class catalan(std::size_t k);

}  // namespace freemoments::oracle
