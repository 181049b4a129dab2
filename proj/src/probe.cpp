#include <chrono>
#include <cmath>

#include "freemoments/engine.hpp"
#include "freemoments/oracle.hpp"

namespace freemoments {

namespace {

template <class F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

double loglog_slope(const std::vector<ProbeRow>& rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.order == 0 || r.engine_seconds <= 0) continue;
    const double x = std::log(static_cast<double>(r.order));
    const double y = std::log(r.engine_seconds);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  const double denom = static_cast<double>(n) * sxx - sx * sx;
  if (n < 2 || denom == 0) return 0;
  return (static_cast<double>(n) * sxy - sx * sy) / denom;
}

}  // namespace

ProbeReport complexity_probe(const NCPolynomial& p, const std::vector<std::size_t>& sweep,
                             std::size_t expansion_cap) {
  ProbeReport report;
  for (std::size_t order : sweep) {
    ProbeRow row;
    row.order = order;
    MomentVector mv;
    row.engine_seconds = seconds([&] { mv = moments(p, order); });
    if (!oracle::expansion_exceeds_cap(p, order, expansion_cap) && p.degree() * order <= 64) {
      Scalar naive;
      row.naive_seconds = seconds([&] { naive = oracle::brute_moment(p, order, expansion_cap); });
      row.naive_matches = naive == mv.at(order);
    }
    report.rows.push_back(row);
  }
  report.engine_slope = loglog_slope(report.rows);
  return report;
}

}  // namespace freemoments
