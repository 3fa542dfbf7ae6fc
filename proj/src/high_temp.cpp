#include "pwell/high_temp.hpp"

#include <cmath>
#include <numbers>

#include "pwell/errors.hpp"

namespace pwell {

using std::numbers::pi;

double theta_sum(int cutoff, int k, double b, int sigma) {
  require(cutoff >= 0, "theta_sum: cutoff must be non-negative");
  require(k >= 1, "theta_sum: k must be at least 1");
  require(b > 0 && std::isfinite(b), "theta_sum: b must be positive");
  require(sigma == 0 || sigma == 1, "theta_sum: sigma must be 0 or 1");
  const double kb = k * b;
  const double sign = 2 * sigma - 1;
  double s = 1;
  for (int m = 1; m <= cutoff; ++m) s += 2 * std::pow(sign, m) * std::exp(-pi * pi * m * m / kb);
  return std::sqrt(pi / (4 * kb)) * s - sigma / 2.0;
}

FugacityExpansion fugacity_q(Statistics stat, WellSide side, std::int64_t N, double b, int order) {
  require(N >= 1, "fugacity_q: N must be at least 1");
  require(b > 0 && std::isfinite(b), "fugacity_q: b must be positive");
  require(order == 1 || order == 2, "fugacity_q: order must be 1 or 2");
  FugacityExpansion e;
  e.order = order;
  e.b = b;
  e.N = N;
  e.eta = stat.eta();
  e.sigma = side.sigma();
  const double n = double(N);
  const double lead = 2 * n * std::sqrt(b / pi);
  e.q_value = lead;
  if (order == 2) e.q_value += 2 * n * (e.sigma - e.eta * std::sqrt(2.0) * n) * (b / pi);
  e.valid = lead <= 0.3;
  return e;
}

double delta_f_asymptote(std::int64_t N, double t, AsymptoteOrder order, Statistics stat) {
  require(N >= 1, "delta_f_asymptote: N must be at least 1");
  require(t > 0 && std::isfinite(t), "delta_f_asymptote: t must be positive");
  const double n = double(N);
  double v = 0.5 * n * std::sqrt(t / pi);
  if (order == AsymptoteOrder::next) v -= (n / pi) * ((std::sqrt(2.0) - 1) * stat.eta() * n - 0.5);
  return v;
}

double force_series_term(Statistics stat, WellSide side, double q, double b, int k, int m) {
  require(k >= 1, "force_series_term: k must be at least 1");
  require(b > 0 && std::isfinite(b), "force_series_term: b must be positive");
  const double eta = stat.eta();
  const double kb = k * b;
  const double gauss = std::exp(-pi * pi * m * m / kb);
  const double sign = std::pow(2.0 * side.sigma() - 1, m);
  return std::pow(eta * q, k) / eta * std::sqrt(pi / (16 * kb * kb * kb)) * sign *
         (1 - 2 * pi * pi * m * m / kb) * gauss;
}

double force_series(Statistics stat, WellSide side, double q, double b, int k_max, int m_cutoff) {
  require(k_max >= 1 && m_cutoff >= 0, "force_series: need k_max >= 1 and m_cutoff >= 0");
  double s = 0;
  for (int k = 1; k <= k_max; ++k)
    for (int m = -m_cutoff; m <= m_cutoff; ++m) s += force_series_term(stat, side, q, b, k, m);
  return s;
}

}  // namespace pwell
