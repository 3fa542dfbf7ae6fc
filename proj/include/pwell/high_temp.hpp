#pragma once

#include <cstdint>

#include "pwell/core_model.hpp"

namespace pwell {

/// sqrt(pi / (4 k b)) * sum_{|m| <= cutoff} (2 sigma - 1)^m exp(-pi^2 m^2 / (k b)) - sigma / 2,
/// which equals sum_{n >= 1} exp(-k b e_n) once the cutoff is large enough.
double theta_sum(int cutoff, int k, double b, int sigma);

struct FugacityExpansion {
  int order = 1;
  double q_value = 0;
  double b = 0;
  std::int64_t N = 0;
  int eta = 1;
  int sigma = 0;
  bool valid = true;  // false once 2 N sqrt(b / pi) exceeds 0.3
};

/// Small-q expansion of e^{-alpha}: order 1 keeps 2N sqrt(b/pi), order 2 adds
/// 2N (sigma - eta sqrt(2) N) b / pi.
FugacityExpansion fugacity_q(Statistics stat, WellSide side, std::int64_t N, double b, int order);

enum class AsymptoteOrder { leading, next };

/// Leading (N/2) sqrt(t/pi); next subtracts (N/pi) ((sqrt(2) - 1) eta N - 1/2).
double delta_f_asymptote(std::int64_t N, double t, AsymptoteOrder order,
                         Statistics stat = Statistics::boson());

/// Term (k, m) of the fugacity expansion of f:
/// eta^{-1} (eta q)^k sqrt(pi / (16 k^3 b^3)) (2 sigma - 1)^m (1 - 2 pi^2 m^2 / (k b)) exp(-pi^2 m^2 / (k b)).
double force_series_term(Statistics stat, WellSide side, double q, double b, int k, int m);

/// Sum of force_series_term over 1 <= k <= k_max and |m| <= m_cutoff.
double force_series(Statistics stat, WellSide side, double q, double b, int k_max, int m_cutoff = 5);

}  // namespace pwell
