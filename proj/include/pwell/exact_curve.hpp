#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pwell/core_model.hpp"
#include "pwell/numerics.hpp"
#include "pwell/precision.hpp"

namespace pwell {

/// Solved number constraint for one half well, together with the force sum
/// evaluated at the same alpha. Text fields keep the working-precision digits.
struct OccupancySolution {
  Statistics stat;
  WellSide side;
  std::int64_t N = 0;
  double t = 0, b = 0;
  double alpha = 0;
  double gap = 0;  // alpha + b e_1, positive for bosons
  double q_fugacity = 0;
  double alpha_error = 0;
  std::int64_t n_trunc = 0;
  int digits_used = 0;
  double count_residual = 0;  // sum occ_n - N at the returned alpha
  double count_error = 0;     // certified bound on |sum occ_n - N|
  double f = 0, f_error = 0;   // f_error includes rounding f to double
  double f_error_extended = 0; // bound on the extended-precision force held in f_text
  TailKind tail_kind = TailKind::gaussian_integral;
  std::string alpha_text, gap_text, f_text;
};

OccupancySolution solve_alpha(Statistics stat, WellSide side, std::int64_t N, double t,
                              const PrecisionPolicy& policy = {});

/// occ_n at the solved alpha, evaluated from the stored gap.
double occupancy(const OccupancySolution& sol, double b, std::int64_t n);

struct SideForce {
  double f = 0;
  double err = 0;
  OccupancySolution solution;
};

SideForce force_side(Statistics stat, WellSide side, std::int64_t N, double t, const PrecisionPolicy& policy = {});

struct CurvePoint {
  double t = 0;
  double alpha_plus = 0, alpha_minus = 0;
  double f_plus = 0, f_minus = 0;
  double delta_f = 0;
  double delta_f_error = 0;
};

CurvePoint net_force(Statistics stat, std::int64_t N, double t, const PrecisionPolicy& policy = {});

struct MinimumResult {
  double t_min = 0;
  double delta_f_min = 0;
  double delta_f_error = 0;
  std::vector<std::pair<double, double>> probes;  // (t, delta_f) used for the unimodality check
};

/// Default windows: boson [0.1 N, 2 N], fermion [0.05 N^2, 2 N^2].
std::pair<double, double> default_minimum_window(Statistics stat, std::int64_t N);

MinimumResult locate_minimum(Statistics stat, std::int64_t N, const PrecisionPolicy& policy = {},
                             std::optional<std::pair<double, double>> window = std::nullopt);

struct InflectionResult {
  double t_begin = 0;
  double t_end = 0;
  std::vector<double> sign_changes;  // refined locations of every detected sign change
};

InflectionResult locate_inflections(Statistics stat, std::int64_t N, const PrecisionPolicy& policy = {},
                                    std::optional<std::pair<double, double>> window = std::nullopt);

}  // namespace pwell
