#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "pwell/core_model.hpp"

namespace pwell {

using Rational = boost::multiprecision::cpp_rational;

/// Forces with every particle in the lowest available levels.
struct ZeroTForces {
  Statistics stat;
  std::int64_t N = 0;
  Rational f_plus, f_minus, delta_f;
};

ZeroTForces zero_t_forces(Statistics stat, std::int64_t N);

/// Zero-temperature force of n particles in one half well (n may differ between sides).
Rational zero_t_side_force(Statistics stat, WellSide side, std::int64_t n);

double to_double(const Rational& r);

/// (3/4) N + 3 e^{-3/t} - 2 e^{-2/t}.
double boson_two_level_delta_f(std::int64_t N, double t);

/// -b e_1 + ln(1 + 1/N).
double boson_alpha_low_t(WellSide side, std::int64_t N, double b);

/// -(b/2)(e_N + e_{N+1}).
double fermion_two_level_alpha(WellSide side, std::int64_t N, double b);

enum class StepModel { two_level, semi_four_level };

/// Delta f(0) plus the Fermi-level corrections, a function of x = N / t only.
double fermion_step_delta_f(std::int64_t N, double t, StepModel model);

/// The correction fermion_step_delta_f - Delta f(0) as a function of u = t / N.
double fermion_step_correction(double t_over_N, StepModel model);

/// Second derivative of the correction with respect to u = t / N.
double fermion_step_curvature(double t_over_N, StepModel model);

/// Every sign change of the curvature on [lo, hi], refined.
std::vector<double> step_curvature_zeros(StepModel model, double lo, double hi);

/// First two curvature zeros on [0.05, 1].
std::pair<double, double> step_inflection_points(StepModel model = StepModel::semi_four_level);

}  // namespace pwell
