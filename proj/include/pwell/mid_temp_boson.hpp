#pragma once

#include <cstdint>
#include <utility>

#include "pwell/core_model.hpp"
#include "pwell/numerics.hpp"

namespace pwell {

/// S(z) = sum_{n >= 1} 1 / (z + (n - tau)^2) in closed form:
///   W+: pi tanh(pi sqrt z) / (2 sqrt z)
///   W-: (pi sqrt z coth(pi sqrt z) - 1) / (2 z)
/// continued to -e_1 < z < 0 through tan and cot, with series near z = 0.
double S_function(WellSide side, double z);

enum class TAlphaMethod { exact_S_solve, series_inversion, tanh_saturation, tanh_pade };

const char* to_string(TAlphaMethod method);

struct TAlphaSolution {
  WellSide side;
  double t_alpha = 0;
  double t_over_N = 0;
  TAlphaMethod method = TAlphaMethod::exact_S_solve;
};

/// t alpha on one side from S(t alpha) = N / t or one of its approximations.
/// series_inversion applies to W- only; tanh_saturation and tanh_pade to W+ only.
TAlphaSolution solve_t_alpha(WellSide side, std::int64_t N, double t, TAlphaMethod method);

/// Same solve expressed only through u = t / N.
TAlphaSolution solve_t_alpha_reduced(WellSide side, double t_over_N, TAlphaMethod method);

/// N (-(t/N)/2 - (t alpha^- - t alpha^+)).
double delta_f_medium_boson(std::int64_t N, double t, const TAlphaSolution& plus, const TAlphaSolution& minus);

enum class ApproximantVariant { naive, improved };

/// Delta f / N ~ a (t/N - c)^2 + m. The improved variant also reports the
/// expansion data of the W+ solve about x* = 3.
struct QuadraticApproximant {
  double a = 0;
  double t_center_over_N = 0;
  double f_min_over_N = 0;
  double x_star = 0;
  double z_star = 0;  // (t alpha^+)* = (x* / pi)^2
  double u_star = 0;  // t* / N = 1 / S+(z*)
  double c1 = 0, c2 = 0;
};

QuadraticApproximant quadratic_approximant(ApproximantVariant variant);

/// Delta f from a quadratic approximant at (N, t).
double delta_f_quadratic(ApproximantVariant variant, std::int64_t N, double t);

/// (tanh x* + (x - x*)) / (1 + tanh x* (x - x*)).
double tanh_pade(double x, double x_star);

/// (2N / pi^2, 6N / pi^2): temperatures where alpha^+ resp. alpha^- vanish.
std::pair<double, double> alpha_zero_crossing_temps(std::int64_t N);

/// The two integrals that measure the error of the sum-to-integral step:
/// int_0^inf [1/(e^{y^2} - 1) - 1/y^2] dy and int_0^inf [1/y^4 - e^{y^2}/(e^{y^2} - 1)^2] dy.
struct SumToIntegralConstants {
  QuadResult first;
  QuadResult second;
};

SumToIntegralConstants sum_to_integral_constants(const PrecisionPolicy& policy = {});

}  // namespace pwell
