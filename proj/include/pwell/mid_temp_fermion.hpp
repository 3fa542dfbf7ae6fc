#pragma once

#include <cstdint>

#include "pwell/numerics.hpp"

namespace pwell {

enum class FermiVariant { quadrature, stoner, tanh_surrogate };

const char* to_string(FermiVariant variant);

/// How the truncated asymptotic series is paired for I and I'.
/// mixed: I' = -1/(2 sqrt(-alpha)); pure: I' is the derivative of the truncated I.
enum class StonerPairing { mixed, pure };

struct FermiIntegralValue {
  double alpha = 0;
  double I = 0;
  double I_prime = 0;
  FermiVariant variant = FermiVariant::quadrature;
};

/// Interval on which the two-term asymptotic series is used.
inline constexpr double kStonerLo = -3.696;
inline constexpr double kStonerHi = -1.314;

/// I(alpha) = int_0^inf dy / (e^{alpha + y^2} + 1) and its alpha-derivative.
FermiIntegralValue fermi_integral(double alpha, FermiVariant variant, StonerPairing pairing = StonerPairing::mixed,
                                  const PrecisionPolicy& policy = {});

/// Solves I(alpha) = N / sqrt(t). The surrogate uses its squared form
/// I^2 = p^2 (-alpha + e^{2 alpha}), which is what enters t = N^2 / I^2.
double alpha_from_t(std::int64_t N, double t, FermiVariant variant, const PrecisionPolicy& policy = {});

/// Same solve from the combination N / sqrt(t) alone.
double alpha_from_ratio(double n_over_sqrt_t, FermiVariant variant, const PrecisionPolicy& policy = {});

/// J = -1 / ((e^alpha + 1) I I') = -2 / ((e^alpha + 1) dI^2/dalpha).
double J_function(double alpha, FermiVariant variant, StonerPairing pairing = StonerPairing::mixed,
                  const PrecisionPolicy& policy = {});

/// (N^2 / 4) J(alpha_from_t(N, t)).
double delta_f_medium_fermion(std::int64_t N, double t, FermiVariant variant, const PrecisionPolicy& policy = {});

/// (1 / 2N) I / ((e^alpha + 1) I').
double delta_alpha_subleading(std::int64_t N, double alpha, FermiVariant variant,
                              StonerPairing pairing = StonerPairing::mixed, const PrecisionPolicy& policy = {});

struct JMinimum {
  double alpha_min = 0;
  double J_min = 0;
  double t_over_N2 = 0;   // 1 / I(alpha_min)^2
  double df_over_N2 = 0;  // J_min / 4
};

/// Golden-section minimum of J: [-5, -1] for quadrature and the surrogate,
/// the series interval for stoner. Throws not_unimodal if the minimum sits on an end.
JMinimum minimize_J(FermiVariant variant, StonerPairing pairing = StonerPairing::mixed,
                    const PrecisionPolicy& policy = {});

/// J ~ a (alpha - center)^2 + J_min from the second-order Taylor polynomial
/// of the surrogate J about alpha_star.
struct JQuadraticFit {
  double a = 0;
  double center = 0;
  double J_min = 0;
};

JQuadraticFit tanh_J_quadratic_fit(double alpha_star = -2.5);

}  // namespace pwell
