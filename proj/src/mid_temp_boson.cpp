#include "pwell/mid_temp_boson.hpp"

#include <boost/math/differentiation/autodiff.hpp>
#include <cmath>
#include <numbers>

#include "pwell/errors.hpp"

namespace pwell {

using std::numbers::pi;

namespace {

constexpr double kSeriesRadius = 1e-3;
constexpr double kXStar = 3.0;

double S_plus(double z) {
  if (std::abs(z) < kSeriesRadius) {
    const double w = pi * pi * z;  // tanh(s)/s in powers of s^2 = pi^2 z
    return (pi * pi / 2) *
           (1 - w / 3 + 2 * w * w / 15 - 17 * w * w * w / 315 + 62 * w * w * w * w / 2835);
  }
  if (z > 0) {
    const double s = std::sqrt(z);
    return pi * std::tanh(pi * s) / (2 * s);
  }
  const double s = std::sqrt(-z);
  return pi * std::tan(pi * s) / (2 * s);
}

double S_minus(double z) {
  if (std::abs(z) < kSeriesRadius) {
    const double p2 = pi * pi;
    return p2 / 6 - p2 * p2 * z / 90 + p2 * p2 * p2 * z * z / 945 - p2 * p2 * p2 * p2 * z * z * z / 9450 +
           p2 * p2 * p2 * p2 * p2 * z * z * z * z / 93555;
  }
  if (z > 0) {
    const double s = std::sqrt(z);
    return (pi * s / std::tanh(pi * s) - 1) / (2 * z);
  }
  const double s = std::sqrt(-z);
  return (pi * s / std::tan(pi * s) - 1) / (2 * z);
}

// S+ with tanh replaced by its Pade form about x*, written for autodiff.
template <class X>
X S_plus_pade(const X& z) {
  using std::sqrt;
  const double th = std::tanh(kXStar);
  const X s = sqrt(z);
  const X d = pi * s - kXStar;
  return pi * ((th + d) / (1 + th * d)) / (2 * s);
}

double t_alpha_minus_series(double u) {
  const double v = u - 6 / (pi * pi);
  return 2.5 * v + (5 * pi * pi / 28) * v * v;
}

double t_alpha_plus_saturated(double u) { return (pi * pi / 4) * u * u; }

}  // namespace

const char* to_string(TAlphaMethod method) {
  switch (method) {
    case TAlphaMethod::exact_S_solve: return "exact_S_solve";
    case TAlphaMethod::series_inversion: return "series_inversion";
    case TAlphaMethod::tanh_saturation: return "tanh_saturation";
    case TAlphaMethod::tanh_pade: return "tanh_pade";
  }
  return "?";
}

double S_function(WellSide side, double z) {
  const double e1 = energy_level(side, 1);
  require(std::isfinite(z), "S_function: z must be finite");
  if (!(z > -e1)) fail(ErrorKind::out_of_range, "S_function: z must exceed -e_1 = " + std::to_string(-e1));
  return side == WellSide::plus() ? S_plus(z) : S_minus(z);
}

QuadraticApproximant quadratic_approximant(ApproximantVariant variant) {
  QuadraticApproximant q;
  if (variant == ApproximantVariant::naive) {
    q.a = pi * pi / 14;
    q.t_center_over_N = 6 / (pi * pi);
    q.f_min_over_N = 6 / (pi * pi);
    return q;
  }
  using boost::math::differentiation::make_fvar;
  q.x_star = kXStar;
  q.z_star = (kXStar / pi) * (kXStar / pi);
  // u(z) = 1 / S+(z); invert its second-order Taylor expansion about z*
  const auto z = make_fvar<double, 2>(q.z_star);
  const auto u = 1 / S_plus_pade(z);
  const double u0 = u.derivative(0), u1 = u.derivative(1), u2 = u.derivative(2);
  q.u_star = u0;
  q.c1 = 1 / u1;
  q.c2 = -u2 / (2 * u1 * u1 * u1);

  // Delta f / N = -u/2 - t alpha^-(u) + t alpha^+(u), collected as A u^2 + B u + C
  const double k = 6 / (pi * pi);
  const double m1 = 2.5, m2 = 5 * pi * pi / 28;  // t alpha^- = m1 v + m2 v^2, v = u - k
  const double A = -m2 + q.c2;
  const double B = -0.5 - (m1 - 2 * m2 * k) + (q.c1 - 2 * q.c2 * q.u_star);
  const double C = -(-m1 * k + m2 * k * k) + (q.z_star - q.c1 * q.u_star + q.c2 * q.u_star * q.u_star);
  q.a = A;
  q.t_center_over_N = -B / (2 * A);
  q.f_min_over_N = C - B * B / (4 * A);
  return q;
}

TAlphaSolution solve_t_alpha_reduced(WellSide side, double u, TAlphaMethod method) {
  require(std::isfinite(u) && u > 0, "solve_t_alpha: t / N must be positive");
  TAlphaSolution s;
  s.side = side;
  s.t_over_N = u;
  s.method = method;
  const bool plus = side == WellSide::plus();
  switch (method) {
    case TAlphaMethod::exact_S_solve: {
      const double target = 1 / u;
      const double e1 = energy_level(side, 1);
      auto g = [&](double z) { return S_function(side, z) - target; };
      double lo = -e1 * (1 - 1e-12);
      if (!(g(lo) > 0)) fail(ErrorKind::out_of_range, "N / t above the reachable range of S");
      double hi = 1;
      while (g(hi) > 0) {
        hi *= 2;
        if (hi > 1e300) fail(ErrorKind::out_of_range, "N / t below the reachable range of S");
      }
      RootOptions opt;
      opt.abs_x_tol = 1e-15;
      s.t_alpha = find_root<double>(g, lo, hi, opt).root;
      break;
    }
    case TAlphaMethod::series_inversion:
      require(!plus, "series_inversion applies to W- only");
      s.t_alpha = t_alpha_minus_series(u);
      break;
    case TAlphaMethod::tanh_saturation:
      require(plus, "tanh_saturation applies to W+ only");
      s.t_alpha = t_alpha_plus_saturated(u);
      break;
    case TAlphaMethod::tanh_pade: {
      require(plus, "tanh_pade applies to W+ only");
      const auto q = quadratic_approximant(ApproximantVariant::improved);
      const double d = u - q.u_star;
      s.t_alpha = q.z_star + q.c1 * d + q.c2 * d * d;
      break;
    }
  }
  return s;
}

TAlphaSolution solve_t_alpha(WellSide side, std::int64_t N, double t, TAlphaMethod method) {
  require(N >= 1, "solve_t_alpha: N must be at least 1");
  require(std::isfinite(t) && t > 0, "solve_t_alpha: t must be positive");
  return solve_t_alpha_reduced(side, t / double(N), method);
}

double delta_f_medium_boson(std::int64_t N, double t, const TAlphaSolution& plus, const TAlphaSolution& minus) {
  require(N >= 1 && t > 0, "delta_f_medium_boson: need N >= 1 and t > 0");
  require(plus.side == WellSide::plus() && minus.side == WellSide::minus(),
          "delta_f_medium_boson: solutions must be for W+ and W- respectively");
  const double u = t / double(N);
  const double tol = 1e-12 * u;
  require(std::abs(plus.t_over_N - u) <= tol && std::abs(minus.t_over_N - u) <= tol,
          "delta_f_medium_boson: solutions were computed at a different t / N");
  return double(N) * (-0.5 * u - (minus.t_alpha - plus.t_alpha));
}

double delta_f_quadratic(ApproximantVariant variant, std::int64_t N, double t) {
  require(N >= 1 && t > 0, "delta_f_quadratic: need N >= 1 and t > 0");
  const auto q = quadratic_approximant(variant);
  const double d = t / double(N) - q.t_center_over_N;
  return double(N) * (q.a * d * d + q.f_min_over_N);
}

double tanh_pade(double x, double x_star) {
  const double th = std::tanh(x_star);
  const double d = x - x_star;
  const double den = 1 + th * d;
  if (std::abs(den) < 1e-300) fail(ErrorKind::pole, "tanh_pade: denominator vanishes");
  return (th + d) / den;
}

std::pair<double, double> alpha_zero_crossing_temps(std::int64_t N) {
  require(N >= 1, "alpha_zero_crossing_temps: N must be at least 1");
  return {2 * double(N) / (pi * pi), 6 * double(N) / (pi * pi)};
}

SumToIntegralConstants sum_to_integral_constants(const PrecisionPolicy& policy) {
  SemiInfiniteIntegrand first;
  first.f = [](double y) {
    const double u = y * y;
    if (u < 0.1) {
      const double u2 = u * u;
      return -0.5 + u * (1.0 / 12 + u2 * (-1.0 / 720 + u2 * (1.0 / 30240 + u2 * (-1.0 / 1209600 + u2 / 47900160))));
    }
    return 1 / std::expm1(u) - 1 / u;
  };
  first.envelope_amplitude = 1 / -std::expm1(-9.0);  // 1/(e^u - 1) <= C e^{-u} for y >= 3
  first.envelope_power = 0;
  first.envelope_start = 3;
  first.algebraic_tail = [](double Y) { return -1 / Y; };

  SemiInfiniteIntegrand second;
  second.f = [](double y) {
    const double u = y * y;
    if (u < 0.1) {
      const double u2 = u * u;
      return 1.0 / 12 + u2 * (-1.0 / 240 + u2 * (1.0 / 6048 + u2 * (-1.0 / 172800 + u2 * 9.0 / 47900160)));
    }
    const double em = -std::expm1(-u);
    return 1 / (u * u) - std::exp(-u) / (em * em);
  };
  const double c = 1 / -std::expm1(-9.0);
  second.envelope_amplitude = c * c;
  second.envelope_power = 0;
  second.envelope_start = 3;
  second.algebraic_tail = [](double Y) { return 1 / (3 * Y * Y * Y); };

  return {quad_semi_infinite(first, policy), quad_semi_infinite(second, policy)};
}

}  // namespace pwell
