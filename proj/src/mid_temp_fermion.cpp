#include "pwell/mid_temp_fermion.hpp"

#include <boost/math/differentiation/autodiff.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "pwell/errors.hpp"

namespace pwell {

using std::numbers::pi;

namespace {

void check_stoner_domain(double alpha) {
  if (alpha < kStonerLo || alpha > kStonerHi) {
    fail(ErrorKind::out_of_range, "stoner variant needs alpha in [" + std::to_string(kStonerLo) + ", " +
                                      std::to_string(kStonerHi) + "], got " + std::to_string(alpha));
  }
}

void check_tanh_domain(double alpha) {
  if (!(alpha < 0)) fail(ErrorKind::out_of_range, "tanh_surrogate variant needs alpha < 0");
}

// p^2 (-alpha + e^{2 alpha}) with p = (1 + e^{2 alpha}) / (1 + e^alpha)
template <class X>
X tanh_I2(const X& alpha) {
  using std::exp;
  const X e1 = exp(alpha), e2 = exp(2 * alpha);
  const X p = (1 + e2) / (1 + e1);
  return p * p * (-alpha + e2);
}

template <class X>
X tanh_J(const X& alpha) {
  using boost::math::differentiation::make_fvar;
  using std::exp;
  // dI^2/dalpha written out so the result stays differentiable
  const X e1 = exp(alpha), e2 = exp(2 * alpha);
  const X p = (1 + e2) / (1 + e1);
  const X dp = (2 * e2 * (1 + e1) - (1 + e2) * e1) / ((1 + e1) * (1 + e1));
  const X h = -alpha + e2;
  const X dh = -1 + 2 * e2;
  const X dI2 = 2 * p * dp * h + p * p * dh;
  return -2 / ((e1 + 1) * dI2);
}

double fermi_occ(double x) {
  if (x > 0) {
    const double e = std::exp(-x);
    return e / (1 + e);
  }
  return 1 / (std::exp(x) + 1);
}

double fermi_weight(double x) {  // e^x / (e^x + 1)^2, symmetric in x
  const double e = std::exp(-std::abs(x));
  return e / ((1 + e) * (1 + e));
}

double quad_I(double alpha, const PrecisionPolicy& policy, bool derivative) {
  SemiInfiniteIntegrand in;
  if (derivative) {
    in.f = [alpha](double y) { return fermi_weight(alpha + y * y); };
  } else {
    in.f = [alpha](double y) { return fermi_occ(alpha + y * y); };
  }
  in.envelope_amplitude = std::exp(-alpha);  // both integrands stay below e^{-alpha - y^2}
  in.envelope_power = 0;
  in.envelope_start = std::sqrt(std::max(0.0, -alpha));
  return quad_semi_infinite(in, policy).value;
}

}  // namespace

const char* to_string(FermiVariant variant) {
  switch (variant) {
    case FermiVariant::quadrature: return "quadrature";
    case FermiVariant::stoner: return "stoner";
    case FermiVariant::tanh_surrogate: return "tanh_surrogate";
  }
  return "?";
}

FermiIntegralValue fermi_integral(double alpha, FermiVariant variant, StonerPairing pairing,
                                  const PrecisionPolicy& policy) {
  require(std::isfinite(alpha), "fermi_integral: alpha must be finite");
  FermiIntegralValue v;
  v.alpha = alpha;
  v.variant = variant;
  switch (variant) {
    case FermiVariant::quadrature:
      v.I = quad_I(alpha, policy, false);
      v.I_prime = -quad_I(alpha, policy, true);
      break;
    case FermiVariant::stoner: {
      check_stoner_domain(alpha);
      const double s = std::sqrt(-alpha);
      v.I = s * (1 - (pi * pi / 24) / (alpha * alpha));
      v.I_prime = pairing == StonerPairing::mixed ? -1 / (2 * s) : -1 / (2 * s) - (pi * pi / 16) / std::pow(s, 5);
      break;
    }
    case FermiVariant::tanh_surrogate: {
      check_tanh_domain(alpha);
      using boost::math::differentiation::make_fvar;
      const auto a = make_fvar<double, 1>(alpha);
      const auto p = (1 + exp(2 * a)) / (1 + exp(a));
      const auto I = p / (2 * sqrt(-a)) * (-2 * a + exp(2 * a));
      v.I = I.derivative(0);
      v.I_prime = I.derivative(1);
      break;
    }
  }
  return v;
}

double alpha_from_ratio(double r, FermiVariant variant, const PrecisionPolicy& policy) {
  require(std::isfinite(r) && r > 0, "alpha_from_t: N / sqrt(t) must be positive");
  std::function<double(double)> g;
  double lo = 0, hi = 0;
  switch (variant) {
    case FermiVariant::quadrature:
      g = [&](double a) { return quad_I(a, policy, false) - r; };
      lo = -1;
      hi = 1;
      while (g(lo) < 0) lo *= 2;
      while (g(hi) > 0) {
        hi *= 2;
        if (hi > 700) fail(ErrorKind::out_of_range, "N / sqrt(t) too small for the quadrature variant");
      }
      break;
    case FermiVariant::stoner: {
      g = [&](double a) { return fermi_integral(a, variant).I - r; };
      lo = kStonerLo;
      hi = kStonerHi;
      if (g(lo) < 0 || g(hi) > 0)
        fail(ErrorKind::out_of_range, "N / sqrt(t) outside the reach of the stoner variant on its interval");
      break;
    }
    case FermiVariant::tanh_surrogate: {
      g = [&](double a) { return std::sqrt(tanh_I2(a)) - r; };
      lo = -1e6;
      hi = -0.5 * std::log(2.0);  // I^2 is decreasing below this point
      if (g(lo) < 0 || g(hi) > 0)
        fail(ErrorKind::out_of_range, "N / sqrt(t) outside the monotone range of the surrogate");
      break;
    }
  }
  RootOptions opt;
  opt.abs_x_tol = 1e-13;
  return find_root<double>(g, lo, hi, opt).root;
}

double alpha_from_t(std::int64_t N, double t, FermiVariant variant, const PrecisionPolicy& policy) {
  require(N >= 1, "alpha_from_t: N must be at least 1");
  require(std::isfinite(t) && t > 0, "alpha_from_t: t must be positive");
  return alpha_from_ratio(double(N) / std::sqrt(t), variant, policy);
}

double J_function(double alpha, FermiVariant variant, StonerPairing pairing, const PrecisionPolicy& policy) {
  if (variant == FermiVariant::tanh_surrogate) {
    check_tanh_domain(alpha);
    return tanh_J(alpha);
  }
  const auto v = fermi_integral(alpha, variant, pairing, policy);
  return -1 / ((std::exp(alpha) + 1) * v.I * v.I_prime);
}

double delta_f_medium_fermion(std::int64_t N, double t, FermiVariant variant, const PrecisionPolicy& policy) {
  const double a = alpha_from_t(N, t, variant, policy);
  const double n = double(N);
  return 0.25 * n * n * J_function(a, variant, StonerPairing::mixed, policy);
}

double delta_alpha_subleading(std::int64_t N, double alpha, FermiVariant variant, StonerPairing pairing,
                              const PrecisionPolicy& policy) {
  require(N >= 1, "delta_alpha_subleading: N must be at least 1");
  const auto v = fermi_integral(alpha, variant, pairing, policy);
  return v.I / ((std::exp(alpha) + 1) * v.I_prime) / (2 * double(N));
}

JMinimum minimize_J(FermiVariant variant, StonerPairing pairing, const PrecisionPolicy& policy) {
  double a = -5, c = -1;
  if (variant == FermiVariant::stoner) {
    a = kStonerLo;
    c = kStonerHi;
  }
  auto J = [&](double x) { return J_function(x, variant, pairing, policy); };
  const double g = (std::sqrt(5.0) - 1) / 2;
  const double a0 = a, c0 = c;
  double x1 = c - g * (c - a), x2 = a + g * (c - a);
  double j1 = J(x1), j2 = J(x2);
  while (c - a > 1e-9) {
    if (j1 < j2) {
      c = x2;
      x2 = x1;
      j2 = j1;
      x1 = c - g * (c - a);
      j1 = J(x1);
    } else {
      a = x1;
      x1 = x2;
      j1 = j2;
      x2 = a + g * (c - a);
      j2 = J(x2);
    }
  }
  JMinimum m;
  m.alpha_min = 0.5 * (a + c);
  if (m.alpha_min - a0 < 1e-6 || c0 - m.alpha_min < 1e-6) {
    fail(ErrorKind::not_unimodal, "J has no interior minimum on [" + std::to_string(a0) + ", " +
                                      std::to_string(c0) + "]");
  }
  m.J_min = J(m.alpha_min);
  const double I2 = variant == FermiVariant::tanh_surrogate
                        ? tanh_I2(m.alpha_min)
                        : std::pow(fermi_integral(m.alpha_min, variant, pairing, policy).I, 2);
  m.t_over_N2 = 1 / I2;
  m.df_over_N2 = m.J_min / 4;
  return m;
}

JQuadraticFit tanh_J_quadratic_fit(double alpha_star) {
  check_tanh_domain(alpha_star);
  using boost::math::differentiation::make_fvar;
  const auto J = tanh_J(make_fvar<double, 2>(alpha_star));
  const double j0 = J.derivative(0), j1 = J.derivative(1), j2 = J.derivative(2);
  JQuadraticFit f;
  f.a = j2 / 2;
  f.center = alpha_star - j1 / j2;
  f.J_min = j0 - j1 * j1 / (2 * j2);
  return f;
}

}  // namespace pwell
