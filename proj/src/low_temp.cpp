#include "pwell/low_temp.hpp"

#include <boost/math/differentiation/autodiff.hpp>
#include <cmath>

#include "pwell/errors.hpp"
#include "pwell/numerics.hpp"

namespace pwell {

namespace {

// Sum of (n - 1/2)^2 and n^2 over the lowest n levels, exact.
Rational sum_plus(std::int64_t n) {
  const Rational N(n);
  return N * (4 * N * N - 1) / 12;
}

Rational sum_minus(std::int64_t n) {
  const Rational N(n);
  return N * (N + 1) * (2 * N + 1) / 6;
}

template <class X>
X correction(const X& u, StepModel model) {
  using std::exp;
  const X x = 1 / u;
  const X e1 = exp(-x);  // forms in e^{-x} stay finite as x grows
  X c = e1 / (1 + e1) - x * e1 / ((1 + e1) * (1 + e1));
  if (model == StepModel::semi_four_level) {
    const X e3 = exp(-3 * x);
    c += 3 * e3 / (1 + e3) - 13 * x * e3 / ((1 + e3) * (1 + e3));
  }
  return c;
}

}  // namespace

Rational zero_t_side_force(Statistics stat, WellSide side, std::int64_t n) {
  require(n >= 0, "zero_t_side_force: particle number must be non-negative");
  const bool plus = side == WellSide::plus();
  if (stat.is_boson()) return plus ? Rational(n) / 4 : Rational(n);
  return plus ? sum_plus(n) : sum_minus(n);
}

ZeroTForces zero_t_forces(Statistics stat, std::int64_t N) {
  require(N >= 1, "zero_t_forces: N must be at least 1");
  ZeroTForces z;
  z.stat = stat;
  z.N = N;
  z.f_plus = zero_t_side_force(stat, WellSide::plus(), N);
  z.f_minus = zero_t_side_force(stat, WellSide::minus(), N);
  z.delta_f = z.f_minus - z.f_plus;
  return z;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

double boson_two_level_delta_f(std::int64_t N, double t) {
  require(N >= 1 && t > 0, "boson_two_level_delta_f: need N >= 1 and t > 0");
  return 0.75 * double(N) + 3 * std::exp(-3 / t) - 2 * std::exp(-2 / t);
}

double boson_alpha_low_t(WellSide side, std::int64_t N, double b) {
  require(N >= 1 && b > 0, "boson_alpha_low_t: need N >= 1 and b > 0");
  return -b * energy_level(side, 1) + std::log1p(1.0 / double(N));
}

double fermion_two_level_alpha(WellSide side, std::int64_t N, double b) {
  require(N >= 1 && b > 0, "fermion_two_level_alpha: need N >= 1 and b > 0");
  return -0.5 * b * (energy_level(side, N) + energy_level(side, N + 1));
}

double fermion_step_correction(double u, StepModel model) {
  require(u > 0 && std::isfinite(u), "fermion_step_correction: t / N must be positive");
  return correction(u, model);
}

double fermion_step_delta_f(std::int64_t N, double t, StepModel model) {
  require(N >= 1 && t > 0, "fermion_step_delta_f: need N >= 1 and t > 0");
  return to_double(zero_t_forces(Statistics::fermion(), N).delta_f) + fermion_step_correction(t / double(N), model);
}

double fermion_step_curvature(double u, StepModel model) {
  require(u > 0 && std::isfinite(u), "fermion_step_curvature: t / N must be positive");
  using boost::math::differentiation::make_fvar;
  return correction(make_fvar<double, 2>(u), model).derivative(2);
}

std::vector<double> step_curvature_zeros(StepModel model, double lo, double hi) {
  require(lo > 0 && lo < hi, "step_curvature_zeros: need 0 < lo < hi");
  constexpr int kScan = 4000;
  auto g = [&](double u) { return fermion_step_curvature(u, model); };
  std::vector<double> zeros;
  double a = lo, ga = g(a);
  for (int i = 1; i <= kScan; ++i) {
    const double b = lo + (hi - lo) * i / kScan;
    const double gb = g(b);
    if ((ga > 0) != (gb > 0)) {
      RootOptions opt;
      opt.abs_x_tol = 1e-14;
      zeros.push_back(find_root<double>(g, a, b, opt).root);
    }
    a = b;
    ga = gb;
  }
  return zeros;
}

std::pair<double, double> step_inflection_points(StepModel model) {
  const auto z = step_curvature_zeros(model, 0.05, 1.0);
  if (z.size() < 2) fail(ErrorKind::step_not_found, "fewer than two curvature zeros on t/N in [0.05, 1]");
  return {z[0], z[1]};
}

}  // namespace pwell
