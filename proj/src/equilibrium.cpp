#include "pwell/equilibrium.hpp"

#include <cmath>

#include "pwell/errors.hpp"
#include "pwell/exact_curve.hpp"
#include "pwell/low_temp.hpp"
#include "pwell/numerics.hpp"

namespace pwell {

ShiftResult shift_zero_t(Statistics stat, std::int64_t N) {
  const auto z = zero_t_forces(stat, N);
  ShiftResult s;
  s.method = ShiftMethod::zero_t_closed_form;
  s.r_ratio = std::cbrt(to_double(z.f_minus / z.f_plus));
  s.xi = (s.r_ratio - 1) / (s.r_ratio + 1);
  return s;
}

ShiftResult shift_finite_t(Statistics stat, std::int64_t N, double t, const PrecisionPolicy& policy) {
  require(N >= 1, "shift_finite_t: N must be at least 1");
  require(std::isfinite(t) && t > 0, "shift_finite_t: t must be positive");
  auto forces = [&](double xi) {
    const double wp = 1 - xi, wm = 1 + xi;
    const double fp = solve_alpha(stat, WellSide::plus(), N, t * wp * wp, policy).f / (wp * wp * wp);
    const double fm = solve_alpha(stat, WellSide::minus(), N, t * wm * wm, policy).f / (wm * wm * wm);
    return std::pair{fm, fp};
  };
  auto h = [&](double xi) {
    const auto [fm, fp] = forces(xi);
    return (fm - fp) / (fm + fp);
  };
  double hi = 0.5;
  while (h(hi) >= 0) {
    hi = 0.5 * (1 + hi);
    if (hi > 1 - 1e-9) fail(ErrorKind::bracket_failure, "force balance not bracketed below xi = 1");
  }
  RootOptions opt;
  opt.abs_x_tol = 1e-12;
  const auto r = find_root<double>(h, 0.0, hi, opt);
  ShiftResult s;
  s.method = ShiftMethod::finite_t_solve;
  s.t = t;
  s.xi = r.root;
  s.r_ratio = (1 + s.xi) / (1 - s.xi);
  s.residual = r.residual;
  return s;
}

TransferResult transfer_zero_t(Statistics stat, std::int64_t N) {
  require(N >= 1, "transfer_zero_t: N must be at least 1");
  TransferResult out;
  const double n = double(N);
  if (stat.is_boson()) {
    out.N_plus = 8 * n / 5;
    out.N_minus = 2 * n / 5;
  } else {
    // continuous forms of the filled-level sums, n+ (4 n+^2 - 1)/12 = n- (n- + 1)(2 n- + 1)/6
    auto g = [&](double np) {
      const double nm = 2 * n - np;
      return np * (4 * np * np - 1) / 12 - nm * (nm + 1) * (2 * nm + 1) / 6;
    };
    RootOptions opt;
    opt.abs_x_tol = 1e-13 * n;
    out.N_plus = find_root<double>(g, n, 2 * n, opt).root;
    out.N_minus = 2 * n - out.N_plus;
  }
  out.N_plus_rounded = std::llround(out.N_plus);
  out.N_minus_rounded = 2 * N - out.N_plus_rounded;
  return out;
}

}  // namespace pwell
