#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "pwell/errors.hpp"
#include "pwell/precision.hpp"

namespace pwell {

// ---------------------------------------------------------------------------
// Bracketed root finding

struct RootResult {
  double root = 0;
  double residual = 0;
  double bracket_width = 0;
  int evaluations = 0;
};

template <class Real>
struct RootResultT {
  Real root{0};
  Real residual{0};
  Real bracket_width{0};
  int evaluations = 0;
};

struct RootOptions {
  double abs_x_tol = 0;
  double rel_x_tol = 0;      // relative to |root|; floored at 4 epsilon of the number type
  int max_evaluations = 500;
  int bisection_steps = 4;   // plain bisection before switching to Brent steps
};

/// Brent's method behind a few plain bisection steps. func must change sign
/// on [lo, hi]. The returned root lies inside the final bracket.
template <class Real, class F>
RootResultT<Real> find_root(F&& func, Real lo, Real hi, const RootOptions& opt = {}) {
  using std::abs;
  const Real eps = std::numeric_limits<Real>::epsilon();
  RootResultT<Real> out;
  Real a = lo, b = hi;
  Real fa = func(a), fb = func(b);
  out.evaluations = 2;
  if (fa == 0) return {a, fa, Real(0), out.evaluations};
  if (fb == 0) return {b, fb, Real(0), out.evaluations};
  if ((fa > 0) == (fb > 0)) {
    fail(ErrorKind::no_sign_change, "endpoint values share a sign");
  }
  auto x_tol = [&](const Real& x) {
    Real tol = Real(opt.abs_x_tol);
    Real rel = Real(opt.rel_x_tol) * abs(x);
    if (rel > tol) tol = rel;
    Real floor = 4 * eps * abs(x);
    if (floor > tol) tol = floor;
    if (tol == 0) tol = std::numeric_limits<Real>::min();
    return tol;
  };

  for (int i = 0; i < opt.bisection_steps; ++i) {
    Real m = a + (b - a) / 2;
    Real fm = func(m);
    ++out.evaluations;
    if (fm == 0) return {m, fm, Real(0), out.evaluations};
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
      fb = fm;
    }
  }

  // Brent: b is the best estimate, c the contrapoint, a the previous iterate.
  Real c = a, fc = fa;
  Real d = b - a, e = d;
  while (out.evaluations < opt.max_evaluations) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (abs(fc) < abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const Real tol1 = x_tol(b) / 2;
    const Real xm = (c - b) / 2;
    if (fb == 0 || abs(xm) <= tol1) {
      return {b, fb, abs(c - b), out.evaluations};
    }
    if (abs(e) >= tol1 && abs(fa) > abs(fb)) {
      Real p, q, r;
      const Real s = fb / fa;
      if (a == c) {
        p = 2 * xm * s;
        q = 1 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2 * xm * q * (q - r) - (b - a) * (r - 1));
        q = (q - 1) * (r - 1) * (s - 1);
      }
      if (p > 0) q = -q;
      p = abs(p);
      const Real min1 = 3 * xm * q - abs(tol1 * q);
      const Real min2 = abs(e * q);
      if (2 * p < (min1 < min2 ? min1 : min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    if (abs(d) > tol1) {
      b += d;
    } else {
      b += (xm > 0 ? tol1 : -tol1);
    }
    fb = func(b);
    ++out.evaluations;
  }
  fail(ErrorKind::max_iterations, "root finder exhausted " + std::to_string(opt.max_evaluations) +
                                      " evaluations");
}

/// Policy-driven double-precision front end: |f(root)| <= target_abs_error is
/// sought and the bracket is shrunk to a few ulps.
RootResult find_root_bracketed(const std::function<double(double)>& func, double lo, double hi,
                               const PrecisionPolicy& policy = {});

// ---------------------------------------------------------------------------
// Truncated sums with certified tails

enum class TailKind { geometric, polynomial_geometric, gaussian_integral };
const char* to_string(TailKind kind);

struct TailBound {
  TailKind kind = TailKind::geometric;
  double bound_value = 0;
  std::int64_t truncation_index = 1;  // first dropped index
};

enum class RegimeHint { low_t, high_t };

struct TailSum {
  double value = 0;  // partial sum over [first, truncation_index)
  TailBound bound;
};

/// Sums a positive, eventually decreasing summand from `first` until a
/// probe-certified envelope bounds the dropped tail below target_abs_error.
/// value <= true sum <= value + bound.bound_value.
TailSum sum_with_tail_bound(const std::function<double(std::int64_t)>& summand, std::int64_t first,
                            const PrecisionPolicy& policy, RegimeHint hint);

/// Upper bound on the integral of exp(-y^2) over [y, inf): e^{-y^2} / (y + sqrt(y^2 + 4/pi)).
double gaussian_tail_upper_bound(double y_trunc);

/// exp(y^2) * gaussian_tail_upper_bound(y); stays finite where the bound underflows.
double scaled_gaussian_tail_bound(double y_trunc);

/// Upper bound on the integral of y^(2 power) exp(-y^2) over [y, inf), power in {0, 1, 2}.
double gaussian_moment_tail_bound(int power, double y_trunc);

// ---------------------------------------------------------------------------
// Semi-infinite quadrature

/// An integrand on [0, inf) together with what is known about its tail:
///   |f(y) - a(y)| <= envelope_amplitude * y^(2 envelope_power) * exp(-y^2)   for y >= envelope_start
/// where a(y) is an optional algebraic piece whose exact tail integral over
/// [Y, inf) is supplied by algebraic_tail(Y).
struct SemiInfiniteIntegrand {
  std::function<double(double)> f;
  double envelope_amplitude = 1.0;
  int envelope_power = 0;
  double envelope_start = 0.0;
  std::function<double(double)> algebraic_tail;
};

struct QuadResult {
  double value = 0;
  double error = 0;
  double cut = 0;  // finite integration limit used
};

QuadResult quad_semi_infinite(const SemiInfiniteIntegrand& integrand, const PrecisionPolicy& policy = {});

/// (tau - 1/2) g(0) + (1 / delta_y) * integral of g over [0, inf).
double trapezoid_sum_approx(const SemiInfiniteIntegrand& g, double delta_y, double tau,
                            const PrecisionPolicy& policy = {});

}  // namespace pwell
