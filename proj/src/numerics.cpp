#include "pwell/numerics.hpp"

#include <algorithm>
#include <cstdio>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <numbers>
#include <optional>
#include <vector>

namespace pwell {

const char* to_string(TailKind kind) {
  switch (kind) {
    case TailKind::geometric: return "geometric";
    case TailKind::polynomial_geometric: return "polynomial_geometric";
    case TailKind::gaussian_integral: return "gaussian_integral";
  }
  return "?";
}

RootResult find_root_bracketed(const std::function<double(double)>& func, double lo, double hi,
                               const PrecisionPolicy& policy) {
  policy.validate();
  require(std::isfinite(lo) && std::isfinite(hi) && lo < hi, "find_root_bracketed: need lo < hi");
  RootOptions opt;
  opt.abs_x_tol = std::numeric_limits<double>::epsilon() * 1e-3 * (std::abs(lo) + std::abs(hi));
  auto r = find_root<double>(func, lo, hi, opt);
  return {r.root, r.residual, r.bracket_width, r.evaluations};
}

double scaled_gaussian_tail_bound(double y) {
  require(y >= 0, "gaussian tail bound needs y >= 0");
  return 1.0 / (y + std::sqrt(y * y + 4.0 / std::numbers::pi));
}

double gaussian_tail_upper_bound(double y_trunc) {
  require(y_trunc > 0, "gaussian_tail_upper_bound: y must be positive");
  if (std::isinf(y_trunc)) return 0.0;
  return std::exp(-y_trunc * y_trunc) * scaled_gaussian_tail_bound(y_trunc);
}

double gaussian_moment_tail_bound(int power, double y) {
  require(power >= 0 && power <= 2, "gaussian_moment_tail_bound: power must be 0, 1 or 2");
  const double g = std::exp(-y * y);
  // integration by parts: int y^2 e^{-y^2} = Y e^{-Y^2}/2 + (1/2) int e^{-y^2}, and so on
  const double h0 = g * scaled_gaussian_tail_bound(y);
  const double h1 = 0.5 * y * g + 0.5 * h0;
  if (power == 0) return h0;
  if (power == 1) return h1;
  return 0.5 * y * y * y * g + 1.5 * h1;
}

namespace {

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

constexpr double kRatioSafety = 1.1;
constexpr int kProbes = 4;

class TermCache {
 public:
  TermCache(const std::function<double(std::int64_t)>& f, std::int64_t first) : f_(f), first_(first) {}

  double at(std::int64_t n) {
    while (static_cast<std::int64_t>(terms_.size()) <= n - first_) {
      const double v = f_(first_ + static_cast<std::int64_t>(terms_.size()));
      require(std::isfinite(v) && v >= 0, "sum_with_tail_bound: summand must be finite and non-negative");
      terms_.push_back(v);
    }
    return terms_[static_cast<std::size_t>(n - first_)];
  }

 private:
  const std::function<double(std::int64_t)>& f_;
  std::int64_t first_;
  std::vector<double> terms_;
};

// Tail over n >= M from successive quotients, assumed non-increasing beyond the probes.
std::optional<TailBound> geometric_envelope(TermCache& terms, std::int64_t M) {
  const double aM = terms.at(M);
  if (aM == 0) return TailBound{TailKind::geometric, 0.0, M};
  double prev = std::numeric_limits<double>::infinity();
  double first_ratio = 0, last_ratio = 0;
  for (int k = 0; k < kProbes; ++k) {
    const double num = terms.at(M + k + 1), den = terms.at(M + k);
    if (den == 0) break;
    const double r = num / den;
    if (r > prev * (1 + 1e-9)) return std::nullopt;
    if (k == 0) first_ratio = r;
    last_ratio = r;
    prev = r;
  }
  const double q = kRatioSafety * first_ratio;
  if (!(q < 1)) return std::nullopt;
  const bool constant = std::abs(last_ratio - first_ratio) <= 1e-12 * first_ratio;
  return TailBound{constant ? TailKind::geometric : TailKind::polynomial_geometric, aM / (1 - q), M};
}

// Tail over n >= M assuming the log-decrement ln(a_n / a_{n+1}) grows at least
// linearly, as it does for c * exp(-s n^2) envelopes.
std::optional<TailBound> gaussian_envelope(TermCache& terms, std::int64_t M) {
  const double aM = terms.at(M);
  if (aM == 0) return TailBound{TailKind::gaussian_integral, 0.0, M};
  double L[kProbes + 1];
  for (int k = 0; k <= kProbes; ++k) {
    const double den = terms.at(M + k), num = terms.at(M + k + 1);
    if (num == 0 || den == 0) return std::nullopt;
    L[k] = std::log(den / num);
  }
  double slope = std::numeric_limits<double>::infinity();
  for (int k = 0; k < kProbes; ++k) {
    const double s = (L[k + 1] - L[k]) / 2;
    if (!(s > 0)) return std::nullopt;
    slope = std::min(slope, s);
  }
  slope /= kRatioSafety;
  const double linear = L[0] - slope;
  if (!(linear >= 0)) return std::nullopt;
  const double c = linear / (2 * std::sqrt(slope));
  const double bound = aM * (1.0 + scaled_gaussian_tail_bound(c) / std::sqrt(slope));
  return TailBound{TailKind::gaussian_integral, bound, M};
}

std::optional<TailBound> certify(TermCache& terms, std::int64_t M, RegimeHint hint, double target) {
  auto primary = hint == RegimeHint::low_t ? geometric_envelope(terms, M) : gaussian_envelope(terms, M);
  if (primary && primary->bound_value <= target) return primary;
  auto secondary = hint == RegimeHint::low_t ? gaussian_envelope(terms, M) : geometric_envelope(terms, M);
  if (secondary && (!primary || secondary->bound_value < primary->bound_value)) return secondary;
  return primary;
}

}  // namespace

TailSum sum_with_tail_bound(const std::function<double(std::int64_t)>& summand, std::int64_t first,
                            const PrecisionPolicy& policy, RegimeHint hint) {
  policy.validate();
  const double target = policy.target_abs_error;
  constexpr std::int64_t kMaxSpan = std::int64_t{1} << 27;
  TermCache terms(summand, first);

  auto passes = [&](std::int64_t M) {
    auto tb = certify(terms, M, hint, target);
    return tb && tb->bound_value <= target;
  };

  std::int64_t span = 1;
  while (!passes(first + span)) {
    span *= 2;
    if (span > kMaxSpan) {
      fail(ErrorKind::bound_unavailable, "no geometric or gaussian envelope certified within " +
                                             std::to_string(kMaxSpan) + " terms");
    }
  }
  std::int64_t lo = span / 2, hi = span;  // passes(first + hi), and lo is the last failing span
  if (span == 1) lo = 0;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (passes(first + mid)) hi = mid; else lo = mid;
  }
  const std::int64_t M = first + hi;
  TailSum out;
  out.bound = *certify(terms, M, hint, target);
  for (std::int64_t n = first; n < M; ++n) out.value += terms.at(n);
  return out;
}

QuadResult quad_semi_infinite(const SemiInfiniteIntegrand& in, const PrecisionPolicy& policy) {
  policy.validate();
  require(static_cast<bool>(in.f), "quad_semi_infinite: integrand missing");
  require(in.envelope_amplitude >= 0 && std::isfinite(in.envelope_amplitude),
          "quad_semi_infinite: envelope amplitude must be finite");
  const double target = policy.target_abs_error;

  double Y = std::max(1.0, in.envelope_start);
  while (in.envelope_amplitude * gaussian_moment_tail_bound(in.envelope_power, Y) > target / 4) {
    Y += 0.5;
    if (Y > 60) fail(ErrorKind::non_convergent, "tail envelope never drops below target");
  }

  auto guarded = [&](double y) {
    const double v = in.f(y);
    if (!std::isfinite(v)) fail(ErrorKind::divergent_integral, "integrand not finite at y = " + std::to_string(y));
    return v;
  };

  using boost::math::quadrature::gauss_kronrod;
  QuadResult out;
  out.cut = Y;
  // Tighter than needed only amplifies rounding noise in the error estimate.
  const double rel_tol = std::max(64 * std::numeric_limits<double>::epsilon(), 0.1 * target);
  for (double a = 0; a < Y; a += 1.0) {
    const double b = std::min(Y, a + 1.0);
    double err = 0, l1 = 0;
    const double piece = gauss_kronrod<double, 15>::integrate(guarded, a, b, 20, rel_tol, &err, &l1);
    out.value += piece;
    out.error += err;
  }
  out.error += in.envelope_amplitude * gaussian_moment_tail_bound(in.envelope_power, Y);
  if (in.algebraic_tail) out.value += in.algebraic_tail(Y);
  const double allowed = std::max(target, 1e3 * std::numeric_limits<double>::epsilon() * std::abs(out.value));
  if (!(out.error <= allowed)) {
    fail(ErrorKind::non_convergent, "quadrature error estimate " + format_sci(out.error) +
                                        " above target " + format_sci(allowed));
  }
  return out;
}

double trapezoid_sum_approx(const SemiInfiniteIntegrand& g, double delta_y, double tau,
                            const PrecisionPolicy& policy) {
  require(delta_y > 0 && std::isfinite(delta_y), "trapezoid_sum_approx: delta_y must be positive");
  const auto integral = quad_semi_infinite(g, policy);
  return (tau - 0.5) * g.f(0.0) + integral.value / delta_y;
}

}  // namespace pwell
