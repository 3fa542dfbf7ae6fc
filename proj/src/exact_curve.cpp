#include "pwell/exact_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pwell/level_sums.hpp"
#include "pwell/sweep.hpp"

namespace pwell {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRepr = 0x1p-52;

struct Presolve {
  double beta = 0;
  double f = 0;
};

void check_inputs(std::int64_t N, double t, const PrecisionPolicy& policy) {
  policy.validate();
  require(N >= 1, "particle number must be at least 1");
  require(std::isfinite(t) && t > 0, "reduced temperature must be positive and finite");
}

// Double-precision solve that only supplies a starting point and a force
// scale for the extended-precision pass.
Presolve presolve(Statistics stat, WellSide side, std::int64_t N, double t) {
  const double b = 1.0 / t;
  const double Nd = double(N);
  const SumGoals goals{1e-13 * Nd, kInf};
  auto G = [&](double beta) { return level_sums<double>(stat, side, b, beta, goals).count - Nd; };

  double lo, hi;
  if (stat.is_boson()) {
    lo = std::log1p(1.0 / Nd);
    if (G(lo) <= 0) {
      return {lo, level_sums<double>(stat, side, b, lo, goals).force};
    }
    hi = 2 * lo;
    while (G(hi) > 0) {
      lo = hi;
      hi *= 2;
      if (hi > 1e6) fail(ErrorKind::bracket_failure, "boson bracket did not close");
    }
  } else {
    const double e1 = energy_level(side, 1);
    const double centre = -0.5 * b * (energy_level(side, N) + energy_level(side, N + 1)) + b * e1;
    double w = 1;
    lo = centre - w;
    hi = centre + w;
    while (!(G(lo) >= 0 && G(hi) <= 0)) {
      w *= 2;
      lo = centre - w;
      hi = centre + w;
      if (w > 1e12) fail(ErrorKind::bracket_failure, "fermion bracket did not close");
    }
  }
  RootOptions opt;
  opt.abs_x_tol = 1e-15;
  const auto r = find_root<double>(G, lo, hi, opt);
  return {r.root, level_sums<double>(stat, side, b, r.root, goals).force};
}

template <class Real>
OccupancySolution solve_at(Statistics stat, WellSide side, std::int64_t N, double t, const PrecisionPolicy& policy,
                           const Presolve& start, bool& converged) {
  using std::abs;
  using std::log1p;
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real b = 1 / Real(t);
  const Real Nr = Real(N);
  const SumGoals goals{policy.goal_for(double(N)), policy.goal_for(start.f)};
  const bool boson = stat.is_boson();
  const Real floor = boson ? Real(log1p(1 / Nr)) : Real(-kInf);

  auto eval = [&](const Real& beta) { return level_sums<Real>(stat, side, b, beta, goals); };

  Real beta = std::max(Real(start.beta), floor);
  auto s = eval(beta);
  for (int it = 0; it < 8; ++it) {
    const Real G = s.count - Nr;
    if (abs(G) <= 8 * eps * Nr || s.dcount == 0) break;
    Real next = beta + G / s.dcount;
    if (next < floor) next = floor;
    if (next == beta) break;
    beta = next;
    s = eval(beta);
  }

  // certify a bracket around beta
  Real G = s.count - Nr;
  Real w = 4 * eps * std::max(Real(1), Real(abs(beta)));
  if (s.dcount > 0) w += 2 * abs(G) / s.dcount;
  Real width{0};
  bool bracketed = false;
  for (int grow = 0; grow < 64 && !bracketed; ++grow, w *= 16) {
    Real lo = beta - w, hi = beta + w;
    bool lo_ok;
    if (boson && lo <= floor) {
      lo = floor;  // occ_1 alone equals N here
      lo_ok = true;
    } else {
      lo_ok = eval(lo).count - Nr >= 0;
    }
    const bool hi_ok = eval(hi).count - Nr <= 0;
    if (!(lo_ok && hi_ok)) continue;
    bracketed = true;
    if (grow == 0) {
      width = hi - lo;
    } else {
      // the Newton point was off; fall back to Brent inside the bracket
      if (boson && lo == floor && eval(lo).count - Nr <= 0) {
        beta = lo;
        width = 0;
        s = eval(beta);
        G = s.count - Nr;
        break;
      }
      RootOptions opt;
      auto r = find_root<Real>([&](const Real& x) { return Real(eval(x).count - Nr); }, lo, hi, opt);
      beta = r.root;
      width = r.bracket_width;
      s = eval(beta);
      G = s.count - Nr;
    }
  }
  if (!bracketed) fail(ErrorKind::bracket_failure, "could not bracket the number constraint");

  const double Gd = std::abs(double(G));
  const double count_err = Gd + s.tail_count + s.round_count;
  const double dcount = double(s.dcount), dforce = double(s.dforce);
  const double e_last = energy_level(side, s.n_terms);
  const double ratio = dcount > 0 ? dforce / dcount : e_last;
  const double wd = double(width);
  const double beta_err = (dcount > 0 ? count_err / dcount : 0.0) + wd;
  const double f_err = s.tail_force + s.round_force + ratio * count_err + dforce * wd;

  const Real e1 = Real(energy_level(side, 1));
  const Real alpha = beta - b * e1;

  OccupancySolution sol;
  sol.stat = stat;
  sol.side = side;
  sol.N = N;
  sol.t = t;
  sol.b = 1.0 / t;
  sol.alpha = double(alpha);
  sol.gap = double(beta);
  sol.q_fugacity = std::exp(-sol.alpha);
  sol.alpha_error = beta_err + double(eps * abs(b * e1)) + std::abs(sol.alpha) * kRepr;
  sol.n_trunc = s.n_terms + 1;
  sol.count_residual = double(G);
  sol.count_error = count_err;
  sol.f = double(s.force);
  sol.f_error = f_err + std::abs(sol.f) * kRepr;
  sol.f_error_extended = f_err;
  sol.tail_kind = s.tail_kind;
  sol.alpha_text = to_decimal(alpha);
  sol.gap_text = to_decimal(beta);
  sol.f_text = to_decimal(Real(s.force));
  converged = f_err <= policy.goal_for(sol.f) && count_err <= policy.goal_for(double(N));
  return sol;
}

}  // namespace

OccupancySolution solve_alpha(Statistics stat, WellSide side, std::int64_t N, double t, const PrecisionPolicy& policy) {
  check_inputs(N, t, policy);
  const Presolve start = presolve(stat, side, N, t);
  int digits = policy.working_digits;
  double last_error = kInf;
  while (digits <= policy.max_digits) {
    const int tier = tier_digits(digits);
    bool converged = false;
    auto sol = with_precision(tier, [&](auto tag) {
      using Real = typename decltype(tag)::type;
      return solve_at<Real>(stat, side, N, t, policy, start, converged);
    });
    sol.digits_used = tier;
    if (converged) return sol;
    last_error = sol.f_error;
    digits = policy.escalate(tier);
  }
  std::ostringstream msg;
  msg << "error bound " << last_error << " still above target at " << policy.max_digits << " digits (t = " << t << ")";
  fail(ErrorKind::precision_exhausted, msg.str());
}

double occupancy(const OccupancySolution& sol, double b, std::int64_t n) {
  require(n >= 1, "occupancy: level index must be at least 1");
  require(b > 0 && std::abs(b - sol.b) <= 1e-12 * sol.b, "occupancy: b does not match the solution");
  const bool boson = sol.stat.is_boson();
  if (boson && !(sol.gap > 0)) fail(ErrorKind::pole, "boson occupancy at or beyond the pole alpha = -b e_1");
  const double x = sol.gap + b * double(level_offset(sol.side, n));
  return 1.0 / (std::expm1(x) + (boson ? 0.0 : 2.0));
}

SideForce force_side(Statistics stat, WellSide side, std::int64_t N, double t, const PrecisionPolicy& policy) {
  auto sol = solve_alpha(stat, side, N, t, policy);
  return {sol.f, sol.f_error, std::move(sol)};
}

CurvePoint net_force(Statistics stat, std::int64_t N, double t, const PrecisionPolicy& policy) {
  const auto plus = solve_alpha(stat, WellSide::plus(), N, t, policy);
  const auto minus = solve_alpha(stat, WellSide::minus(), N, t, policy);
  CurvePoint p;
  p.t = t;
  p.alpha_plus = plus.alpha;
  p.alpha_minus = minus.alpha;
  p.f_plus = plus.f;
  p.f_minus = minus.f;
  // difference taken on the extended values, rounded once
  const Wide150 diff = Wide150(minus.f_text) - Wide150(plus.f_text);
  p.delta_f = static_cast<double>(diff);
  p.delta_f_error = plus.f_error_extended + minus.f_error_extended + std::abs(p.delta_f) * 0x1p-53;
  return p;
}

std::pair<double, double> default_minimum_window(Statistics stat, std::int64_t N) {
  const double n = double(N);
  return stat.is_boson() ? std::pair{0.1 * n, 2 * n} : std::pair{0.05 * n * n, 2 * n * n};
}

MinimumResult locate_minimum(Statistics stat, std::int64_t N, const PrecisionPolicy& policy,
                             std::optional<std::pair<double, double>> window) {
  check_inputs(N, 1.0, policy);
  const auto [wlo, whi] = window.value_or(default_minimum_window(stat, N));
  require(wlo > 0 && wlo < whi, "locate_minimum: window must satisfy 0 < lo < hi");

  constexpr int kProbes = 17;
  std::vector<double> grid(kProbes);
  for (int i = 0; i < kProbes; ++i) grid[i] = wlo * std::pow(whi / wlo, double(i) / (kProbes - 1));
  const auto sweep = sweep_curve(stat, N, grid, policy);
  if (!sweep.failures.empty()) {
    const auto& f = sweep.failures.front();
    fail(f.kind, "minimum probe at t = " + std::to_string(f.t) + " failed: " + f.message);
  }

  MinimumResult out;
  std::size_t best = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    out.probes.emplace_back(grid[i], sweep.points[i]->delta_f);
    if (sweep.points[i]->delta_f < sweep.points[best]->delta_f) best = i;
  }
  auto describe = [&] {
    std::ostringstream s;
    s.precision(10);
    for (auto& [t, v] : out.probes) s << " (" << t << ", " << v << ")";
    return s.str();
  };
  if (best == 0 || best + 1 == grid.size()) {
    fail(ErrorKind::not_unimodal, "discrete minimum sits on the window edge; probes:" + describe());
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const auto& a = *sweep.points[i - 1];
    const auto& c = *sweep.points[i];
    const double slack = a.delta_f_error + c.delta_f_error;
    const bool ok = i <= best ? c.delta_f <= a.delta_f + slack : c.delta_f >= a.delta_f - slack;
    if (!ok) fail(ErrorKind::not_unimodal, "probe values are not unimodal; probes:" + describe());
  }

  // golden section in log t
  auto value = [&](double u) { return net_force(stat, N, std::exp(u), policy); };
  const double g = (std::sqrt(5.0) - 1) / 2;
  double a = std::log(grid[best - 1]), c = std::log(grid[best + 1]);
  double x1 = c - g * (c - a), x2 = a + g * (c - a);
  CurvePoint p1 = value(x1), p2 = value(x2);
  while (std::expm1(c - a) > 2e-4) {
    if (p1.delta_f < p2.delta_f) {
      c = x2;
      x2 = x1;
      p2 = p1;
      x1 = c - g * (c - a);
      p1 = value(x1);
    } else {
      a = x1;
      x1 = x2;
      p1 = p2;
      x2 = a + g * (c - a);
      p2 = value(x2);
    }
  }
  const CurvePoint& best_point = p1.delta_f < p2.delta_f ? p1 : p2;
  out.t_min = best_point.t;
  out.delta_f_min = best_point.delta_f;
  out.delta_f_error = best_point.delta_f_error;
  return out;
}

InflectionResult locate_inflections(Statistics stat, std::int64_t N, const PrecisionPolicy& policy,
                                    std::optional<std::pair<double, double>> window) {
  require(!stat.is_boson(), "locate_inflections is defined for fermions only");
  check_inputs(N, 1.0, policy);
  const double n = double(N);
  const auto [wlo, whi] = window.value_or(std::pair{0.05 * n, n});
  require(wlo > 0 && wlo < whi, "locate_inflections: window must satisfy 0 < lo < hi");

  constexpr int kGrid = 241;
  std::vector<double> grid(kGrid);
  for (int i = 0; i < kGrid; ++i) grid[i] = wlo * std::pow(whi / wlo, double(i) / (kGrid - 1));
  const auto sweep = sweep_curve(stat, N, grid, policy);
  if (!sweep.failures.empty()) {
    const auto& f = sweep.failures.front();
    fail(f.kind, "inflection scan at t = " + std::to_string(f.t) + " failed: " + f.message);
  }

  // second divided difference on the non-uniform grid, dropping values under the noise floor
  std::vector<std::pair<double, int>> signs;  // (t, sign)
  for (int i = 1; i + 1 < kGrid; ++i) {
    const auto &l = *sweep.points[i - 1], &m = *sweep.points[i], &r = *sweep.points[i + 1];
    const double hl = m.t - l.t, hr = r.t - m.t;
    const double d2 = 2 * ((r.delta_f - m.delta_f) / hr - (m.delta_f - l.delta_f) / hl) / (hl + hr);
    const double noise = 4 * (l.delta_f_error + m.delta_f_error + r.delta_f_error) / (hl * hr);
    if (std::abs(d2) > noise) signs.emplace_back(m.t, d2 > 0 ? 1 : -1);
  }

  auto d2_at = [&](double t) {
    const double h = 1e-3 * t;
    const double fm = net_force(stat, N, t - h, policy).delta_f;
    const double f0 = net_force(stat, N, t, policy).delta_f;
    const double fp = net_force(stat, N, t + h, policy).delta_f;
    return (fp - 2 * f0 + fm) / (h * h);
  };

  InflectionResult out;
  for (std::size_t k = 1; k < signs.size(); ++k) {
    if (signs[k].second == signs[k - 1].second) continue;
    RootOptions opt;
    opt.rel_x_tol = 1e-6;
    try {
      out.sign_changes.push_back(find_root<double>(d2_at, signs[k - 1].first, signs[k].first, opt).root);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::no_sign_change) throw;
    }
  }
  if (out.sign_changes.size() < 2) {
    fail(ErrorKind::step_not_found, "found " + std::to_string(out.sign_changes.size()) +
                                        " sign change(s) of the second difference, need two");
  }
  out.t_begin = out.sign_changes[0];
  out.t_end = out.sign_changes[1];
  return out;
}

}  // namespace pwell
