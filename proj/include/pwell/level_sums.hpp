#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "pwell/core_model.hpp"
#include "pwell/errors.hpp"
#include "pwell/numerics.hpp"

namespace pwell {

/// Occupancy moments of one half well at gap beta = alpha + b e_1, so that
/// x_n = beta + b (e_n - e_1) and occ_n = 1 / (e^{x_n} - eta).
/// w_n = occ_n (1 + eta occ_n) is minus the derivative of occ_n with respect to beta.
template <class Real>
struct LevelSums {
  Real count{0};   // sum occ_n
  Real force{0};   // sum occ_n e_n
  Real dcount{0};  // sum w_n
  Real dforce{0};  // sum w_n e_n
  double tail_count = 0, tail_force = 0, tail_dcount = 0, tail_dforce = 0;
  double round_count = 0, round_force = 0;
  std::int64_t n_terms = 0;
  TailKind tail_kind = TailKind::gaussian_integral;
};

struct SumGoals {
  double count = 1e-12;
  double force = 1e-12;
};

namespace detail {

struct TailPair {
  double value = std::numeric_limits<double>::infinity();
  TailKind kind = TailKind::gaussian_integral;
};

// Bound on sum_{n >= M} e^{-x_n} e_n^p for p in {0, 1}, with x_n = alpha + b e_n.
inline TailPair envelope_tail(WellSide side, double b, double beta, std::int64_t M, int p) {
  const double tau = side.tau();
  const double e1 = energy_level(side, 1);
  const auto x_of = [&](std::int64_t n) { return beta + b * double(level_offset(side, n)); };
  TailPair out;
  const double Y = std::sqrt(b) * (double(M - 1) - tau);
  if (M >= 2 && Y >= std::sqrt(double(p))) {
    const double g = std::exp(-x_of(M - 1)) * std::pow(b, -p - 0.5);
    const double h0 = scaled_gaussian_tail_bound(Y);
    const double v = g * (p == 0 ? h0 : 0.5 * Y + 0.5 * h0);
    if (std::isfinite(v)) out = {v, TailKind::gaussian_integral};
  }
  const double eM = double(level_offset(side, M)) + e1;
  const double eM1 = double(level_offset(side, M + 1)) + e1;
  const double rho = std::pow(eM1 / eM, p) * std::exp(-b * double(level_step(side, M)));
  if (rho < 1) {
    const double v = std::exp(-x_of(M)) * std::pow(eM, p) / (1 - rho);
    if (std::isfinite(v) && v < out.value) out = {v, p == 0 ? TailKind::geometric : TailKind::polynomial_geometric};
  }
  return out;
}

}  // namespace detail

/// Sums the four occupancy moments until certified tails drop below
/// 1e-3 of the goals. Exponentials come from a recurrence re-anchored by a
/// direct evaluation every 64 terms. Bosons carry e^{x} - 1 and e^{b step} - 1,
/// whose update adds only positive terms since x > 0. Fermions carry e^{x}
/// itself because x < 0 would make the additive form cancel.
template <class Real>
LevelSums<Real> level_sums(Statistics stat, WellSide side, const Real& b, const Real& beta, SumGoals goals,
                           std::int64_t max_terms = std::int64_t{1} << 28) {
  using std::abs;
  using std::expm1;
  constexpr int kAnchor = 64;
  constexpr double kFar = 600;
  const bool boson = stat.is_boson();
  if (boson && !(beta > 0)) fail(ErrorKind::pole, "boson occupancy needs alpha + b e_1 > 0");

  LevelSums<Real> s;
  const double eps = double(std::numeric_limits<Real>::epsilon());
  const double bd = double(b), betad = double(beta);
  const Real e1 = Real(energy_level(side, 1));
  using std::exp;
  const Real q = boson ? Real(expm1(2 * b)) : Real(exp(2 * b));
  Real em1{0}, rm1{0};  // fermions: e^{x_n} and e^{b step_n}
  bool anchored = false;
  int since = 0;
  double xw_count = 0, xw_force = 0;

  for (std::int64_t n = 1;; ++n) {
    const Real off = Real(level_offset(side, n));
    const Real x = beta + b * off;
    const double xd = double(x);
    if (!anchored || since >= kAnchor || std::abs(xd) > kFar) {
      if (boson) {
        em1 = expm1(x);
        rm1 = expm1(b * Real(level_step(side, n)));
      } else {
        em1 = exp(x);
        rm1 = exp(b * Real(level_step(side, n)));
      }
      anchored = std::abs(xd) <= kFar;
      since = 0;
    }
    const Real occ = boson ? Real(1 / em1) : Real(1 / (em1 + 1));
    const Real e = off + e1;
    const Real w = boson ? Real(occ * (1 + occ)) : occ == 0 ? Real(0) : Real(occ * occ * em1);
    s.count += occ;
    s.force += occ * e;
    s.dcount += w;
    s.dforce += w * e;
    const double wd = double(w);
    xw_count += std::abs(xd) * wd;
    xw_force += std::abs(xd) * wd * double(e);
    s.n_terms = n;

    if (boson) {
      em1 = em1 + rm1 + em1 * rm1;
      rm1 = rm1 + q + rm1 * q;
    } else {
      em1 *= rm1;
      rm1 *= q;
    }
    ++since;

    const std::int64_t M = n + 1;
    const double xM = betad + bd * double(level_offset(side, M));
    if (xM > 0 && M >= 2 && (n % 8 == 0 || xM > 30)) {
      const double C = boson ? 1.0 / -std::expm1(-xM) : 1.0;
      const auto t0 = detail::envelope_tail(side, bd, betad, M, 0);
      const auto t1 = detail::envelope_tail(side, bd, betad, M, 1);
      const double tc = C * t0.value, tf = C * t1.value;
      const double ratio = double(s.dcount) > 0 ? double(s.dforce) / double(s.dcount) : double(e);
      if (tc <= 1e-3 * goals.count && tf + ratio * tc <= 1e-3 * goals.force) {
        s.tail_count = tc;
        s.tail_force = tf;
        s.tail_dcount = C * tc;
        s.tail_dforce = C * tf;
        s.tail_kind = t0.kind;
        break;
      }
    }
    if (n >= max_terms) fail(ErrorKind::bound_unavailable, "level sum did not certify a tail within the term budget");
  }
  const double K2 = double(kAnchor) * kAnchor;
  s.round_count = eps * (double(s.n_terms) + K2) * double(s.count) + eps * xw_count;
  s.round_force = eps * (double(s.n_terms) + K2) * double(s.force) + eps * xw_force;
  return s;
}

}  // namespace pwell
