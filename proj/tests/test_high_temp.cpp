#include <cmath>
#include <numbers>

#include "check_rel.hpp"
#include "doctest.h"
#include "pwell/exact_curve.hpp"
#include "pwell/high_temp.hpp"

using namespace pwell;
using std::numbers::pi;

TEST_CASE("theta sum with only the central term") {
  CHECK_REL(theta_sum(0, 1, 0.3, 0), std::sqrt(pi / (4 * 0.3)), 1e-15);
}

TEST_CASE("theta sum matches the direct level sum at moderate b") {
  double direct = 0;
  for (int n = 1; n < 20; ++n) direct += std::exp(-10.0 * n * n);
  CHECK(std::abs(theta_sum(3, 1, 10, 1) - direct) < 1e-6);
  double direct_p = 0;
  for (int n = 1; n < 20; ++n) direct_p += std::exp(-0.7 * (n - 0.5) * (n - 0.5));
  CHECK_REL(theta_sum(5, 1, 0.7, 0), direct_p, 1e-12);
}

TEST_CASE("non-central theta terms are exponentially small at small b") {
  for (int sigma : {0, 1}) {
    const double full = theta_sum(5, 1, 0.01, sigma);
    const double central = theta_sum(0, 1, 0.01, sigma);
    CHECK(std::abs(full - central) / std::abs(full) < 1e-8);
  }
}

TEST_CASE("fugacity expansion values") {
  const auto q1 = fugacity_q(Statistics::boson(), WellSide::minus(), 100, 1e-6, 1);
  CHECK_REL(q1.q_value, 200 * std::sqrt(1e-6 / pi), 1e-14);
  CHECK_REL(q1.q_value, 0.112838, 1e-5);
  CHECK(q1.valid);
  const auto q2 = fugacity_q(Statistics::boson(), WellSide::minus(), 100, 1e-6, 2);
  CHECK_REL(q2.q_value - q1.q_value, 200 * (1 - std::sqrt(2.0) * 100) * (1e-6 / pi), 1e-10);
  CHECK_REL(q2.q_value - q1.q_value, -8.939e-3, 1e-3);
  CHECK_FALSE(fugacity_q(Statistics::boson(), WellSide::plus(), 100, 1e-2, 1).valid);
}

TEST_CASE("fugacity vanishes as b goes to zero") {
  double prev = INFINITY;
  for (double b : {1e-4, 1e-6, 1e-8, 1e-10}) {
    const double q = fugacity_q(Statistics::fermion(), WellSide::plus(), 100, b, 2).q_value;
    CHECK(q > 0);
    CHECK(q < prev);
    prev = q;
  }
  CHECK(prev < 1e-2);
}

TEST_CASE("second-order fugacity against the oracle at t = 1e8") {
  for (auto stat : {Statistics::boson(), Statistics::fermion()}) {
    for (auto side : {WellSide::plus(), WellSide::minus()}) {
      const auto s = solve_alpha(stat, side, 100, 1e8);
      const double q = fugacity_q(stat, side, 100, 1e-8, 2).q_value;
      CHECK(std::abs(std::exp(-s.alpha) - q) / q < 1e-2);
    }
  }
}

TEST_CASE("force asymptotes") {
  CHECK_REL(delta_f_asymptote(100, pi, AsymptoteOrder::leading), 50.0, 1e-15);
  const double t = 1e6;
  const double shift = delta_f_asymptote(100, t, AsymptoteOrder::next, Statistics::fermion()) -
                       delta_f_asymptote(100, t, AsymptoteOrder::leading);
  CHECK_REL(shift, -(100 / pi) * (-(std::sqrt(2.0) - 1) * 100 - 0.5), 1e-9);
  CHECK(std::abs(shift - 1334.4) < 0.1);
}

TEST_CASE("leading asymptote does not depend on statistics") {
  for (double t : {10.0, 1e4, 1e9}) {
    CHECK(delta_f_asymptote(77, t, AsymptoteOrder::leading, Statistics::boson()) ==
          delta_f_asymptote(77, t, AsymptoteOrder::leading, Statistics::fermion()));
  }
}

TEST_CASE("leading force terms cancel between the sides") {
  for (auto stat : {Statistics::boson(), Statistics::fermion()}) {
    const double b = 1e-5;
    const double qp = fugacity_q(stat, WellSide::plus(), 100, b, 1).q_value;
    const double qm = fugacity_q(stat, WellSide::minus(), 100, b, 1).q_value;
    CHECK(qp == qm);
    CHECK(force_series_term(stat, WellSide::plus(), qp, b, 1, 0) ==
          force_series_term(stat, WellSide::minus(), qm, b, 1, 0));
  }
}

TEST_CASE("force series reproduces the oracle side force at high temperature") {
  const double t = 1e6, b = 1 / t;
  for (auto stat : {Statistics::boson(), Statistics::fermion()}) {
    for (auto side : {WellSide::plus(), WellSide::minus()}) {
      const auto s = solve_alpha(stat, side, 100, t);
      const double fs = force_series(stat, side, std::exp(-s.alpha), b, 40);
      CHECK_REL(fs, s.f, 1e-9);
    }
  }
}

TEST_CASE("next-order asymptote converges toward the oracle") {
  for (auto stat : {Statistics::boson(), Statistics::fermion()}) {
    double prev = INFINITY;
    for (double t : {1e4, 1e5, 1e6, 1e7, 1e8, 1e9}) {
      const double exact = net_force(stat, 100, t).delta_f;
      const double rel = std::abs(delta_f_asymptote(100, t, AsymptoteOrder::next, stat) - exact) / exact;
      INFO(std::string(to_string(stat)) << " t = " << t << " rel = " << rel);
      CHECK(rel < prev);
      prev = rel;
    }
  }
}
