#include <cmath>
#include <cstring>
#include <numbers>
#include <random>

#include "check_rel.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "pwell/exact_curve.hpp"
#include "pwell/mid_temp_boson.hpp"
#include "pwell/numerics.hpp"

using namespace pwell;
using std::numbers::pi;

TEST_CASE("bracketed root: linear and closed-form roots") {
  auto r = find_root_bracketed([](double x) { return x - 2; }, 0, 5);
  CHECK_REL(r.root, 2.0, 1e-15);
  auto t = find_root_bracketed([](double x) { return std::tanh(x) - 0.5; }, 0, 2);
  CHECK_REL(t.root, std::atanh(0.5), 1e-14);
  CHECK_REL(t.root, 0.5493, 1e-4);
}

TEST_CASE("bracketed root on the Dirichlet S-function") {
  auto r = find_root_bracketed([](double z) { return S_function(WellSide::minus(), z) - pi * pi / 2; }, -0.99, 0);
  CHECK(std::abs(r.root - (-0.7627)) < 1e-3);
}

TEST_CASE("bracketed root rejects a bracket without a sign change") {
  CHECK_THROWS_AS(find_root_bracketed([](double x) { return x * x + 1; }, -1, 1), Error);
  try {
    find_root_bracketed([](double x) { return x * x + 1; }, -1, 1);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::no_sign_change);
  }
}

TEST_CASE("root finder is deterministic") {
  auto f = [](double x) { return std::exp(x) - 3 * x - 0.1; };
  auto a = find_root_bracketed(f, 0, 1);
  auto b = find_root_bracketed(f, 0, 1);
  CHECK(std::memcmp(&a.root, &b.root, sizeof(double)) == 0);
  auto wa = find_root<Wide50>([](const Wide50& x) { return exp(x) - 3 * x - Wide50("0.1"); }, Wide50(0), Wide50(1));
  auto wb = find_root<Wide50>([](const Wide50& x) { return exp(x) - 3 * x - Wide50("0.1"); }, Wide50(0), Wide50(1));
  CHECK(to_decimal(wa.root) == to_decimal(wb.root));
}

TEST_CASE("geometric series with certified tail") {
  PrecisionPolicy p;
  auto s = sum_with_tail_bound([](std::int64_t n) { return std::pow(0.5, double(n)); }, 1, p, RegimeHint::low_t);
  CHECK(s.value <= 1.0 + 1e-15);
  CHECK(1.0 <= s.value + s.bound.bound_value + 1e-15);
  CHECK(s.bound.bound_value <= p.target_abs_error);
}

TEST_CASE("polynomial times geometric series") {
  PrecisionPolicy p;
  auto s = sum_with_tail_bound([](std::int64_t n) { return double(n) * double(n) * std::pow(0.5, double(n)); }, 1, p,
                               RegimeHint::low_t);
  const double brute = double(oracle::brute_sum([](std::int64_t n) { return (long double)(n * n) * std::pow(0.5L, (long double)n); }, 1));
  CHECK_REL(brute, 6.0, 1e-15);
  CHECK(s.value <= 6.0 + 1e-14);
  CHECK(6.0 <= s.value + s.bound.bound_value + 1e-14);
}

TEST_CASE("gaussian summand against a brute-force sum") {
  PrecisionPolicy p;
  auto term = [](std::int64_t n) { return std::exp(-0.01 * double(n) * double(n)); };
  auto s = sum_with_tail_bound(term, 1, p, RegimeHint::high_t);
  long double brute = 0;
  for (std::int64_t n = 1; n <= 10000; ++n) brute += std::exp(-0.01L * n * n);
  CHECK(s.value <= double(brute) + 1e-13);
  CHECK(double(brute) <= s.value + s.bound.bound_value + 1e-13);
  CHECK(s.bound.kind == TailKind::gaussian_integral);
}

TEST_CASE("tail bound soundness on 1000 random instances") {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> uq(0.05, 0.97), ug(-4.0, 0.0), ua(0.1, 10.0);
  std::uniform_int_distribution<int> up(0, 3);
  PrecisionPolicy p;
  p.target_abs_error = 1e-10;
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const double amp = ua(rng);
    std::function<double(std::int64_t)> term;
    std::function<long double(std::int64_t)> term_ld;
    RegimeHint hint;
    if (i % 2 == 0) {
      const double q = uq(rng);
      const int pw = up(rng);
      term = [=](std::int64_t n) { return amp * std::pow(double(n), pw) * std::pow(q, double(n)); };
      term_ld = [=](std::int64_t n) { return (long double)amp * std::pow((long double)n, pw) * std::pow((long double)q, (long double)n); };
      hint = RegimeHint::low_t;
    } else {
      const double c = std::pow(10.0, ug(rng));
      term = [=](std::int64_t n) { return amp * std::exp(-c * double(n) * double(n)); };
      term_ld = [=](std::int64_t n) { return (long double)amp * std::exp(-(long double)c * n * n); };
      hint = RegimeHint::high_t;
    }
    const auto s = sum_with_tail_bound(term, 1, p, hint);
    const long double truth = oracle::brute_sum(term_ld, 1);
    const long double slack = 1e-14L * truth;
    const bool ok = s.value <= truth + slack && truth <= s.value + s.bound.bound_value + slack;
    if (!ok) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("gaussian tail bound") {
  const double exact = 0.5 * std::sqrt(pi) * std::erfc(10.0);
  CHECK(gaussian_tail_upper_bound(10) >= exact);
  CHECK(gaussian_tail_upper_bound(10) <= 2 * exact);
  CHECK(gaussian_tail_upper_bound(5) > gaussian_tail_upper_bound(6));
  CHECK(gaussian_tail_upper_bound(30) < 1e-300);
  for (double y : {0.25, 0.5, 1.0, 2.0, 4.0}) {
    CHECK(gaussian_tail_upper_bound(y) >= 0.5 * std::sqrt(pi) * std::erfc(y));
  }
}

TEST_CASE("gaussian moment tail bounds dominate the integrals") {
  for (double y : {1.0, 2.0, 3.5, 6.0}) {
    const double i0 = 0.5 * std::sqrt(pi) * std::erfc(y);
    const double i1 = 0.5 * y * std::exp(-y * y) + 0.5 * i0;
    const double i2 = 0.5 * y * y * y * std::exp(-y * y) + 1.5 * i1;
    CHECK(gaussian_moment_tail_bound(0, y) >= i0);
    CHECK(gaussian_moment_tail_bound(1, y) >= i1);
    CHECK(gaussian_moment_tail_bound(2, y) >= i2);
  }
}

TEST_CASE("trapezoid sum approximation") {
  SemiInfiniteIntegrand g{[](double y) { return std::exp(-y * y); }, 1.0, 0, 0.0, nullptr};
  const double approx = trapezoid_sum_approx(g, 0.1, 0.0);
  CHECK_REL(approx, -0.5 + 10 * std::sqrt(pi) / 2, 1e-12);
  double brute = 0;
  for (int n = 1; n < 1000; ++n) brute += std::exp(-0.01 * n * n);
  CHECK(std::abs(brute - approx) < 1e-3);
  const double half = trapezoid_sum_approx(g, 0.1, 0.5);
  CHECK_REL(half, 10 * std::sqrt(pi) / 2, 1e-12);
}

TEST_CASE("semi-infinite quadrature: gaussian") {
  SemiInfiniteIntegrand g{[](double y) { return std::exp(-y * y); }, 1.0, 0, 0.0, nullptr};
  auto r = quad_semi_infinite(g);
  CHECK_REL(r.value, std::sqrt(pi) / 2, 1e-13);
  CHECK(r.error < 1e-11);
}

TEST_CASE("semi-infinite quadrature: inverse quartic minus Bose kernel") {
  SemiInfiniteIntegrand g;
  g.f = [](double y) {
    const double u = y * y;
    const double u2 = u * u;
    // Bernoulli series sum_k (2k-1) B_2k / (2k)! u^(2k-2)
    if (u < 0.3)
      return 1.0 / 12 - u2 / 240 + u2 * u2 / 6048 - u2 * u2 * u2 / 172800 + 45.0 / (66 * 3628800.0) * u2 * u2 * u2 * u2 -
             11 * 691.0 / (2730 * 479001600.0) * u2 * u2 * u2 * u2 * u2;
    const double em1 = std::expm1(u);
    return 1 / (u * u) - (em1 + 1) / (em1 * em1);
  };
  g.envelope_amplitude = 1.001;
  g.envelope_power = 0;
  g.envelope_start = 3;
  g.algebraic_tail = [](double Y) { return 1 / (3 * Y * Y * Y); };
  auto r = quad_semi_infinite(g);
  CHECK_REL(r.value, oracle::bose_gap_derivative_constant(), 1e-9);
  CHECK(std::abs(r.value - 0.1842) < 1e-4);
}

TEST_CASE("semi-infinite quadrature: Fermi integral at zero") {
  SemiInfiniteIntegrand g{[](double y) { return 1 / (std::exp(y * y) + 1); }, 1.0, 0, 0.0, nullptr};
  auto r = quad_semi_infinite(g);
  const double series = oracle::fermi_integral_at_zero();
  CHECK_REL(series, 0.5 * std::sqrt(pi) * (1 - std::sqrt(2.0)) * boost::math::zeta(0.5), 1e-10);
  CHECK_REL(r.value, series, 1e-10);
}

TEST_CASE("quadrature reports a divergent integrand") {
  SemiInfiniteIntegrand g{[](double y) { return 1 / y; }, 1.0, 0, 0.0, nullptr};
  CHECK_THROWS_AS(quad_semi_infinite(g), Error);
}

TEST_CASE("precision escalation does not move results beyond their bound") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lt(-1.0, 4.0);
  for (int i = 0; i < 6; ++i) {
    const Statistics stat = i % 2 ? Statistics::fermion() : Statistics::boson();
    const double t = std::pow(10.0, lt(rng));
    PrecisionPolicy low;
    PrecisionPolicy high = low;
    high.working_digits = 2 * low.working_digits;
    high.max_digits = 150;
    const auto a = net_force(stat, 40, t, low);
    const auto b = net_force(stat, 40, t, high);
    INFO("t = " << t << " stat = " << std::string(to_string(stat)));
    CHECK(std::abs(a.delta_f - b.delta_f) <= a.delta_f_error);
  }
}
