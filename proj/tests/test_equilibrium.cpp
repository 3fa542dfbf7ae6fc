#include <cmath>

#include "check_rel.hpp"
#include "doctest.h"
#include "pwell/equilibrium.hpp"
#include "pwell/low_temp.hpp"

using namespace pwell;

namespace {
const Statistics B = Statistics::boson();
const Statistics F = Statistics::fermion();
}  // namespace

TEST_CASE("boson zero-temperature shift") {
  const auto s = shift_zero_t(B, 100);
  CHECK(std::abs(s.xi - 0.2271) < 1e-4);
  CHECK_REL(s.r_ratio, (1 + s.xi) / (1 - s.xi), 1e-14);
  CHECK(s.method == ShiftMethod::zero_t_closed_form);
  for (std::int64_t N : {1, 10, 1000}) CHECK(shift_zero_t(B, N).xi == s.xi);
}

TEST_CASE("fermion zero-temperature shift") {
  CHECK_REL(shift_zero_t(F, 100).xi, 0.0025, 0.02);
  CHECK_REL(1000 * shift_zero_t(F, 1000).xi, 0.25, 0.02);
}

TEST_CASE("finite-temperature shift approaches the zero-temperature value") {
  for (auto stat : {B, F}) {
    const auto z = shift_zero_t(stat, 100);
    const auto f = shift_finite_t(stat, 100, 1e-3);
    CHECK(std::abs(f.xi - z.xi) < 1e-3);
    CHECK(f.method == ShiftMethod::finite_t_solve);
  }
}

TEST_CASE("boson shift decreases with temperature") {
  double prev = 1;
  for (double t : {1.0, 10.0, 100.0, 1000.0, 10000.0}) {
    const auto s = shift_finite_t(B, 100, t);
    CHECK(s.xi < prev);
    CHECK(s.xi > 0);
    CHECK(std::abs(s.residual) < 1e-6);
    prev = s.xi;
  }
}

TEST_CASE("shift lies in (0, 1) with balanced forces") {
  for (auto stat : {B, F}) {
    for (double t : {0.5, 30.0, 3000.0}) {
      const auto s = shift_finite_t(stat, 40, t);
      CHECK(s.xi > 0);
      CHECK(s.xi < 1);
      CHECK(std::abs(s.residual) < 1e-6);
    }
  }
}

TEST_CASE("fermion shift turning point scales as N squared") {
  // t at which N xi(t) has fallen to half its zero-temperature value.
  auto half_t = [](std::int64_t N) {
    const double target = 0.5 * shift_zero_t(F, N).xi;
    double lo = 1e-3 * double(N * N), hi = 10.0 * double(N * N);
    for (int i = 0; i < 40; ++i) {
      const double mid = std::sqrt(lo * hi);
      if (shift_finite_t(F, N, mid).xi > target)
        lo = mid;
      else
        hi = mid;
      if (hi / lo < 1.001) break;
    }
    return std::sqrt(lo * hi);
  };
  const double r50 = half_t(50) / 2500.0;
  const double r100 = half_t(100) / 1e4;
  const double r200 = half_t(200) / 4e4;
  CHECK_REL(r50, r100, 0.1);
  CHECK_REL(r200, r100, 0.1);
}

TEST_CASE("zero-temperature transfer") {
  const auto b = transfer_zero_t(B, 100);
  CHECK(b.N_plus == 160.0);
  CHECK(b.N_minus == 40.0);
  CHECK(b.N_plus + b.N_minus == 200.0);
  const auto f = transfer_zero_t(F, 100);
  CHECK_REL(f.N_plus / f.N_minus, 1.005, 1e-3);
  CHECK_REL(f.N_plus + f.N_minus, 200.0, 1e-15);
  const auto big = transfer_zero_t(F, 5000);
  CHECK_REL(big.N_plus / big.N_minus - 1, 1.0 / 10000, 0.01);
}

TEST_CASE("moving one fermion reverses the net force") {
  const std::int64_t N = 100;
  const auto before = zero_t_forces(F, N).delta_f;
  const auto after = zero_t_side_force(F, WellSide::minus(), N - 1) - zero_t_side_force(F, WellSide::plus(), N + 1);
  CHECK(before > 0);
  CHECK(after < 0);
}
