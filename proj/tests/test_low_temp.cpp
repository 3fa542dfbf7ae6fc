#include <cmath>

#include "check_rel.hpp"
#include "doctest.h"
#include "pwell/exact_curve.hpp"
#include "pwell/low_temp.hpp"

using namespace pwell;

namespace {
const Statistics B = Statistics::boson();
const Statistics F = Statistics::fermion();
}  // namespace

TEST_CASE("zero-temperature forces are exact rationals") {
  const auto b = zero_t_forces(B, 100);
  CHECK(b.delta_f == Rational(75));
  CHECK(b.f_plus == Rational(25));
  const auto f = zero_t_forces(F, 100);
  CHECK(f.delta_f == Rational(5025));
  CHECK(f.f_minus == Rational(100 * 101 * 201, 6));
  const auto one = zero_t_forces(F, 1);
  CHECK(one.f_plus == Rational(1, 4));
  CHECK(one.f_minus == Rational(1));
  CHECK(one.delta_f == Rational(3, 4));
  CHECK(one.delta_f == zero_t_forces(B, 1).delta_f);
  for (std::int64_t N : {1, 7, 50, 333}) {
    CHECK(zero_t_forces(B, N).delta_f == Rational(3 * N, 4));
    CHECK(zero_t_forces(F, N).delta_f == Rational(N * (2 * N + 1), 4));
  }
}

TEST_CASE("oracle reaches the zero-temperature values") {
  for (auto stat : {B, F}) {
    for (std::int64_t N : {1, 10, 100}) {
      const double exact = to_double(zero_t_forces(stat, N).delta_f);
      INFO(std::string(to_string(stat)) << " N = " << N);
      CHECK(std::abs(net_force(stat, N, 1e-4).delta_f - exact) < 1e-8 * exact);
    }
  }
}

TEST_CASE("boson two-level force") {
  CHECK_REL(boson_two_level_delta_f(100, 1e-3), 75.0, 1e-15);
  CHECK_REL(boson_two_level_delta_f(100, 1), 75 + 3 * std::exp(-3.0) - 2 * std::exp(-2.0), 1e-15);
  CHECK(std::abs(boson_two_level_delta_f(100, 1) - 74.8787) < 1e-4);
  CHECK(std::abs(boson_two_level_delta_f(100, 0.5) - net_force(B, 100, 0.5).delta_f) < 0.05);
}

TEST_CASE("boson low-temperature alpha") {
  CHECK_REL(boson_alpha_low_t(WellSide::minus(), 100, 10), -10 + std::log(1.01), 1e-15);
  CHECK(std::abs(boson_alpha_low_t(WellSide::minus(), 100, 10) - (-9.99005)) < 1e-5);
  CHECK_REL(boson_alpha_low_t(WellSide::plus(), 1000000000, 4), -1.0, 1e-8);
  const double o = solve_alpha(B, WellSide::minus(), 100, 0.1).alpha;
  CHECK(std::abs(boson_alpha_low_t(WellSide::minus(), 100, 10) - o) < 1e-3);
}

TEST_CASE("fermion two-level alpha") {
  const double a = fermion_two_level_alpha(WellSide::minus(), 100, 0.02);
  CHECK_REL(a, -202.01, 1e-14);
  const double nN = 1 / (std::exp(a + 0.02 * 10000) + 1);
  const double nN1 = 1 / (std::exp(a + 0.02 * 10201) + 1);
  CHECK_REL(nN + nN1, 1.0, 1e-14);
  const double o = solve_alpha(F, WellSide::minus(), 100, 30).alpha;
  const double m = fermion_two_level_alpha(WellSide::minus(), 100, 1 / 30.0);
  CHECK(std::abs(m - o) / std::abs(o) < 0.01);
}

TEST_CASE("step models") {
  for (auto model : {StepModel::two_level, StepModel::semi_four_level}) {
    CHECK_REL(fermion_step_delta_f(100, 1e-3, model), 5025.0, 1e-15);
    CHECK_REL(fermion_step_delta_f(100, 17, model) - 5025, fermion_step_delta_f(200, 34, model) - 200 * 401 / 4.0, 1e-9);
    for (double t = 0.01; t < 1e4; t *= 1.3) CHECK(std::abs(fermion_step_delta_f(100, t, model) - 5025) < 2);
  }
}

TEST_CASE("semi-four-level inflection points") {
  const auto [a, b] = step_inflection_points(StepModel::semi_four_level);
  CHECK(std::abs(a - 0.239) < 1e-3);
  CHECK(std::abs(b - 0.426) < 1e-3);
}

TEST_CASE("semi-four-level curvature changes sign exactly twice on [0.1, 1]") {
  // Independent dense scan with second differences of the correction itself.
  int changes = 0;
  double prev = 0;
  const double h = 1e-4;
  for (int i = 0; i <= 9000; ++i) {
    const double u = 0.1 + 0.9 * i / 9000;
    const double d2 = (fermion_step_correction(u + h, StepModel::semi_four_level) -
                       2 * fermion_step_correction(u, StepModel::semi_four_level) +
                       fermion_step_correction(u - h, StepModel::semi_four_level)) /
                      (h * h);
    if (i > 0 && (d2 > 0) != (prev > 0)) ++changes;
    prev = d2;
  }
  CHECK(changes == 2);
}

TEST_CASE("curvature zero finder agrees with the dense scan") {
  const auto z = step_curvature_zeros(StepModel::semi_four_level, 0.1, 1.0);
  REQUIRE(z.size() >= 2);
  for (double u : z) {
    const double h = 1e-4;
    const double l = fermion_step_curvature(u - h, StepModel::semi_four_level);
    const double r = fermion_step_curvature(u + h, StepModel::semi_four_level);
    CHECK((l > 0) != (r > 0));
  }
}

TEST_CASE("level-difference law near the Fermi level") {
  for (auto side : {WellSide::plus(), WellSide::minus()}) {
    for (std::int64_t N : {10, 100}) {
      for (std::int64_t l = 1; l <= 3; ++l) {
        const double d = energy_level(side, N + l) - energy_level(side, N + 1 - l);
        CHECK(d == double((2 * l - 1) * (2 * N + (1 - 2 * side.tau()))));
      }
    }
  }
}

TEST_CASE("near-Fermi occupancy symmetry with the two-level alpha") {
  const std::int64_t N = 100;
  const double t = N / 3.0, b = 1 / t;
  for (auto side : {WellSide::plus(), WellSide::minus()}) {
    const double a = fermion_two_level_alpha(side, N, b);
    for (std::int64_t l = 1; l <= 3; ++l) {
      const double up = 1 / (std::exp(a + b * energy_level(side, N + l)) + 1);
      const double down = 1 / (std::exp(a + b * energy_level(side, N + 1 - l)) + 1);
      CHECK(std::abs(up + down - 1) < 1e-2);
    }
  }
}
