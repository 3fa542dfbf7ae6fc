#include "check_rel.hpp"
#include "doctest.h"
#include "pwell/core_model.hpp"
#include "pwell/errors.hpp"

using namespace pwell;

TEST_CASE("energy levels follow the two square laws") {
  CHECK(energy_level(WellSide::plus(), 1) == 0.25);
  CHECK(energy_level(WellSide::minus(), 1) == 1.0);
  CHECK(energy_level(WellSide::plus(), 3) == 6.25);
}

TEST_CASE("side parameters") {
  CHECK(WellSide::plus().tau() == 0.5);
  CHECK(WellSide::plus().sigma() == 0);
  CHECK(WellSide::minus().tau() == 0.0);
  CHECK(WellSide::minus().sigma() == 1);
  CHECK(Statistics::boson().eta() == 1);
  CHECK(Statistics::fermion().eta() == -1);
}

TEST_CASE("level difference between sides is n - 1/4 up to n = 1e6") {
  for (std::int64_t n = 1; n <= 1000000; n += (n < 1000 ? 1 : 997)) {
    const double d = energy_level(WellSide::minus(), n) - energy_level(WellSide::plus(), n);
    REQUIRE(d == double(n) - 0.25);
  }
}

TEST_CASE("levels are strictly increasing with linearly growing spacing") {
  for (auto side : {WellSide::plus(), WellSide::minus()}) {
    for (std::int64_t n = 1; n < 2000; ++n) {
      const double step = energy_level(side, n + 1) - energy_level(side, n);
      REQUIRE(step > 0);
      REQUIRE(step == double(level_step(side, n)));
      REQUIRE(double(level_offset(side, n)) == energy_level(side, n) - energy_level(side, 1));
    }
    const double s1 = energy_level(side, 2) - energy_level(side, 1);
    const double s2 = energy_level(side, 3) - energy_level(side, 2);
    const double s3 = energy_level(side, 4) - energy_level(side, 3);
    CHECK(s2 - s1 == 2.0);
    CHECK(s3 - s2 == 2.0);
  }
}

TEST_CASE("physical force scaling") {
  PhysicalConfig cfg;
  CHECK(physical_force(cfg, 0.0) == 0.0);

  // hbar = 1, l = 2, m = pi^2 / 8 gives a unit energy of 1 and 2E/l = 1.
  PhysicalConfig unit;
  unit.hbar = 1;
  unit.half_width_l = 2;
  unit.mass = 9.8696044010893586188 / 8;
  CHECK_REL(unit.unit_energy(), 1.0, 1e-14);
  CHECK_REL(physical_force(unit, 75), 75.0, 1e-14);

  // Electron in a 1 nm half well, constants evaluated by hand.
  CHECK_REL(cfg.unit_energy(), 6.024667394854711e-20, 1e-12);
  CHECK_REL(physical_force(cfg, 75), 9.037001092282066e-09, 1e-12);

  PhysicalConfig spin = cfg;
  spin.spin_s = 0.5;
  CHECK(spin.degeneracy() == 2);
  CHECK_REL(physical_force(spin, 75), 2 * 9.037001092282066e-09, 1e-12);
}

TEST_CASE("reduced temperature") {
  PhysicalConfig cfg;
  const double T1 = cfg.unit_energy() / cfg.boltzmann_kB;
  CHECK_REL(reduced_temperature(cfg, T1), 1.0, 1e-14);
  CHECK_REL(reduced_temperature(cfg, 2 * T1), 2.0, 1e-14);
  CHECK_REL(reduced_temperature(cfg, 300), 0.06874980357483927, 1e-12);
}

TEST_CASE("invalid physical configurations are rejected") {
  PhysicalConfig cfg;
  cfg.spin_s = -0.5;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg.spin_s = 0.25;
  CHECK_THROWS_AS(cfg.validate(), Error);
  PhysicalConfig neg;
  neg.mass = -1;
  CHECK_THROWS_AS(physical_force(neg, 1.0), Error);
  CHECK_THROWS_AS(reduced_temperature(PhysicalConfig{}, -3.0), Error);
}

TEST_CASE("thermo point stores b = 1/t") {
  const auto p = ThermoPoint::make(100, 4.0);
  CHECK(p.particles_N == 100);
  CHECK(p.reduced_t == 4.0);
  CHECK(p.b == 0.25);
  CHECK_THROWS_AS(ThermoPoint::make(0, 1.0), Error);
  CHECK_THROWS_AS(ThermoPoint::make(1, 0.0), Error);
}
