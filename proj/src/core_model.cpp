#include "pwell/core_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "pwell/errors.hpp"

namespace pwell {

const char* to_string(Statistics stat) { return stat.is_boson() ? "boson" : "fermion"; }

const char* to_string(WellSide side) { return side.side == Side::plus ? "plus" : "minus"; }

double energy_level(WellSide side, std::int64_t n) {
  require(n >= 1, "energy_level: level index must be >= 1, got " + std::to_string(n));
  const double shifted = static_cast<double>(n) - side.tau();
  return shifted * shifted;
}

void PhysicalConfig::validate() const {
  require(std::isfinite(hbar) && hbar > 0, "PhysicalConfig: hbar must be positive");
  require(std::isfinite(mass) && mass > 0, "PhysicalConfig: mass must be positive");
  require(std::isfinite(half_width_l) && half_width_l > 0, "PhysicalConfig: half width must be positive");
  require(std::isfinite(boltzmann_kB) && boltzmann_kB > 0, "PhysicalConfig: k_B must be positive");
  const double twice = 2.0 * spin_s;
  require(spin_s >= 0 && std::abs(twice - std::round(twice)) < 1e-12,
          "PhysicalConfig: spin must be a non-negative half-integer");
  const double e = unit_energy();
  require(std::isfinite(e) && e > 0, "PhysicalConfig: unit energy is not positive and finite");
}

double PhysicalConfig::unit_energy() const {
  const double k = std::numbers::pi / half_width_l;
  return hbar * hbar / (2.0 * mass) * k * k;
}

int PhysicalConfig::degeneracy() const { return static_cast<int>(std::lround(2.0 * spin_s)) + 1; }

double physical_force(const PhysicalConfig& cfg, double reduced_f) {
  cfg.validate();
  return cfg.degeneracy() * (2.0 * cfg.unit_energy() / cfg.half_width_l) * reduced_f;
}

double reduced_temperature(const PhysicalConfig& cfg, double kelvin_T) {
  cfg.validate();
  require(std::isfinite(kelvin_T) && kelvin_T > 0, "reduced_temperature: T must be positive");
  return cfg.boltzmann_kB * kelvin_T / cfg.unit_energy();
}

ThermoPoint ThermoPoint::make(std::int64_t N, double t) {
  require(N >= 1, "ThermoPoint: N must be >= 1");
  require(std::isfinite(t) && t > 0, "ThermoPoint: t must be positive");
  return {N, t, 1.0 / t};
}

}  // namespace pwell
