#pragma once

#include <cstdint>

namespace pwell {

enum class StatisticsKind { boson, fermion };

/// Particle statistics. eta is +1 for Bose-Einstein and -1 for Fermi-Dirac
/// occupancy and is derived from the kind, so the two can never disagree.
struct Statistics {
  StatisticsKind kind = StatisticsKind::boson;

  static constexpr Statistics boson() { return {StatisticsKind::boson}; }
  static constexpr Statistics fermion() { return {StatisticsKind::fermion}; }

  constexpr int eta() const { return kind == StatisticsKind::boson ? 1 : -1; }
  constexpr bool is_boson() const { return kind == StatisticsKind::boson; }
  constexpr bool operator==(const Statistics&) const = default;
};

const char* to_string(Statistics stat);

enum class Side { plus, minus };

/// One half of the partitioned well.
///   plus  (W+): Neumann at the partition, levels (n - 1/2)^2, tau = 1/2, sigma = 0
///   minus (W-): Dirichlet at the partition, levels n^2,        tau = 0,   sigma = 1
struct WellSide {
  Side side = Side::plus;

  static constexpr WellSide plus() { return {Side::plus}; }
  static constexpr WellSide minus() { return {Side::minus}; }

  constexpr double tau() const { return side == Side::plus ? 0.5 : 0.0; }
  constexpr int sigma() const { return side == Side::plus ? 0 : 1; }
  constexpr bool operator==(const WellSide&) const = default;
};

const char* to_string(WellSide side);

/// Reduced level energy e_n = (n - tau)^2 for n >= 1.
double energy_level(WellSide side, std::int64_t n);

/// e_n - e_1, an exact integer for both sides: n(n-1) on W+, n^2 - 1 on W-.
constexpr std::int64_t level_offset(WellSide side, std::int64_t n) {
  return side.side == Side::plus ? n * (n - 1) : n * n - 1;
}

/// e_{n+1} - e_n: 2n on W+, 2n + 1 on W-.
constexpr std::int64_t level_step(WellSide side, std::int64_t n) {
  return side.side == Side::plus ? 2 * n : 2 * n + 1;
}

struct PhysicalConfig {
  double hbar = 1.054571817e-34;      // J s
  double mass = 9.1093837015e-31;     // kg (electron)
  double half_width_l = 1e-9;         // m
  double boltzmann_kB = 1.380649e-23; // J/K
  double spin_s = 0.0;                // non-negative half-integer

  void validate() const;
  /// Unit level energy (hbar^2 / 2m) (pi / l)^2 in joules.
  double unit_energy() const;
  /// 2s + 1
  int degeneracy() const;
};

/// F = (2s + 1) (2 E / l) f, in newtons.
double physical_force(const PhysicalConfig& cfg, double reduced_f);

/// t = k_B T / E.
double reduced_temperature(const PhysicalConfig& cfg, double kelvin_T);

/// Particle number per spin state and reduced temperature. b is stored
/// alongside t so callers never recompute it with a different rounding.
struct ThermoPoint {
  std::int64_t particles_N = 1;
  double reduced_t = 1.0;
  double b = 1.0;

  static ThermoPoint make(std::int64_t N, double t);
};

}  // namespace pwell
