#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "pwell/errors.hpp"
#include "pwell/exact_curve.hpp"

namespace pwell {

struct PointFailure {
  std::size_t index = 0;
  double t = 0;
  ErrorKind kind = ErrorKind::non_convergent;
  std::string message;
};

struct SweepResult {
  std::vector<std::optional<CurvePoint>> points;  // grid order; empty where the point failed
  std::vector<PointFailure> failures;             // sorted by index

  bool ok() const { return failures.empty(); }
};

/// Evaluates net_force on every grid point with OpenMP. jobs <= 0 uses the
/// runtime default thread count. A failing point does not stop the others.
SweepResult sweep_curve(Statistics stat, std::int64_t N, const std::vector<double>& grid,
                        const PrecisionPolicy& policy = {}, int jobs = 0);

/// Single-threaded reference with identical results.
SweepResult sweep_curve_serial(Statistics stat, std::int64_t N, const std::vector<double>& grid,
                               const PrecisionPolicy& policy = {});

/// Log- or linear-spaced grid from t_min to t_max inclusive.
std::vector<double> make_grid(double t_min, double t_max, int points, bool log_spacing);

}  // namespace pwell
