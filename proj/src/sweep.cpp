#include "pwell/sweep.hpp"

#include <cmath>
#include <omp.h>

namespace pwell {

namespace {

void check_grid(const std::vector<double>& grid) {
  require(!grid.empty(), "sweep grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require(std::isfinite(grid[i]) && grid[i] > 0, "sweep grid entries must be positive");
    if (i > 0) require(grid[i] > grid[i - 1], "sweep grid must be strictly increasing");
  }
}

void evaluate_point(Statistics stat, std::int64_t N, const std::vector<double>& grid, const PrecisionPolicy& policy,
                    std::size_t i, std::optional<CurvePoint>& slot, std::optional<PointFailure>& failure) {
  try {
    slot = net_force(stat, N, grid[i], policy);
  } catch (const Error& e) {
    failure = PointFailure{i, grid[i], e.kind(), e.what()};
  } catch (const std::exception& e) {
    failure = PointFailure{i, grid[i], ErrorKind::non_convergent, e.what()};
  }
}

SweepResult collect(std::vector<std::optional<CurvePoint>> points, std::vector<std::optional<PointFailure>> fails) {
  SweepResult out;
  out.points = std::move(points);
  for (auto& f : fails)
    if (f) out.failures.push_back(std::move(*f));
  return out;
}

}  // namespace

SweepResult sweep_curve(Statistics stat, std::int64_t N, const std::vector<double>& grid,
                        const PrecisionPolicy& policy, int jobs) {
  check_grid(grid);
  policy.validate();
  const auto n = static_cast<std::int64_t>(grid.size());
  std::vector<std::optional<CurvePoint>> points(grid.size());
  std::vector<std::optional<PointFailure>> fails(grid.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    evaluate_point(stat, N, grid, policy, static_cast<std::size_t>(i), points[i], fails[i]);
  }
  return collect(std::move(points), std::move(fails));
}

SweepResult sweep_curve_serial(Statistics stat, std::int64_t N, const std::vector<double>& grid,
                               const PrecisionPolicy& policy) {
  check_grid(grid);
  policy.validate();
  std::vector<std::optional<CurvePoint>> points(grid.size());
  std::vector<std::optional<PointFailure>> fails(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) evaluate_point(stat, N, grid, policy, i, points[i], fails[i]);
  return collect(std::move(points), std::move(fails));
}

std::vector<double> make_grid(double t_min, double t_max, int points, bool log_spacing) {
  require(std::isfinite(t_min) && std::isfinite(t_max) && t_min > 0, "grid bounds must be positive");
  require(points >= 1, "grid needs at least one point");
  require(points == 1 ? t_min <= t_max : t_min < t_max, "grid needs t_min < t_max");
  std::vector<double> g(static_cast<std::size_t>(points));
  if (points == 1) {
    g[0] = t_min;
    return g;
  }
  for (int i = 0; i < points; ++i) {
    const double u = double(i) / (points - 1);
    g[i] = log_spacing ? t_min * std::pow(t_max / t_min, u) : t_min + (t_max - t_min) * u;
  }
  g.back() = t_max;
  return g;
}

}  // namespace pwell
