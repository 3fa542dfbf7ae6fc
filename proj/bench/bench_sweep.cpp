// Wall-clock comparison of the serial and OpenMP sweeps on the same grid.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "pwell/sweep.hpp"

int main(int argc, char** argv) {
  using clock = std::chrono::steady_clock;
  const int points = argc > 1 ? std::atoi(argv[1]) : 120;
  const std::int64_t N = argc > 2 ? std::atoll(argv[2]) : 100;
  const auto grid = pwell::make_grid(1e-2, 1e6, points, true);

  for (auto stat : {pwell::Statistics::boson(), pwell::Statistics::fermion()}) {
    const auto t0 = clock::now();
    const auto serial = pwell::sweep_curve_serial(stat, N, grid);
    const auto t1 = clock::now();
    const auto parallel = pwell::sweep_curve(stat, N, grid);
    const auto t2 = clock::now();

    bool same = serial.ok() && parallel.ok();
    for (std::size_t i = 0; same && i < grid.size(); ++i)
      same = serial.points[i]->delta_f == parallel.points[i]->delta_f;

    const double ts = std::chrono::duration<double>(t1 - t0).count();
    const double tp = std::chrono::duration<double>(t2 - t1).count();
    std::printf("%-8s N=%lld points=%d threads=%d serial=%.3fs parallel=%.3fs speedup=%.2f identical=%s\n",
                pwell::to_string(stat), static_cast<long long>(N), points, omp_get_max_threads(), ts, tp, ts / tp,
                same ? "yes" : "no");
  }
  return 0;
}
