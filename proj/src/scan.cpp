#include "carousel/scan.hpp"

#include <exception>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace carousel::scan {

std::vector<double> energy_grid(double lo, double hi, int count) {
    if (count < 1 || !(lo <= hi)) {
        throw std::invalid_argument("energy_grid: need lo <= hi and count >= 1");
    }
    std::vector<double> grid(count);
    if (count == 1) {
        grid[0] = lo;
        return grid;
    }
    for (int i = 0; i < count; ++i) {
        grid[i] = lo + (hi - lo) * i / (count - 1);
    }
    return grid;
}

PeriodScanRow period_scan_row(EnergyLevel h, int audit_grid_points) {
    const PeriodResult pr = period(h);
    const RadiusExtrema re = radius_extrema(h);
    const BoundAudit audit = audit_parabolic_bounds(h, audit_grid_points);
    return {h,        pr.turning.u_minus, pr.turning.u_plus,  pr.t, pr.quadrature_error,
            re.r_min, re.r_max,           audit.lower_margin, audit.upper_margin};
}

namespace {

// Runs rows[i] = fn(grid[i]) either serially or under OpenMP. Exceptions are
// captured per row and the lowest-index one is rethrown, so both paths fail
// identically.
template <typename Row, typename Fn>
std::vector<Row> map_grid(std::span<const double> grid, bool parallel, Fn fn) {
    std::vector<Row> rows(grid.size());
    std::vector<std::exception_ptr> errors(grid.size());
    const long n = static_cast<long>(grid.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) {
            try {
                rows[i] = fn(grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        for (long i = 0; i < n; ++i) {
            try {
                rows[i] = fn(grid[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }
    for (const auto& err : errors) {
        if (err) std::rethrow_exception(err);
    }
    return rows;
}

}  // namespace

std::vector<PeriodScanRow> period_scan_serial(std::span<const double> h_grid,
                                              int audit_grid_points) {
    return map_grid<PeriodScanRow>(h_grid, false,
                                   [&](double h) { return period_scan_row(h, audit_grid_points); });
}

std::vector<PeriodScanRow> period_scan_parallel(std::span<const double> h_grid,
                                                int audit_grid_points) {
    return map_grid<PeriodScanRow>(h_grid, true,
                                   [&](double h) { return period_scan_row(h, audit_grid_points); });
}

std::vector<BoundAudit> bound_audit_scan_serial(std::span<const double> h_grid, int grid_points) {
    return map_grid<BoundAudit>(h_grid, false,
                                [&](double h) { return audit_parabolic_bounds(h, grid_points); });
}

std::vector<BoundAudit> bound_audit_scan_parallel(std::span<const double> h_grid,
                                                  int grid_points) {
    return map_grid<BoundAudit>(h_grid, true,
                                [&](double h) { return audit_parabolic_bounds(h, grid_points); });
}

std::vector<ClosureRow> closure_scan_serial(std::span<const double> h_grid, double step) {
    return map_grid<ClosureRow>(h_grid, false, [&](double h) { return closure_row(h, step); });
}

std::vector<ClosureRow> closure_scan_parallel(std::span<const double> h_grid, double step) {
    return map_grid<ClosureRow>(h_grid, true, [&](double h) { return closure_row(h, step); });
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

}  // namespace carousel::scan
