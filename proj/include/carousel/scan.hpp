#pragma once

#include <span>
#include <vector>

#include "carousel/boundary_tracer.hpp"
#include "carousel/period_engine.hpp"

namespace carousel::scan {

// One period-scan row, matching the CSV column order
// H,u_minus,u_plus,T,quadrature_error,r_min,r_max,lower_margin,upper_margin.
struct PeriodScanRow {
    EnergyLevel h = 0.0;
    double u_minus = 0.0;
    double u_plus = 0.0;
    double t = 0.0;
    double quadrature_error = 0.0;
    double r_min = 0.0;
    double r_max = 0.0;
    double lower_margin = 0.0;
    double upper_margin = 0.0;
};

// Inclusive linspace; count == 1 yields {lo}.
std::vector<double> energy_grid(double lo, double hi, int count);

PeriodScanRow period_scan_row(EnergyLevel h, int audit_grid_points);

// Serial reference kernels. Grid points are independent pure computations.
std::vector<PeriodScanRow> period_scan_serial(std::span<const double> h_grid,
                                              int audit_grid_points);
std::vector<BoundAudit> bound_audit_scan_serial(std::span<const double> h_grid, int grid_points);
std::vector<ClosureRow> closure_scan_serial(std::span<const double> h_grid, double step);

// OpenMP kernels; output is index-addressed, so rows are bit-identical to the
// serial reference regardless of scheduling.
std::vector<PeriodScanRow> period_scan_parallel(std::span<const double> h_grid,
                                                int audit_grid_points);
std::vector<BoundAudit> bound_audit_scan_parallel(std::span<const double> h_grid,
                                                  int grid_points);
std::vector<ClosureRow> closure_scan_parallel(std::span<const double> h_grid, double step);

int max_threads();
void set_threads(int n);

}  // namespace carousel::scan
