// Acceptance suite: every headline property of the carousel laboratory, one
// pass/fail line per criterion. Exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <vector>

#include "carousel/boundary_tracer.hpp"
#include "carousel/hexagon_flow.hpp"
#include "carousel/period_engine.hpp"
#include "carousel/polygon_lab.hpp"
#include "carousel/rigidity_auditor.hpp"
#include "carousel/scalar_kernel.hpp"
#include "carousel/scan.hpp"

using namespace carousel;

namespace {

int failures = 0;

void record(const char* id, bool pass, const char* detail_fmt, ...) {
    char detail[256];
    va_list args;
    va_start(args, detail_fmt);
    std::vsnprintf(detail, sizeof(detail), detail_fmt, args);
    va_end(args);
    std::printf("[%s] %-60s %s\n", pass ? "PASS" : "FAIL", id, detail);
    if (!pass) ++failures;
}

AngleState random_region_state(std::mt19937& rng, double margin = 1e-3) {
    std::uniform_real_distribution<double> dist(kPi / 2.0 + margin, kPi - margin);
    while (true) {
        const AngleState s{dist(rng), dist(rng)};
        if (s.x + s.y < 1.5 * kPi - margin) return s;
    }
}

void c01_constants() {
    const double top = hamiltonian(kRegularState);
    const double edge = hamiltonian({0.75 * kPi, kPi / 2.0});
    const double err = std::max(std::abs(top - 1.5 * std::sqrt(3.0)),
                                std::abs(edge - (1.0 + std::sqrt(2.0))));
    record("C01 energy constants at the cited states", err <= 1e-12, "(max err=%.2e, thr=1e-12)",
           err);
}

void c02_hamiltonian_structure() {
    std::mt19937 rng(101);
    const double step = 1e-6;
    double worst_field = 0.0;
    double worst_div = 0.0;
    for (int i = 0; i < 100; ++i) {
        const AngleState s = random_region_state(rng);
        const StateVelocity v = vector_field(s);
        const double dh_dx =
            (hamiltonian({s.x + step, s.y}) - hamiltonian({s.x - step, s.y})) / (2.0 * step);
        const double dh_dy =
            (hamiltonian({s.x, s.y + step}) - hamiltonian({s.x, s.y - step})) / (2.0 * step);
        worst_field = std::max({worst_field, std::abs(v.dx + dh_dy), std::abs(v.dy - dh_dx)});
        const double ddx =
            (vector_field({s.x + step, s.y}).dx - vector_field({s.x - step, s.y}).dx) / (2.0 * step);
        const double ddy =
            (vector_field({s.x, s.y + step}).dy - vector_field({s.x, s.y - step}).dy) / (2.0 * step);
        worst_div = std::max(worst_div, std::abs(ddx + ddy));
    }
    record("C02 field equals rotated gradient; divergence free",
           worst_field <= 1e-6 && worst_div <= 1e-6, "(field=%.2e, div=%.2e, thr=1e-6)",
           worst_field, worst_div);
}

void c03_conservation() {
    const auto start = std::chrono::steady_clock::now();
    const Orbit orbit = integrate_orbit({2.0, 2.2}, 20.0, {});
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    record("C03 energy drift over duration 20 at step 1e-3", orbit.h_max_drift <= 1e-8,
           "(drift=%.2e, thr=1e-8, %.0f ms)", orbit.h_max_drift, ms);
}

void c04_turning_points() {
    bool pass = true;
    double worst_residual = 0.0;
    const auto grid = scan::energy_grid(kOrbitEnergyMin + 1e-6, kOrbitEnergyMax - 1e-6, 200);
    for (double h : grid) {
        const TurningPoints tp = turning_points(h);
        pass = pass && tp.u_minus > kPi / 2.0 && tp.u_minus < 2.0 * kPi / 3.0 &&
               tp.u_plus > 2.0 * kPi / 3.0 && tp.u_plus < 0.75 * kPi && tp.residual <= 1e-12;
        worst_residual = std::max(worst_residual, tp.residual);
    }
    record("C04 turning points bracketed for 200 energies", pass,
           "(max residual=%.2e, thr=1e-12)", worst_residual);
}

void c05_period_bounds() {
    const auto start = std::chrono::steady_clock::now();
    const auto grid = scan::energy_grid(kOrbitEnergyMin + 1e-6, kOrbitEnergyMax - 1e-6, 200);
    double min_low = 1e9;
    double min_high = 1e9;
    for (double h : grid) {
        const double t = period(h).t;
        min_low = std::min(min_low, t - kPeriodLowerBound);
        min_high = std::min(min_high, kPeriodUpperBound - t);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    record("C05 period inside the two-sided window for 200 energies",
           min_low > 0.0 && min_high > 0.0, "(margins %.3e / %.3e, %.0f ms)", min_low, min_high,
           ms);
}

void c06_oracle_equivalence() {
    const auto grid = scan::energy_grid(kOrbitEnergyMin + 1e-3, kOrbitEnergyMax - 1e-3, 20);
    double worst = 0.0;
    for (double h : grid) {
        const TurningPoints tp = turning_points(h);
        const double t_ode = orbit_period({tp.u_minus, tp.u_minus});
        const double t_quad = period(h).t;
        worst = std::max(worst, std::abs(t_quad - t_ode) / t_quad);
    }
    record("C06 quadrature agrees with the flow return time (20 energies)", worst <= 1e-6,
           "(worst rel=%.2e, thr=1e-6)", worst);
}

void c07_degenerate_limit() {
    const double t = period(kOrbitEnergyMax - 1e-6).t;
    const double err = std::abs(t - 4.0 * kPi / 3.0);
    record("C07 near-degenerate period matches the linearized value", err <= 1e-3,
           "(|T-4pi/3|=%.2e, thr=1e-3)", err);
}

void c08_appendix_audits() {
    const auto grid = scan::energy_grid(kOrbitEnergyMin + 1e-6, kOrbitEnergyMax - 1e-6, 50);
    const auto audits = scan::bound_audit_scan_serial(grid, 1001);
    double lower = 1e9;
    double upper = 1e9;
    double curvature = 1e9;
    bool pass = true;
    for (const BoundAudit& audit : audits) {
        pass = pass && audit.pass;
        lower = std::min(lower, audit.lower_margin);
        upper = std::min(upper, audit.upper_margin);
        curvature = std::min(curvature, audit.curvature_margin);
    }
    record("C08 parabolic bounds and curvature floor on 50x1001 grids",
           pass && lower >= -1e-12 && upper >= -1e-12 && curvature >= -1e-12,
           "(margins %.1e / %.1e / %.1e, thr=-1e-12)", lower, upper, curvature);
}

void c09_radius() {
    double worst_residual = 0.0;
    for (double h : {2.45, 2.5, 2.55}) {
        const TurningPoints tp = turning_points(h);
        const VertexFlow flow = trace({tp.u_minus, tp.u_minus}, 1.7 * period(h).t, 1e-3);
        worst_residual = std::max(worst_residual, flow.radius_residual);
    }
    bool max_ok = true;
    for (double h : scan::energy_grid(kOrbitEnergyMin + 1e-6, kOrbitEnergyMax - 1e-6, 200)) {
        max_ok = max_ok && radius_extrema(h).r_max < 1.0 + std::sqrt(2.0);
    }
    const double r_top = radius(kOrbitEnergyMax, 2.0 * kPi / 3.0);
    record("C09 vertex radii track 1 - 2H cot u; r_max below 1+sqrt2",
           worst_residual <= 1e-6 && max_ok && std::abs(r_top - 2.0) <= 1e-12,
           "(residual=%.2e thr=1e-6, r(top)=%.12f)", worst_residual, r_top);
}

void c10_circle_reconstruction() {
    const VertexFlow flow = trace(kRegularState, 2.2, 1e-3);
    double radius_err = 0.0;
    for (const TraceSample& sample : flow.samples) {
        for (const Vec2& v : sample.v) {
            radius_err = std::max(radius_err, std::abs(v.norm() - 2.0));
        }
    }
    const double perimeter = 6.0 * flow.slot_time;
    const PerimeterBounds bounds = perimeter_bounds();
    const bool pass = flow.closure_defect <= 1e-8 && radius_err <= 1e-6 &&
                      std::abs(perimeter - 4.0 * kPi) <= 1e-6 && perimeter > bounds.low &&
                      perimeter < bounds.high;
    record("C10 fixed-point trace closes onto the circle of radius 2", pass,
           "(defect=%.2e thr=1e-8, |P-4pi|=%.2e thr=1e-6)", flow.closure_defect,
           std::abs(perimeter - 4.0 * kPi));
}

void c11_proof_chain() {
    const auto rows = feasibility_scan(10, 10);
    bool none_feasible = true;
    bool reasons_ok = true;
    for (const FeasibilityRow& row : rows) {
        none_feasible = none_feasible && !row.feasible;
        if (row.k == 1 && row.m == 1) {
            reasons_ok = reasons_ok && row.required_low >= 6.0 && row.allowed_high < 6.0;
        } else {
            reasons_ok = reasons_ok && row.required_high < kPeriodLowerBound;
        }
    }
    record("C11 feasibility scan over k,m <= 10 is empty", none_feasible && reasons_ok,
           "(rows=%zu, (1,1) needs T>=6 vs <%.4f; km>=2 below %.4f)", rows.size(),
           kPeriodUpperBound, kPeriodLowerBound);
}

void c12_hexagon_lemmas() {
    std::mt19937 rng(2026);
    double defect = 0.0;
    double psi_err = 0.0;
    double area_err = 0.0;
    for (int trial = 0; trial < 25; ++trial) {
        const AngleState s = random_region_state(rng, 0.02);
        const double z = 2.0 * kPi - s.x - s.y;
        const std::array<double, 6> x{s.x, s.y, z, s.x, s.y, z};
        const Hexagon hex = hexagon_from_angles(x);
        defect = std::max(defect, central_symmetry_defect(hex));
        const InteriorTriangle tri = interior_triangle(x);
        psi_err = std::max({psi_err, std::abs(tri.psi[0] - 0.5 * x[4]),
                            std::abs(tri.psi[1] - 0.5 * x[0]), std::abs(tri.psi[2] - 0.5 * x[2])});
        area_err = std::max(area_err, std::abs(hex.area() - 4.0 * hamiltonian(s)));
    }
    record("C12 symmetric hexagons: center, interior triangle, quarter area",
           defect <= 1e-9 && psi_err <= 1e-10 && area_err <= 1e-9,
           "(defect=%.1e thr=1e-9, psi=%.1e thr=1e-10, area=%.1e thr=1e-9)", defect, psi_err,
           area_err);
}

void c13_carousel_diagnostics() {
    const Circle circle(2.0);
    double circle_defect = 0.0;
    for (int n = 3; n <= 8; ++n) {
        circle_defect = std::max(circle_defect, carousel_defect(circle, n, 64));
    }
    const Ellipse ellipse(2.0, 1.0);
    const double ellipse_defect = carousel_defect(ellipse, 6, 64);
    const double parallel_defect = midpoint_parallel_defect(circle, 6, 0.0, 1e-5);
    record("C13 carousel diagnostics separate circle from ellipse",
           circle_defect <= 1e-10 && ellipse_defect > 1e-3 && parallel_defect <= 1e-6,
           "(circle=%.1e thr=1e-10, ellipse=%.1e, parallel=%.1e thr=1e-6)", circle_defect,
           ellipse_defect, parallel_defect);
}

}  // namespace

int main() {
    c01_constants();
    c02_hamiltonian_structure();
    c03_conservation();
    c04_turning_points();
    c05_period_bounds();
    c06_oracle_equivalence();
    c07_degenerate_limit();
    c08_appendix_audits();
    c09_radius();
    c10_circle_reconstruction();
    c11_proof_chain();
    c12_hexagon_lemmas();
    c13_carousel_diagnostics();
    std::printf("%s: %d criterion failure(s)\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures;
}
