#pragma once

#include <array>
#include <span>
#include <vector>

#include "carousel/geometry.hpp"
#include "carousel/hexagon_flow.hpp"
#include "carousel/polygon_lab.hpp"

namespace carousel {

struct TraceSample {
    double t = 0.0;
    AngleState state;
    std::array<Vec2, 6> v{};
};

struct VertexFlow {
    std::vector<TraceSample> samples;
    EnergyLevel h_reference = 0.0;
    // First recurrence time of the angle state (the reduced period; the slot
    // time 2pi/3 of the circular trace at the fixed point).
    double return_time = 0.0;
    // Distance from v1(return_time) to the nearest initial vertex slot.
    double closure_defect = 0.0;
    // Distance from v1(return_time) to v2(0) specifically.
    double next_slot_defect = 0.0;
    // Time at which v1 passes closest to v2(0); 6x this estimates the perimeter
    // swept by the full vertex set when the trace closes.
    double slot_time = 0.0;
    // max over samples and vertices of | |v_i|^2 - (1 - 2 H cot u_class) |
    double radius_residual = 0.0;
    double max_side_error = 0.0;
    double max_speed_error = 0.0;
    double max_symmetry_error = 0.0;
    double max_angle_error = 0.0;
    int tangent_sign = -1;
};

// Centrally symmetric hexagon with angle sequence (x, y, 2pi-x-y) repeated,
// side 2, centered at the origin. Throws OutOfRegion outside the region.
Hexagon initial_hexagon(const AngleState& s);

// Unit tangent at each vertex: the outgoing edge direction rotated outward by
// the edge's tangent-chord angle. The rotation sign is fixed by requiring the
// incoming-edge consistency check at every vertex; throws InconsistentAngles
// if neither sign passes.
std::array<Vec2, 6> tangent_directions(const Hexagon& h, const TripleAngles& a);

// Co-integrates the angle state and the six unit-speed vertices as one RK4
// system, then measures closure against the initial vertex slots at the first
// angle-state recurrence. Throws NoReturn when the state does not recur within
// `duration`.
VertexFlow trace(const AngleState& s0, double duration, double step = 1e-3);

struct ClosureRow {
    EnergyLevel h = 0.0;
    double closure_defect = 0.0;
    double radius_residual = 0.0;
};

// One closure-scan row: starts on the section (u_-(H), v = 0), traces one
// recurrence. Energies within 1e-9 of the window top use the fixed point.
ClosureRow closure_row(EnergyLevel h, double step = 1e-3);

// Serial reference scan over an energy grid (see scan.hpp for the parallel kernel).
std::vector<ClosureRow> closure_scan(std::span<const double> h_grid, double step = 1e-3);

}  // namespace carousel
