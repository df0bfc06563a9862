#pragma once

#include <cmath>

#include "carousel/scalar_kernel.hpp"

namespace carousel {

// Two-sided bounds on the oscillation period, from the parabolic domination of
// Q_H between (4-sqrt2)/2 and 8/3 times (u - u_-)(u_+ - u).
inline const double kPeriodLowerBound = kPi * std::sqrt(1.5);
inline const double kPeriodUpperBound = 2.0 * kPi / std::sqrt((4.0 - std::sqrt(2.0)) / 2.0);

inline const double kParabolaUpperCoeff = 8.0 / 3.0;
inline const double kParabolaLowerCoeff = (4.0 - std::sqrt(2.0)) / 2.0;
// Q_H'' never drops below -16/3 between the turning points.
inline const double kCurvatureFloor = -16.0 / 3.0;

// Period of the linearized oscillation about the regular state, 4 pi / 3
// (Q_H'' at the double root is -9/2, giving angular frequency 3/2).
inline const double kDegeneratePeriod = 4.0 * kPi / 3.0;

struct TurningPoints {
    double u_minus = 0.0;  // in (pi/2, 2pi/3)
    double u_plus = 0.0;   // in (2pi/3, 3pi/4)
    double residual = 0.0; // max |F(u_pm) - H|
};

// Roots of F(u) = H bracketed on the two monotone branches around 2pi/3.
// Throws OutOfEnergyRange unless kOrbitEnergyMin < H < kOrbitEnergyMax.
TurningPoints turning_points(EnergyLevel h);

struct PeriodResult {
    EnergyLevel h = 0.0;
    TurningPoints turning;
    double t = 0.0;                // period, arc-length units
    double quadrature_error = 0.0; // last node-doubling difference
    int nodes = 0;
    bool degenerate = false;       // reported via the linearized value
};

// T(H) = 2 * integral du / sqrt(Q_H(u)) between the turning points, evaluated
// after u = c + rho sin(theta), which removes the endpoint singularity.
// Midpoint rule with node doubling 64..65536, relative tolerance 1e-10.
// Energies within 1e-9 of the window top are reported as degenerate with the
// linearized period.
PeriodResult period(EnergyLevel h);

struct BoundAudit {
    EnergyLevel h = 0.0;
    int grid = 0;
    double lower_margin = 0.0;     // min of Q_H - lower parabola
    double upper_margin = 0.0;     // min of upper parabola - Q_H
    double curvature_margin = 0.0; // min of Q_H'' - (-16/3)
    bool pass = false;
};

// Grid audit of both parabolic bounds and the second-derivative floor on
// [u_-, u_+]. pass requires every margin >= -1e-12.
BoundAudit audit_parabolic_bounds(EnergyLevel h, int grid_points);

// r = sqrt(1 - 2 H cot u). Throws NegativeRadicand when the radicand is
// negative (inconsistent pair; cannot happen for H > 0 and u in (pi/2, pi)).
double radius(EnergyLevel h, double u);

// Same radius through the vertex form r^2 = 3 - 2 cos x - 2 cos y + 2 cos(x+y);
// independent algebraic route kept for cross-checks.
double radius_from_angles(const AngleState& s);

struct RadiusExtrema {
    double r_min = 0.0;
    double r_max = 0.0; // equals 1 - 2 cos u_+(H), strictly below 1 + sqrt(2)
};

RadiusExtrema radius_extrema(EnergyLevel h);

}  // namespace carousel
