#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace carousel {

inline constexpr double kPi = std::numbers::pi;

// Pair of hexagon interior angles driving the reduced flow. Dynamical states
// live in the open region pi/2 < x, pi/2 < y, x + y < 3pi/2.
struct AngleState {
    double x = 0.0;
    double y = 0.0;
};

// u = (x+y)/2, v = (x-y)/2. On admissible states u is in (pi/2, pi) and |v| < pi/4.
struct SymmetricCoords {
    double u = 0.0;
    double v = 0.0;
};

// Conserved value of the reduced system; equals one quarter of the inscribed
// hexagon area (side length 2).
using EnergyLevel = double;

// Closed-orbit energy window: the boundary maximum 1 + sqrt(2) of H on the
// admissible region, and the interior maximum 3*sqrt(3)/2 at the regular state.
inline const double kOrbitEnergyMin = 1.0 + std::sqrt(2.0);
inline const double kOrbitEnergyMax = 1.5 * std::sqrt(3.0);

// Unique critical point of the conserved quantity: the regular hexagon.
inline const AngleState kRegularState{2.0 * kPi / 3.0, 2.0 * kPi / 3.0};

// H(x, y) = sin x + sin y - sin(x + y)
EnergyLevel hamiltonian(const AngleState& s);

// (dH/dx, dH/dy)
std::array<double, 2> hamiltonian_gradient(const AngleState& s);

struct Hessian {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    double det() const { return xx * yy - xy * xy; }
    bool negative_definite() const { return xx < 0.0 && det() > 0.0; }
};

// [[-sin x + sin(x+y), sin(x+y)], [sin(x+y), -sin y + sin(x+y)]]
Hessian hamiltonian_hessian(const AngleState& s);

// F(u) = 2 sin u - sin 2u; increasing on (pi/2, 2pi/3), decreasing beyond.
double f_profile(double u);

// F(u) - H. Near the window top both terms are ~2.598 and the direct
// difference loses all significance, so inside (H within 1e-4 of the maximum,
// u within 0.05 of 2pi/3) this switches to the exact Taylor expansion of F
// about 2pi/3, where the subtraction from the maximum is exact.
double f_gap(EnergyLevel h, double u);

// G(u) = 2 sin u + sin 2u = 2 sin u (1 + cos u); positive on (pi/2, pi).
double g_profile(double u);

// Q_H(u) = sin^2 u - (H + sin 2u)^2 / 4, the square of du/dt at fixed H.
double q_potential(EnergyLevel h, double u);

// Same quantity through the factorization (F(u) - H)(G(u) + H)/4. Agrees with
// q_potential to 1e-14 absolute; kept as an independent algebraic route.
double q_potential_factored(EnergyLevel h, double u);

// Q_H''(u) = 2 (1 + cos 2u + H sin 2u - 2 cos^2 2u)
double q_potential_second_derivative(EnergyLevel h, double u);

// Strict inequalities; the region is open, tolerances belong to callers.
bool in_admissible_region(const AngleState& s);

// Distance to the region boundary, positive inside and negative outside.
// Diagnostic companion to the tolerance-free membership test.
double boundary_distance(const AngleState& s);

}  // namespace carousel
