#pragma once

#include <array>
#include <span>
#include <vector>

#include "carousel/scalar_kernel.hpp"

namespace carousel {

struct StateVelocity {
    double dx = 0.0;
    double dy = 0.0;
};

// Reduced vector field: dx/dt = cos(x+y) - cos y, dy/dt = cos x - cos(x+y).
// Equals (-dH/dy, dH/dx), so the conserved quantity is exactly H.
StateVelocity vector_field(const AngleState& s);

SymmetricCoords to_symmetric(const AngleState& s);
AngleState from_symmetric(const SymmetricCoords& c);

// Full angle data of the centrally symmetric hexagon: the three independent
// interior angles (x1 + x2 + x3 = 2 pi) and the tangent-chord angles
// alpha_i = x_{i+2} - pi/2 (indices mod 3), each in (0, pi/2).
struct TripleAngles {
    std::array<double, 3> x{};
    std::array<double, 3> alpha{};
};

// Throws OutOfRegion outside the admissible region (some alpha_i would be <= 0).
TripleAngles triple_angles(const AngleState& s);

// General-N carousel angle velocities dx_i/dt = sin(alpha_{i-1}) - sin(alpha_i),
// indices mod N. For N = 6 with period-3 alphas this reduces componentwise to
// vector_field.
std::vector<double> general_carousel_field(std::span<const double> alpha);

struct OrbitSample {
    double t = 0.0;
    AngleState state;
};

enum class OrbitMethod { fixed_rk4, adaptive };

struct OrbitOptions {
    double step = 1e-3;
    OrbitMethod method = OrbitMethod::fixed_rk4;
    // Sampling cadence is decoupled from the integration step.
    int record_every = 10;
    // Conserved-quantity drift above this raises StepTooLarge.
    double drift_ceiling = 1e-6;
    // Adaptive mode halves the step until drift per unit time is below this.
    double adaptive_drift_rate = 1e-10;
};

struct Orbit {
    std::vector<OrbitSample> samples;
    EnergyLevel h_reference = 0.0;
    double h_max_drift = 0.0;
    double step_used = 0.0;
};

// Classical fixed-step RK4. Conservation is monitored every step, never
// enforced; leaving the admissible region raises StateLeftRegion with the last
// interior sample in the message.
Orbit integrate_orbit(const AngleState& s0, double duration, const OrbitOptions& opts = {});

// One RK4 step of the reduced flow.
AngleState flow_step(const AngleState& s, double h);

// Minimal period of the reduced orbit through s0, measured as the spacing of
// alternate v = (x-y)/2 zero crossings (crossing times interpolated linearly).
// Throws NoReturn if fewer than three crossings occur, including at the fixed
// point where v never crosses.
double orbit_period(const AngleState& s0, double step = 1e-3, double max_duration = 40.0);

}  // namespace carousel
