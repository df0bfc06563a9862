#include "carousel/scalar_kernel.hpp"

#include <algorithm>

namespace carousel {

EnergyLevel hamiltonian(const AngleState& s) {
    return std::sin(s.x) + std::sin(s.y) - std::sin(s.x + s.y);
}

std::array<double, 2> hamiltonian_gradient(const AngleState& s) {
    const double c = std::cos(s.x + s.y);
    return {std::cos(s.x) - c, std::cos(s.y) - c};
}

Hessian hamiltonian_hessian(const AngleState& s) {
    const double sxy = std::sin(s.x + s.y);
    return {-std::sin(s.x) + sxy, sxy, -std::sin(s.y) + sxy};
}

double f_profile(double u) { return 2.0 * std::sin(u) - std::sin(2.0 * u); }

double f_gap(EnergyLevel h, double u) {
    const double delta = u - 2.0 * kPi / 3.0;
    if (kOrbitEnergyMax - h > 1e-4 || std::abs(delta) > 0.05) {
        return f_profile(u) - h;
    }
    // Taylor coefficients F^(k)(2pi/3) / k!; relative error below 1e-12 on the
    // window (next term is 255/362880 * delta^9).
    const double s3 = std::sqrt(3.0);
    const double c2 = -1.5 * s3;
    const double c3 = -0.5;
    const double c4 = 3.0 * s3 / 8.0;
    const double c5 = 0.125;
    const double c6 = -11.0 * s3 / 240.0;
    const double c7 = -1.0 / 80.0;
    const double c8 = 129.0 * s3 / 40320.0;
    const double series =
        delta * delta *
        (c2 + delta * (c3 + delta * (c4 + delta * (c5 + delta * (c6 + delta * (c7 + delta * c8))))));
    return (kOrbitEnergyMax - h) + series;
}

double g_profile(double u) { return 2.0 * std::sin(u) + std::sin(2.0 * u); }

double q_potential(EnergyLevel h, double u) {
    const double s = std::sin(u);
    const double w = h + std::sin(2.0 * u);
    return s * s - 0.25 * w * w;
}

double q_potential_factored(EnergyLevel h, double u) {
    return 0.25 * f_gap(h, u) * (g_profile(u) + h);
}

double q_potential_second_derivative(EnergyLevel h, double u) {
    const double c2 = std::cos(2.0 * u);
    return 2.0 * (1.0 + c2 + h * std::sin(2.0 * u) - 2.0 * c2 * c2);
}

bool in_admissible_region(const AngleState& s) {
    return s.x > kPi / 2.0 && s.y > kPi / 2.0 && s.x + s.y < 1.5 * kPi;
}

double boundary_distance(const AngleState& s) {
    const double dx = s.x - kPi / 2.0;
    const double dy = s.y - kPi / 2.0;
    const double dd = (1.5 * kPi - s.x - s.y) / std::sqrt(2.0);
    return std::min({dx, dy, dd});
}

}  // namespace carousel
