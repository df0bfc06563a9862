#include "carousel/period_engine.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "carousel/errors.hpp"

namespace carousel {

namespace {

constexpr int kBisectMaxIter = 200;
constexpr double kDegenerateWindow = 1e-9;

void require_in_window(EnergyLevel h, const char* who) {
    if (!(h > kOrbitEnergyMin && h < kOrbitEnergyMax)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%s: H=%.15g outside (1+sqrt2, 3*sqrt3/2)", who, h);
        throw OutOfEnergyRange(buf);
    }
}

// Bisection for F(u) = h on [a, b]; `increasing` selects the branch sense.
// Runs to the last representable bit: near the window top the bracket width
// enters the quadrature as an endpoint perturbation relative to a tiny
// oscillation amplitude, so 1e-14 would not be enough there.
double bisect_profile(EnergyLevel h, double a, double b, bool increasing) {
    for (int i = 0; i < kBisectMaxIter; ++i) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b) break;
        const bool below = f_gap(h, m) < 0.0;
        if (below == increasing) {
            a = m;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

TurningPoints turning_points(EnergyLevel h) {
    require_in_window(h, "turning_points");
    TurningPoints tp;
    tp.u_minus = bisect_profile(h, kPi / 2.0, 2.0 * kPi / 3.0, true);
    tp.u_plus = bisect_profile(h, 2.0 * kPi / 3.0, 0.75 * kPi, false);
    tp.residual = std::max(std::abs(f_gap(h, tp.u_minus)), std::abs(f_gap(h, tp.u_plus)));
    return tp;
}

PeriodResult period(EnergyLevel h) {
    require_in_window(h, "period");
    PeriodResult res;
    res.h = h;
    res.turning = turning_points(h);

    if (kOrbitEnergyMax - h <= kDegenerateWindow) {
        // The quadrature degenerates to 0/0 here; the limit is the linearized period.
        res.t = kDegeneratePeriod;
        res.degenerate = true;
        return res;
    }

    const double c = 0.5 * (res.turning.u_plus + res.turning.u_minus);
    const double rho = 0.5 * (res.turning.u_plus - res.turning.u_minus);

    // After u = c + rho sin(theta) the integrand 2 rho cos(theta) / sqrt(Q_H)
    // is smooth up to the endpoints; midpoint nodes never touch them.
    const auto estimate = [&](int nodes) {
        const double spacing = kPi / nodes;
        double sum = 0.0;
        for (int j = 0; j < nodes; ++j) {
            const double theta = -0.5 * kPi + (j + 0.5) * spacing;
            const double cos_theta = std::cos(theta);
            const double q = q_potential_factored(h, c + rho * std::sin(theta));
            if (!(q > 0.0)) {
                throw QuadratureNotConverged("period: nonpositive integrand between turning points");
            }
            sum += cos_theta / std::sqrt(q);
        }
        return 2.0 * rho * spacing * sum;
    };

    double prev = estimate(64);
    double best_t = prev;
    double best_diff = std::numeric_limits<double>::infinity();
    int best_nodes = 64;
    double prev_diff = best_diff;
    int growth_streak = 0;
    for (int nodes = 128; nodes <= 65536; nodes *= 2) {
        const double cur = estimate(nodes);
        const double diff = std::abs(cur - prev);
        if (diff <= 1e-10 * std::abs(cur)) {
            res.t = cur;
            res.quadrature_error = diff;
            res.nodes = nodes;
            return res;
        }
        if (diff < best_diff) {
            best_diff = diff;
            best_t = cur;
            best_nodes = nodes;
        }
        // Once doubling makes the difference grow, deeper nodes are only
        // resolving the one-ulp mismatch of the turning points; the best
        // estimate so far is the honest answer.
        growth_streak = diff > prev_diff ? growth_streak + 1 : 0;
        if (growth_streak >= 2) break;
        prev_diff = diff;
        prev = cur;
    }
    if (best_diff <= 1e-8 * std::abs(best_t)) {
        res.t = best_t;
        res.quadrature_error = best_diff;
        res.nodes = best_nodes;
        return res;
    }
    throw QuadratureNotConverged("period: node cap reached before convergence");
}

BoundAudit audit_parabolic_bounds(EnergyLevel h, int grid_points) {
    require_in_window(h, "audit_parabolic_bounds");
    if (grid_points < 3) {
        throw std::invalid_argument("audit_parabolic_bounds: need at least 3 grid points");
    }
    const TurningPoints tp = turning_points(h);
    BoundAudit audit;
    audit.h = h;
    audit.grid = grid_points;
    audit.lower_margin = audit.upper_margin = audit.curvature_margin =
        std::numeric_limits<double>::infinity();

    const double span = tp.u_plus - tp.u_minus;
    for (int j = 0; j < grid_points; ++j) {
        const double u = tp.u_minus + span * j / (grid_points - 1);
        const double parabola = (u - tp.u_minus) * (tp.u_plus - u);
        const double q = q_potential(h, u);
        audit.lower_margin = std::min(audit.lower_margin, q - kParabolaLowerCoeff * parabola);
        audit.upper_margin = std::min(audit.upper_margin, kParabolaUpperCoeff * parabola - q);
        audit.curvature_margin =
            std::min(audit.curvature_margin, q_potential_second_derivative(h, u) - kCurvatureFloor);
    }
    audit.pass = audit.lower_margin >= -1e-12 && audit.upper_margin >= -1e-12 &&
                 audit.curvature_margin >= -1e-12;
    return audit;
}

double radius(EnergyLevel h, double u) {
    const double radicand = 1.0 - 2.0 * h * std::cos(u) / std::sin(u);
    if (radicand < 0.0) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "radius: 1 - 2H cot u = %.6g < 0 (H=%.6g, u=%.6g)",
                      radicand, h, u);
        throw NegativeRadicand(buf);
    }
    return std::sqrt(radicand);
}

double radius_from_angles(const AngleState& s) {
    return std::sqrt(3.0 - 2.0 * std::cos(s.x) - 2.0 * std::cos(s.y) + 2.0 * std::cos(s.x + s.y));
}

RadiusExtrema radius_extrema(EnergyLevel h) {
    const TurningPoints tp = turning_points(h);
    // r is increasing in u at fixed H, so the extremes sit at the turning points.
    return {radius(h, tp.u_minus), radius(h, tp.u_plus)};
}

}  // namespace carousel
