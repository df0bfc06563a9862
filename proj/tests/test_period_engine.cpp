#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "carousel/errors.hpp"
#include "carousel/hexagon_flow.hpp"
#include "carousel/period_engine.hpp"

using namespace carousel;

namespace {

// Test-side root finder on F, independent of the engine's bracketing.
double oracle_root(double h, double lo, double hi) {
    for (int i = 0; i < 300; ++i) {
        const double mid = 0.5 * (lo + hi);
        if ((f_profile(lo) - h) * (f_profile(mid) - h) <= 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> window_grid(double margin, int count) {
    std::vector<double> grid(count);
    const double lo = kOrbitEnergyMin + margin;
    const double hi = kOrbitEnergyMax - margin;
    for (int i = 0; i < count; ++i) grid[i] = lo + (hi - lo) * i / (count - 1);
    return grid;
}

}  // namespace

TEST_CASE("turning points stay bracketed over the window") {
    double prev_span = 1.0;
    for (double h : window_grid(1e-6, 200)) {
        const TurningPoints tp = turning_points(h);
        CHECK(tp.u_minus > kPi / 2.0);
        CHECK(tp.u_minus < 2.0 * kPi / 3.0);
        CHECK(tp.u_plus > 2.0 * kPi / 3.0);
        CHECK(tp.u_plus < 0.75 * kPi);
        CHECK(tp.residual <= 1e-12);
        // F exceeds H strictly between the roots
        const double mid = 0.5 * (tp.u_minus + tp.u_plus);
        CHECK(f_profile(mid) > h);
        // both roots shrink toward 2pi/3 with increasing energy
        const double span = tp.u_plus - tp.u_minus;
        CHECK(span < prev_span);
        prev_span = span;
    }
}

TEST_CASE("turning points near the window edges") {
    const TurningPoints low = turning_points(kOrbitEnergyMin + 1e-12);
    CHECK(std::abs(low.u_plus - 0.75 * kPi) < 1e-9);

    const TurningPoints high = turning_points(kOrbitEnergyMax - 1e-12);
    CHECK(std::abs(high.u_minus - 2.0 * kPi / 3.0) < 1e-5);
    CHECK(std::abs(high.u_plus - 2.0 * kPi / 3.0) < 1e-5);
}

TEST_CASE("turning points at H = 2.5 against the oracle") {
    const TurningPoints tp = turning_points(2.5);
    CHECK(tp.u_minus == doctest::Approx(1.8952852942291210).epsilon(1e-12));
    CHECK(tp.u_plus == doctest::Approx(2.2860785244875131).epsilon(1e-12));
    CHECK(tp.u_minus == doctest::Approx(oracle_root(2.5, kPi / 2.0, 2.0 * kPi / 3.0)).epsilon(1e-12));
    CHECK(tp.u_plus == doctest::Approx(oracle_root(2.5, 2.0 * kPi / 3.0, 0.75 * kPi)).epsilon(1e-12));
}

TEST_CASE("energies outside the open window are rejected") {
    CHECK_THROWS_AS(turning_points(kOrbitEnergyMin), OutOfEnergyRange);
    CHECK_THROWS_AS(turning_points(kOrbitEnergyMax), OutOfEnergyRange);
    CHECK_THROWS_AS(turning_points(2.0), OutOfEnergyRange);
    CHECK_THROWS_AS(period(2.7), OutOfEnergyRange);
    CHECK_THROWS_AS(audit_parabolic_bounds(2.0, 100), OutOfEnergyRange);
    CHECK_THROWS_AS(radius_extrema(1.0), OutOfEnergyRange);
}

TEST_CASE("period at H = 2.5 against the quadrature oracle") {
    const PeriodResult res = period(2.5);
    CHECK(res.t == doctest::Approx(4.2789898885697785).epsilon(1e-10));
    CHECK_FALSE(res.degenerate);
    CHECK(res.nodes >= 64);
    CHECK(res.quadrature_error < 1e-9);
}

TEST_CASE("period obeys the two-sided bounds with positive margin") {
    for (double h : window_grid(1e-6, 200)) {
        const PeriodResult res = period(h);
        CHECK(res.t > kPeriodLowerBound);
        CHECK(res.t < kPeriodUpperBound);
    }
}

TEST_CASE("period near the top approaches the linearized value") {
    const PeriodResult res = period(kOrbitEnergyMax - 1e-6);
    CHECK_FALSE(res.degenerate);
    CHECK(std::abs(res.t - kDegeneratePeriod) < 1e-3);
    CHECK(res.t == doctest::Approx(4.1887911004900121).epsilon(1e-7));

    const PeriodResult degenerate = period(kOrbitEnergyMax - 1e-10);
    CHECK(degenerate.degenerate);
    CHECK(degenerate.t == kDegeneratePeriod);
}

TEST_CASE("period near the bottom approaches a finite limit") {
    const PeriodResult res = period(kOrbitEnergyMin + 1e-6);
    CHECK(res.t == doctest::Approx(4.3619652440476588).epsilon(1e-9));
}

TEST_CASE("quadrature period equals the first-return time of the flow") {
    for (double h : window_grid(1e-3, 20)) {
        const TurningPoints tp = turning_points(h);
        const double t_ode = orbit_period({tp.u_minus, tp.u_minus});
        const double t_quad = period(h).t;
        CHECK(std::abs(t_quad - t_ode) / t_quad <= 1e-6);
    }
}

TEST_CASE("period of the radius along an orbit") {
    const double h = 2.5;
    const TurningPoints tp = turning_points(h);
    OrbitOptions opts;
    opts.record_every = 1;
    const Orbit orbit = integrate_orbit({tp.u_minus, tp.u_minus}, 11.0, opts);

    // successive maxima of r(t), refined by a parabolic fit through the peak
    std::vector<double> peaks;
    std::vector<double> r;
    r.reserve(orbit.samples.size());
    for (const OrbitSample& sample : orbit.samples) {
        r.push_back(radius_from_angles(sample.state));
    }
    for (std::size_t k = 1; k + 1 < r.size(); ++k) {
        if (r[k] >= r[k - 1] && r[k] > r[k + 1]) {
            const double denominator = r[k - 1] - 2.0 * r[k] + r[k + 1];
            const double shift =
                denominator == 0.0 ? 0.0 : 0.5 * (r[k - 1] - r[k + 1]) / denominator;
            peaks.push_back(orbit.samples[k].t + shift * (orbit.samples[k].t - orbit.samples[k - 1].t));
        }
    }
    REQUIRE(peaks.size() >= 2);
    const double t_expected = period(h).t;
    for (std::size_t i = 1; i < peaks.size(); ++i) {
        CHECK(std::abs((peaks[i] - peaks[i - 1]) - t_expected) <= 1e-5);
    }
}

TEST_CASE("radius forms agree and the pinned value holds") {
    CHECK(radius(kOrbitEnergyMax, 2.0 * kPi / 3.0) == doctest::Approx(2.0).epsilon(1e-14));

    // r from (H, u) matches r from the angle pair on admissible states
    for (double x = 1.7; x < 2.3; x += 0.1) {
        for (double y = 1.7; y < 2.3; y += 0.1) {
            const AngleState s{x, y};
            if (!in_admissible_region(s)) continue;
            const double u = 0.5 * (x + y);
            const double via_u = radius(hamiltonian(s), u);
            CHECK(std::abs(via_u - radius_from_angles(s)) <= 1e-12);
        }
    }
}

TEST_CASE("radius is increasing in u at fixed energy") {
    for (double h : {2.42, 2.5, 2.59}) {
        double prev = 0.0;
        for (int i = 1; i <= 40; ++i) {
            const double u = kPi / 2.0 + i * 0.035;
            if (u >= kPi) break;
            const double r = radius(h, u);
            CHECK(r > prev);
            prev = r;
        }
    }
}

TEST_CASE("negative radicand is reported") {
    CHECK_THROWS_AS(radius(2.5, 0.3), NegativeRadicand);
}

TEST_CASE("radius extrema across the window") {
    const RadiusExtrema near_top = radius_extrema(kOrbitEnergyMax - 1e-10);
    CHECK(near_top.r_min == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(near_top.r_max == doctest::Approx(2.0).epsilon(1e-4));

    const RadiusExtrema near_bottom = radius_extrema(kOrbitEnergyMin + 1e-9);
    CHECK(std::abs(near_bottom.r_max - (1.0 + std::sqrt(2.0))) < 1e-4);
    CHECK(near_bottom.r_max < 1.0 + std::sqrt(2.0));

    const RadiusExtrema mid = radius_extrema(2.5);
    CHECK(mid.r_min == doctest::Approx(1.6376489276029461).epsilon(1e-12));
    CHECK(mid.r_max == doctest::Approx(2.3116609523189394).epsilon(1e-12));

    for (double h : window_grid(1e-6, 100)) {
        const RadiusExtrema extrema = radius_extrema(h);
        CHECK(extrema.r_max < 1.0 + std::sqrt(2.0));
        CHECK(extrema.r_min < extrema.r_max);
        // r_max = 1 - 2 cos u_+
        const TurningPoints tp = turning_points(h);
        CHECK(extrema.r_max == doctest::Approx(1.0 - 2.0 * std::cos(tp.u_plus)).epsilon(1e-12));
    }
}

TEST_CASE("profile sum identity at the upper turning point") {
    for (double h : window_grid(1e-6, 50)) {
        const TurningPoints tp = turning_points(h);
        CHECK(g_profile(tp.u_plus) + h == doctest::Approx(4.0 * std::sin(tp.u_plus)).epsilon(1e-10));
        CHECK(g_profile(tp.u_plus) + h >= 2.0 * std::sqrt(2.0) - 1e-12);
    }
}

TEST_CASE("parabolic bounds audit on a fine grid") {
    const BoundAudit audit = audit_parabolic_bounds(2.5, 1001);
    CHECK(audit.pass);
    CHECK(audit.lower_margin >= -1e-12);
    CHECK(audit.upper_margin >= -1e-12);
    CHECK(audit.curvature_margin >= -1e-12);

    // endpoints contribute zero slack up to roundoff
    const TurningPoints tp = turning_points(2.5);
    const double endpoint_parabola = 0.0;
    CHECK(std::abs(q_potential(2.5, tp.u_minus) - endpoint_parabola) < 1e-12);
    CHECK(std::abs(q_potential(2.5, tp.u_plus) - endpoint_parabola) < 1e-12);
}

TEST_CASE("parabolic bounds hold across the window including near-degenerate energies") {
    std::vector<double> grid = window_grid(1e-3, 50);
    grid.push_back(kOrbitEnergyMin + 1e-6);
    grid.push_back(kOrbitEnergyMax - 1e-6);
    for (double h : grid) {
        const BoundAudit audit = audit_parabolic_bounds(h, 1001);
        CHECK(audit.pass);
    }
    CHECK_THROWS_AS(audit_parabolic_bounds(2.5, 2), std::invalid_argument);
}

TEST_CASE("quadrature oracle: trapezoid with analytic endpoint limits") {
    // Independent rule: trapezoid in the sine-substituted variable, with the
    // endpoint integrand taken from the analytic limit 2 rho / sqrt(|Q'(u_pm)|)
    // instead of the removable 0/0 form. Distinct from the engine's midpoint
    // rule in both node placement and endpoint treatment.
    const double h = 2.5;
    const TurningPoints tp = turning_points(h);
    const double c = 0.5 * (tp.u_plus + tp.u_minus);
    const double rho = 0.5 * (tp.u_plus - tp.u_minus);
    const auto q_prime = [&](double u) {
        return std::sin(2.0 * u) - (h + std::sin(2.0 * u)) * std::cos(2.0 * u);
    };
    const int n = 8192;
    const double spacing = kPi / n;
    // limit of the integrand at theta = -/+ pi/2: with 1 - |sin| ~ cos^2/2,
    // 2 rho cos / sqrt(|Q'| rho cos^2 / 2) -> 2 sqrt(2 rho / |Q'|)
    double sum = 0.5 * (2.0 * std::sqrt(2.0 * rho / std::abs(q_prime(tp.u_minus))) +
                        2.0 * std::sqrt(2.0 * rho / std::abs(q_prime(tp.u_plus))));
    for (int i = 1; i < n; ++i) {
        const double theta = -0.5 * kPi + i * spacing;
        sum += 2.0 * rho * std::cos(theta) / std::sqrt(q_potential(h, c + rho * std::sin(theta)));
    }
    CHECK(sum * spacing == doctest::Approx(period(h).t).epsilon(1e-8));
}
