#include "carousel/hexagon_flow.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "carousel/errors.hpp"

namespace carousel {

namespace {

std::string state_text(double t, const AngleState& s) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "t=%.6f x=%.12f y=%.12f", t, s.x, s.y);
    return buf;
}

}  // namespace

StateVelocity vector_field(const AngleState& s) {
    const double cxy = std::cos(s.x + s.y);
    return {cxy - std::cos(s.y), std::cos(s.x) - cxy};
}

SymmetricCoords to_symmetric(const AngleState& s) {
    return {0.5 * (s.x + s.y), 0.5 * (s.x - s.y)};
}

AngleState from_symmetric(const SymmetricCoords& c) { return {c.u + c.v, c.u - c.v}; }

TripleAngles triple_angles(const AngleState& s) {
    if (!in_admissible_region(s)) {
        throw OutOfRegion("triple_angles: state outside admissible region");
    }
    TripleAngles t;
    t.x = {s.x, s.y, 2.0 * kPi - s.x - s.y};
    // alpha_i = x_{i+2} - pi/2 with indices mod 3
    t.alpha = {t.x[2] - kPi / 2.0, t.x[0] - kPi / 2.0, t.x[1] - kPi / 2.0};
    return t;
}

std::vector<double> general_carousel_field(std::span<const double> alpha) {
    const std::size_t n = alpha.size();
    std::vector<double> rates(n);
    for (std::size_t i = 0; i < n; ++i) {
        rates[i] = std::sin(alpha[(i + n - 1) % n]) - std::sin(alpha[i]);
    }
    return rates;
}

AngleState flow_step(const AngleState& s, double h) {
    const StateVelocity k1 = vector_field(s);
    const StateVelocity k2 = vector_field({s.x + 0.5 * h * k1.dx, s.y + 0.5 * h * k1.dy});
    const StateVelocity k3 = vector_field({s.x + 0.5 * h * k2.dx, s.y + 0.5 * h * k2.dy});
    const StateVelocity k4 = vector_field({s.x + h * k3.dx, s.y + h * k3.dy});
    return {s.x + h / 6.0 * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx),
            s.y + h / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy)};
}

namespace {

Orbit integrate_fixed(const AngleState& s0, double duration, const OrbitOptions& opts) {
    Orbit orbit;
    orbit.h_reference = hamiltonian(s0);
    orbit.step_used = opts.step;
    orbit.samples.push_back({0.0, s0});

    AngleState s = s0;
    double t = 0.0;
    double t_prev = 0.0;
    long step_index = 0;
    while (t < duration - 1e-12) {
        // Absorb the remainder into the final step so no sub-step straggler
        // is emitted; the last step lies in (step/2, 3*step/2].
        double h = duration - t;
        if (h > 1.5 * opts.step) h = opts.step;
        const AngleState next = flow_step(s, h);
        if (!in_admissible_region(next)) {
            throw StateLeftRegion("orbit reached the region boundary; last interior sample " +
                                  state_text(t, s));
        }
        t_prev = t;
        s = next;
        t = t_prev + h;
        ++step_index;
        const double drift = std::abs(hamiltonian(s) - orbit.h_reference);
        orbit.h_max_drift = std::max(orbit.h_max_drift, drift);
        if (drift > opts.drift_ceiling) {
            throw StepTooLarge("conserved-quantity drift above ceiling at " + state_text(t, s));
        }
        if (step_index % opts.record_every == 0 || t >= duration - 1e-12) {
            orbit.samples.push_back({t, s});
        }
    }
    return orbit;
}

}  // namespace

Orbit integrate_orbit(const AngleState& s0, double duration, const OrbitOptions& opts) {
    if (!(duration > 0.0) || !(opts.step > 0.0) || opts.record_every < 1) {
        throw std::invalid_argument("integrate_orbit: duration, step and cadence must be positive");
    }
    if (!in_admissible_region(s0)) {
        throw OutOfRegion("integrate_orbit: initial state outside admissible region");
    }
    if (opts.method == OrbitMethod::fixed_rk4) {
        return integrate_fixed(s0, duration, opts);
    }
    // Adaptive mode: rerun with halved steps until the drift rate target
    // holds. A trial that trips the drift ceiling just halves and retries.
    OrbitOptions local = opts;
    for (int halving = 0; halving < 24; ++halving) {
        try {
            Orbit orbit = integrate_fixed(s0, duration, local);
            if (orbit.h_max_drift / duration <= opts.adaptive_drift_rate) {
                return orbit;
            }
        } catch (const StepTooLarge&) {
        }
        local.step *= 0.5;
    }
    throw StepTooLarge("adaptive integration failed to reach the drift-rate target");
}

double orbit_period(const AngleState& s0, double step, double max_duration) {
    if (!in_admissible_region(s0)) {
        throw OutOfRegion("orbit_period: initial state outside admissible region");
    }
    const StateVelocity v0 = vector_field(s0);
    if (std::sqrt(v0.dx * v0.dx + v0.dy * v0.dy) < 1e-12) {
        throw NoReturn("orbit_period: initial state is the fixed point");
    }

    AngleState s = s0;
    double t = 0.0;
    double v_prev = to_symmetric(s).v;
    double crossings[3] = {0.0, 0.0, 0.0};
    int found = 0;
    while (t < max_duration) {
        const AngleState next = flow_step(s, step);
        if (!in_admissible_region(next)) {
            throw StateLeftRegion("orbit_period: trajectory reached the region boundary");
        }
        const double v_next = to_symmetric(next).v;
        if (v_prev * v_next < 0.0) {
            const double frac = v_prev / (v_prev - v_next);
            crossings[found++] = t + frac * step;
            if (found == 3) {
                return crossings[2] - crossings[0];
            }
        }
        s = next;
        t += step;
        v_prev = v_next;
    }
    throw NoReturn("orbit_period: fewer than three section crossings within max duration");
}

}  // namespace carousel
