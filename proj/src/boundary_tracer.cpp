#include "carousel/boundary_tracer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "carousel/errors.hpp"
#include "carousel/period_engine.hpp"

namespace carousel {

namespace {

constexpr double kFixedPointSpeed = 1e-12;
// Arc length between vertex slots of the circular trace (radius 2, six slots).
const double kCircleSlotTime = 2.0 * kPi / 3.0;

struct Joint {
    AngleState s;
    std::array<Vec2, 6> v{};
};

Joint axpy(const Joint& y, double h, const Joint& d) {
    Joint out;
    out.s = {y.s.x + h * d.s.x, y.s.y + h * d.s.y};
    for (int i = 0; i < 6; ++i) out.v[i] = y.v[i] + h * d.v[i];
    return out;
}

// alpha for edge i (0-based) has period 3: alpha_i = x_{i+2} - pi/2.
std::array<double, 3> edge_alphas(const AngleState& s) {
    const double x3 = 2.0 * kPi - s.x - s.y;
    return {x3 - kPi / 2.0, s.x - kPi / 2.0, s.y - kPi / 2.0};
}

Joint derivative(const Joint& y, int sign) {
    Joint d;
    const StateVelocity f = vector_field(y.s);
    d.s = {f.dx, f.dy};
    const std::array<double, 3> alpha = edge_alphas(y.s);
    for (int i = 0; i < 6; ++i) {
        const Vec2 edge = normalized(y.v[(i + 1) % 6] - y.v[i]);
        d.v[i] = rotated(edge, sign * alpha[i % 3]);
    }
    return d;
}

Joint rk4(const Joint& y, double h, int sign) {
    const Joint k1 = derivative(y, sign);
    const Joint k2 = derivative(axpy(y, 0.5 * h, k1), sign);
    const Joint k3 = derivative(axpy(y, 0.5 * h, k2), sign);
    const Joint k4 = derivative(axpy(y, h, k3), sign);
    Joint out = y;
    out.s.x += h / 6.0 * (k1.s.x + 2.0 * k2.s.x + 2.0 * k3.s.x + k4.s.x);
    out.s.y += h / 6.0 * (k1.s.y + 2.0 * k2.s.y + 2.0 * k3.s.y + k4.s.y);
    for (int i = 0; i < 6; ++i) {
        out.v[i] += h / 6.0 * (k1.v[i] + 2.0 * k2.v[i] + 2.0 * k3.v[i] + k4.v[i]);
    }
    return out;
}

double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

double wrap_pi(double a) {
    while (a > kPi) a -= 2.0 * kPi;
    while (a <= -kPi) a += 2.0 * kPi;
    return a;
}

bool consistent_with_sign(const Hexagon& h, const TripleAngles& a, int sign,
                          std::array<Vec2, 6>& tangents, double tol) {
    for (int i = 0; i < 6; ++i) {
        tangents[i] = rotated(normalized(h.v[(i + 1) % 6] - h.v[i]), sign * a.alpha[i % 3]);
    }
    // At vertex i the tangent must make the previous edge's angle with the
    // incoming direction, on the side opposite to the outgoing rotation.
    for (int i = 0; i < 6; ++i) {
        const Vec2 incoming = normalized(h.v[i] - h.v[(i + 5) % 6]);
        const double delta = wrap_pi(angle_of(tangents[i]) - angle_of(incoming));
        if (std::abs(delta + sign * a.alpha[((i + 5) % 6) % 3]) > tol) {
            return false;
        }
    }
    return true;
}

// Evaluates the joint state at an arbitrary time from the stored step grid by
// one partial RK4 step off the preceding stored node.
class StoredFlow {
public:
    StoredFlow(std::vector<double> times, std::vector<Joint> states, int sign)
        : times_(std::move(times)), states_(std::move(states)), sign_(sign) {}

    Joint at(double t) const {
        auto it = std::upper_bound(times_.begin(), times_.end(), t);
        std::size_t k = it == times_.begin() ? 0 : static_cast<std::size_t>(it - times_.begin()) - 1;
        k = std::min(k, times_.size() - 1);
        const double dt = t - times_[k];
        if (dt <= 0.0) return states_[k];
        return rk4(states_[k], dt, sign_);
    }

private:
    std::vector<double> times_;
    std::vector<Joint> states_;
    int sign_;
};

}  // namespace

Hexagon initial_hexagon(const AngleState& s) {
    if (!in_admissible_region(s)) {
        throw OutOfRegion("initial_hexagon: state outside admissible region");
    }
    const double x3 = 2.0 * kPi - s.x - s.y;
    Hexagon h = hexagon_from_angles({s.x, s.y, x3, s.x, s.y, x3});
    const Vec2 center = midpoint(h.v[0], h.v[3]);
    for (Vec2& p : h.v) p = p - center;
    return h;
}

std::array<Vec2, 6> tangent_directions(const Hexagon& h, const TripleAngles& a) {
    std::array<Vec2, 6> tangents{};
    // Counterclockwise polygons rotate the outgoing edge clockwise (outward).
    if (consistent_with_sign(h, a, -1, tangents, 1e-10)) return tangents;
    if (consistent_with_sign(h, a, +1, tangents, 1e-10)) return tangents;
    throw InconsistentAngles("tangent_directions: chord-angle consistency fails with either sign");
}

VertexFlow trace(const AngleState& s0, double duration, double step) {
    if (!(duration > 0.0) || !(step > 0.0)) {
        throw std::invalid_argument("trace: duration and step must be positive");
    }
    if (!in_admissible_region(s0)) {
        throw OutOfRegion("trace: initial state outside admissible region");
    }

    const Hexagon hex0 = initial_hexagon(s0);
    const TripleAngles angles0 = triple_angles(s0);
    const StateVelocity f0 = vector_field(s0);
    const bool fixed_point = std::sqrt(f0.dx * f0.dx + f0.dy * f0.dy) < kFixedPointSpeed;

    int sign = -1;
    {
        std::array<Vec2, 6> probe{};
        if (!consistent_with_sign(hex0, angles0, -1, probe, 1e-10)) {
            if (!consistent_with_sign(hex0, angles0, +1, probe, 1e-10)) {
                throw InconsistentAngles("trace: tangent sign selection failed");
            }
            sign = +1;
        }
    }

    VertexFlow flow;
    flow.h_reference = hamiltonian(s0);
    flow.tangent_sign = sign;

    Joint y;
    y.s = s0;
    y.v = hex0.v;

    std::vector<double> times{0.0};
    std::vector<Joint> states{y};
    std::vector<double> crossings;

    double t = 0.0;
    double v_prev = to_symmetric(y.s).v;
    while (t < duration - 1e-12) {
        double h = duration - t;
        if (h > 1.5 * step) h = step;
        const Joint next = rk4(y, h, sign);
        if (!in_admissible_region(next.s)) {
            char buf[96];
            std::snprintf(buf, sizeof(buf), "trace: state left the region near t=%.6f", t);
            throw StateLeftRegion(buf);
        }
        y = next;
        t += h;
        times.push_back(t);
        states.push_back(y);
        const double v_next = to_symmetric(y.s).v;
        if (v_prev * v_next < 0.0) {
            crossings.push_back(t - h + h * v_prev / (v_prev - v_next));
        }
        v_prev = v_next;
    }

    // Recurrence time of the angle state: alternate section crossings are one
    // period apart; the fixed point uses the circular slot time instead.
    if (fixed_point) {
        if (duration < kCircleSlotTime) {
            throw NoReturn("trace: duration below the circular slot time 2pi/3");
        }
        flow.return_time = kCircleSlotTime;
    } else {
        if (crossings.size() < 3) {
            throw NoReturn("trace: angle state did not recur within duration");
        }
        flow.return_time = crossings[2] - crossings[0];
    }

    const StoredFlow stored(times, states, sign);

    // Diagnostics over the stored samples.
    flow.samples.reserve(times.size());
    const std::array<Vec2, 6>& v0 = states.front().v;
    for (std::size_t k = 0; k < times.size(); ++k) {
        const Joint& cur = states[k];
        flow.samples.push_back({times[k], cur.s, cur.v});

        const double x3 = 2.0 * kPi - cur.s.x - cur.s.y;
        const std::array<double, 6> expected{cur.s.x, cur.s.y, x3, cur.s.x, cur.s.y, x3};
        Hexagon snapshot;
        snapshot.v = cur.v;
        const std::array<double, 6> measured = snapshot.interior_angles();
        const std::array<double, 3> u_class{kPi - 0.5 * cur.s.x, kPi - 0.5 * cur.s.y,
                                            0.5 * (cur.s.x + cur.s.y)};
        for (int i = 0; i < 6; ++i) {
            flow.max_side_error = std::max(
                flow.max_side_error, std::abs(distance(cur.v[i], cur.v[(i + 1) % 6]) - 2.0));
            flow.max_angle_error =
                std::max(flow.max_angle_error, std::abs(measured[i] - expected[i]));
            const double target = 1.0 - 2.0 * flow.h_reference * std::cos(u_class[i % 3]) /
                                            std::sin(u_class[i % 3]);
            flow.radius_residual =
                std::max(flow.radius_residual, std::abs(cur.v[i].norm2() - target));
        }
        for (int i = 0; i < 3; ++i) {
            flow.max_symmetry_error =
                std::max(flow.max_symmetry_error, (cur.v[i + 3] + cur.v[i]).norm());
        }
        if (k > 0) {
            const double dt = times[k] - times[k - 1];
            // chord/dt estimates only resolve the speed for a full-size step
            if (dt >= 0.25 * step) {
                for (int i = 0; i < 6; ++i) {
                    const double speed = distance(cur.v[i], states[k - 1].v[i]) / dt;
                    flow.max_speed_error = std::max(flow.max_speed_error, std::abs(speed - 1.0));
                }
            }
        }
    }

    // Closure against the initial slots at the recurrence time.
    const Joint at_return = stored.at(flow.return_time);
    flow.closure_defect = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 6; ++j) {
        flow.closure_defect = std::min(flow.closure_defect, distance(at_return.v[0], v0[j]));
    }
    flow.next_slot_defect = distance(at_return.v[0], v0[1]);

    // Closest approach of v1 to the next slot, golden-section refined around
    // the best sample.
    std::size_t best = 0;
    double best_distance = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < states.size(); ++k) {
        const double d = distance(states[k].v[0], v0[1]);
        if (d < best_distance) {
            best_distance = d;
            best = k;
        }
    }
    {
        double lo = times[best > 0 ? best - 1 : 0];
        double hi = times[std::min(best + 1, times.size() - 1)];
        const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
        double m1 = hi - inv_phi * (hi - lo);
        double m2 = lo + inv_phi * (hi - lo);
        double f1 = distance(stored.at(m1).v[0], v0[1]);
        double f2 = distance(stored.at(m2).v[0], v0[1]);
        for (int it = 0; it < 60 && hi - lo > 1e-13; ++it) {
            if (f1 < f2) {
                hi = m2;
                m2 = m1;
                f2 = f1;
                m1 = hi - inv_phi * (hi - lo);
                f1 = distance(stored.at(m1).v[0], v0[1]);
            } else {
                lo = m1;
                m1 = m2;
                f1 = f2;
                m2 = lo + inv_phi * (hi - lo);
                f2 = distance(stored.at(m2).v[0], v0[1]);
            }
        }
        flow.slot_time = 0.5 * (lo + hi);
    }

    return flow;
}

ClosureRow closure_row(EnergyLevel h, double step) {
    AngleState start;
    double duration;
    if (kOrbitEnergyMax - h <= 1e-9) {
        start = kRegularState;
        duration = 1.2 * kCircleSlotTime;
    } else {
        const TurningPoints tp = turning_points(h);
        start = {tp.u_minus, tp.u_minus};
        duration = 1.7 * period(h).t;
    }
    const VertexFlow flow = trace(start, duration, step);
    return {h, flow.closure_defect, flow.radius_residual};
}

std::vector<ClosureRow> closure_scan(std::span<const double> h_grid, double step) {
    std::vector<ClosureRow> rows;
    rows.reserve(h_grid.size());
    for (double h : h_grid) {
        rows.push_back(closure_row(h, step));
    }
    return rows;
}

}  // namespace carousel
