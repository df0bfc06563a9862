#include "carousel/polygon_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include "carousel/errors.hpp"
#include "carousel/scalar_kernel.hpp"

namespace carousel {

std::array<double, 6> Hexagon::side_lengths() const {
    std::array<double, 6> out{};
    for (int i = 0; i < 6; ++i) {
        out[i] = distance(v[i], v[(i + 1) % 6]);
    }
    return out;
}

std::array<double, 6> Hexagon::interior_angles() const {
    std::array<double, 6> out{};
    for (int i = 0; i < 6; ++i) {
        out[i] = interior_angle(v[(i + 5) % 6], v[i], v[(i + 1) % 6]);
    }
    return out;
}

double Hexagon::area() const { return polygon_area(std::span<const Vec2>(v)); }

bool Hexagon::convex() const { return polygon_convex(std::span<const Vec2>(v)); }

Hexagon hexagon_from_angles(const std::array<double, 6>& x, const HexagonBuildOptions& opts) {
    double sum = 0.0;
    for (double xi : x) {
        if (!(xi > kPi / 2.0 && xi < kPi)) {
            throw AngleSumInvalid("hexagon_from_angles: interior angle outside (pi/2, pi)");
        }
        sum += xi;
    }
    if (std::abs(sum - 4.0 * kPi) > opts.angle_sum_tol) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "hexagon_from_angles: angle sum off 4pi by %.3e",
                      sum - 4.0 * kPi);
        throw AngleSumInvalid(buf);
    }

    Hexagon h;
    h.v[0] = {0.0, 0.0};
    double heading = 0.0;
    for (int i = 0; i < 5; ++i) {
        h.v[i + 1] = h.v[i] + 2.0 * unit_direction(heading);
        heading += kPi - x[i + 1];
    }
    const Vec2 closing = h.v[5] + 2.0 * unit_direction(heading);
    const double gap = distance(closing, h.v[0]);
    if (gap > opts.closure_tol) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "hexagon_from_angles: walk misses closure by %.3e", gap);
        throw NonClosure(buf);
    }
    return h;
}

double central_symmetry_defect(const Hexagon& h) {
    const Vec2 m0 = midpoint(h.v[0], h.v[3]);
    double defect = 0.0;
    for (int i = 1; i < 3; ++i) {
        defect = std::max(defect, distance(midpoint(h.v[i], h.v[i + 3]), m0));
    }
    return defect;
}

InteriorTriangle interior_triangle(const std::array<double, 6>& x) {
    const double odd = x[0] + x[2] + x[4];
    const double even = x[1] + x[3] + x[5];
    if (std::abs(odd - 2.0 * kPi) > 1e-9 || std::abs(even - 2.0 * kPi) > 1e-9) {
        throw SumConstraintViolated("interior_triangle: odd/even angle sums must both be 2pi");
    }
    InteriorTriangle t;
    t.psi = {x[1] - 0.5 * x[4], x[3] - 0.5 * x[0], x[5] - 0.5 * x[2]};
    t.side = {4.0 * std::sin(0.5 * x[4]), 4.0 * std::sin(0.5 * x[0]), 4.0 * std::sin(0.5 * x[2])};
    return t;
}

// --- curves ---------------------------------------------------------------

namespace {

double wrap_arc_length(double t, double perimeter) {
    double w = std::fmod(t, perimeter);
    if (w < 0.0) w += perimeter;
    return w;
}

}  // namespace

Circle::Circle(double radius) : radius_(radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("Circle: radius must be positive");
}

double Circle::perimeter() const { return 2.0 * kPi * radius_; }

Vec2 Circle::point(double t) const {
    const double phi = wrap_arc_length(t, perimeter()) / radius_;
    return {radius_ * std::cos(phi), radius_ * std::sin(phi)};
}

Vec2 Circle::unit_tangent(double t) const {
    const double phi = wrap_arc_length(t, perimeter()) / radius_;
    return {-std::sin(phi), std::cos(phi)};
}

Ellipse::Ellipse(double semi_a, double semi_b) : a_(semi_a), b_(semi_b) {
    if (!(semi_a > 0.0) || !(semi_b > 0.0)) {
        throw std::invalid_argument("Ellipse: semi-axes must be positive");
    }
    constexpr int kIntervals = 4096;
    arc_table_.resize(kIntervals + 1);
    arc_table_[0] = 0.0;
    const auto speed = [this](double phi) {
        const double sx = a_ * std::sin(phi);
        const double cy = b_ * std::cos(phi);
        return std::sqrt(sx * sx + cy * cy);
    };
    const double h = 2.0 * kPi / kIntervals;
    for (int k = 0; k < kIntervals; ++k) {
        const double p0 = k * h;
        // Simpson on each interval; knots are exact to the rule's O(h^5).
        arc_table_[k + 1] =
            arc_table_[k] + h / 6.0 * (speed(p0) + 4.0 * speed(p0 + 0.5 * h) + speed(p0 + h));
    }
}

double Ellipse::perimeter() const { return arc_table_.back(); }

double Ellipse::parameter_at(double t) const {
    const double s = wrap_arc_length(t, perimeter());
    const auto it = std::upper_bound(arc_table_.begin(), arc_table_.end(), s);
    const std::size_t k = std::min<std::size_t>(arc_table_.size() - 2,
                                                it == arc_table_.begin() ? 0 : (it - arc_table_.begin() - 1));
    const double seg = arc_table_[k + 1] - arc_table_[k];
    const double frac = seg > 0.0 ? (s - arc_table_[k]) / seg : 0.0;
    const double h = 2.0 * kPi / static_cast<double>(arc_table_.size() - 1);
    return (static_cast<double>(k) + frac) * h;
}

Vec2 Ellipse::point(double t) const {
    const double phi = parameter_at(t);
    return {a_ * std::cos(phi), b_ * std::sin(phi)};
}

Vec2 Ellipse::unit_tangent(double t) const {
    const double phi = parameter_at(t);
    return normalized({-a_ * std::sin(phi), b_ * std::cos(phi)});
}

std::unique_ptr<CurveEvaluator> make_curve(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) {
        throw std::invalid_argument("curve spec must be circle:R or ellipse:a,b");
    }
    const std::string kind(spec.substr(0, colon));
    const std::string args(spec.substr(colon + 1));
    try {
        if (kind == "circle") {
            std::size_t used = 0;
            const double r = std::stod(args, &used);
            if (used != args.size()) throw std::invalid_argument("trailing characters");
            return std::make_unique<Circle>(r);
        }
        if (kind == "ellipse") {
            const auto comma = args.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("missing comma");
            std::size_t used = 0;
            const std::string first = args.substr(0, comma);
            const std::string second = args.substr(comma + 1);
            const double a = std::stod(first, &used);
            if (used != first.size()) throw std::invalid_argument("trailing characters");
            const double b = std::stod(second, &used);
            if (used != second.size()) throw std::invalid_argument("trailing characters");
            return std::make_unique<Ellipse>(a, b);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad curve spec '" + std::string(spec) +
                                    "', expected circle:R or ellipse:a,b");
    }
    throw std::invalid_argument("unknown curve kind '" + kind + "'");
}

InscribedPolygon inscribed_polygon(const CurveEvaluator& curve, double t, int n) {
    if (n < 3) throw std::invalid_argument("inscribed_polygon: need n >= 3");
    InscribedPolygon poly;
    poly.vertices.reserve(n);
    const double spacing = curve.perimeter() / n;
    for (int i = 0; i < n; ++i) {
        poly.vertices.push_back(curve.point(t + i * spacing));
    }
    poly.sides.resize(n);
    poly.angles.resize(n);
    for (int i = 0; i < n; ++i) {
        poly.sides[i] = distance(poly.vertices[i], poly.vertices[(i + 1) % n]);
        if (poly.sides[i] < 1e-12) {
            throw DegenerateCurve("inscribed_polygon: repeated points on the curve");
        }
    }
    for (int i = 0; i < n; ++i) {
        poly.angles[i] = interior_angle(poly.vertices[(i + n - 1) % n], poly.vertices[i],
                                        poly.vertices[(i + 1) % n]);
    }
    return poly;
}

double carousel_defect(const CurveEvaluator& curve, int n, int t_samples) {
    if (n < 3 || t_samples < 2) {
        throw std::invalid_argument("carousel_defect: need n >= 3 and t_samples >= 2");
    }
    const double perimeter = curve.perimeter();
    std::vector<double> sides;
    sides.reserve(static_cast<std::size_t>(n) * t_samples);
    for (int j = 0; j < t_samples; ++j) {
        const InscribedPolygon poly = inscribed_polygon(curve, perimeter * j / t_samples, n);
        sides.insert(sides.end(), poly.sides.begin(), poly.sides.end());
    }
    double mean = 0.0;
    for (double s : sides) mean += s;
    mean /= static_cast<double>(sides.size());
    double defect = 0.0;
    for (double s : sides) defect = std::max(defect, std::abs(s - mean));
    return defect;
}

double midpoint_parallel_defect(const CurveEvaluator& curve, int n, double t, double dt) {
    if (n < 3) throw std::invalid_argument("midpoint_parallel_defect: need n >= 3");
    if (!(dt > 0.0)) throw std::invalid_argument("midpoint_parallel_defect: need dt > 0");
    const double spacing = curve.perimeter() / n;
    double defect = 0.0;
    for (int i = 0; i < n; ++i) {
        const double ti = t + i * spacing;
        const Vec2 a0 = curve.point(ti - dt);
        const Vec2 b0 = curve.point(ti + spacing - dt);
        const Vec2 a1 = curve.point(ti + dt);
        const Vec2 b1 = curve.point(ti + spacing + dt);
        const Vec2 velocity = (midpoint(a1, b1) - midpoint(a0, b0)) / (2.0 * dt);
        const Vec2 side = curve.point(ti + spacing) - curve.point(ti);
        const double scale = velocity.norm() * side.norm();
        if (scale > 0.0) {
            defect = std::max(defect, std::abs(cross(velocity, side)) / scale);
        }
    }
    return defect;
}

std::vector<Vec2> rescale_to_side(std::span<const Vec2> polygon, double target_side) {
    if (polygon.size() < 3) throw std::invalid_argument("rescale_to_side: need a polygon");
    double mean = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        mean += distance(polygon[i], polygon[(i + 1) % polygon.size()]);
    }
    mean /= static_cast<double>(polygon.size());
    if (!(mean > 0.0)) throw DegenerateCurve("rescale_to_side: degenerate polygon");
    const double k = target_side / mean;
    std::vector<Vec2> out(polygon.begin(), polygon.end());
    for (Vec2& p : out) p = k * p;
    return out;
}

}  // namespace carousel
