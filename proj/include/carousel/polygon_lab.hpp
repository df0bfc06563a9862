#pragma once

#include <array>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "carousel/geometry.hpp"

namespace carousel {

// Convex equilateral hexagon with side length 2, vertices in counterclockwise
// cyclic order.
struct Hexagon {
    std::array<Vec2, 6> v{};

    std::array<double, 6> side_lengths() const;
    std::array<double, 6> interior_angles() const;
    double area() const;
    bool convex() const;
};

struct HexagonBuildOptions {
    double angle_sum_tol = 1e-9;
    double closure_tol = 1e-9;
};

// Turtle construction: sides of length 2, turning by pi - x_i at each vertex,
// first vertex at the origin with the first edge along +x. Throws
// AngleSumInvalid when the angles do not sum to 4 pi (or leave (pi/2, pi)),
// NonClosure when an admissible angle set fails to close into a hexagon.
Hexagon hexagon_from_angles(const std::array<double, 6>& x, const HexagonBuildOptions& opts = {});

// max_i |mid(v_i, v_{i+3}) - mid(v_1, v_4)|; zero iff the opposite-vertex
// midpoints coincide.
double central_symmetry_defect(const Hexagon& h);

// Triangle on the alternate vertices v2, v4, v6: psi_1 = x2 - x5/2 (cyclic),
// side lengths l_1 = 4 sin(x5/2) (cyclic, l_i opposite psi_i).
struct InteriorTriangle {
    std::array<double, 3> psi{};
    std::array<double, 3> side{};
};

// Requires odd and even angle sums both 2 pi; throws SumConstraintViolated.
InteriorTriangle interior_triangle(const std::array<double, 6>& x);

// Closed convex curve parametrized by arc length mod perimeter.
class CurveEvaluator {
public:
    virtual ~CurveEvaluator() = default;
    virtual double perimeter() const = 0;
    virtual Vec2 point(double t) const = 0;
    virtual Vec2 unit_tangent(double t) const = 0;
};

class Circle final : public CurveEvaluator {
public:
    explicit Circle(double radius);
    double perimeter() const override;
    Vec2 point(double t) const override;
    Vec2 unit_tangent(double t) const override;

private:
    double radius_;
};

// Axis-aligned ellipse. Arc length has no closed-form inverse, so the
// parameter is recovered from a cumulative-length table (4096 intervals,
// Simpson per interval, linear interpolation between knots).
class Ellipse final : public CurveEvaluator {
public:
    Ellipse(double semi_a, double semi_b);
    double perimeter() const override;
    Vec2 point(double t) const override;
    Vec2 unit_tangent(double t) const override;

private:
    double parameter_at(double t) const;

    double a_;
    double b_;
    std::vector<double> arc_table_;
};

// Parses "circle:R" or "ellipse:a,b"; throws std::invalid_argument otherwise.
std::unique_ptr<CurveEvaluator> make_curve(std::string_view spec);

struct InscribedPolygon {
    std::vector<Vec2> vertices;
    std::vector<double> sides;
    std::vector<double> angles;
};

// Vertices at equal arc-length spacing perimeter/n starting at t.
// Throws DegenerateCurve on repeated points.
InscribedPolygon inscribed_polygon(const CurveEvaluator& curve, double t, int n);

// max over sampled t and i of | |v_{i+1}(t) - v_i(t)| - mean side |; zero
// characterizes a carousel.
double carousel_defect(const CurveEvaluator& curve, int n, int t_samples);

// Normalized cross product of each side midpoint velocity (central finite
// difference, spacing dt) with its side; near zero for genuine carousels.
double midpoint_parallel_defect(const CurveEvaluator& curve, int n, double t, double dt);

// Scales a vertex list about the origin so the mean side length becomes
// `target_side` (the normalized frame uses side 2).
std::vector<Vec2> rescale_to_side(std::span<const Vec2> polygon, double target_side = 2.0);

}  // namespace carousel
