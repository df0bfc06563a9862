#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace carousel {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double k) const { return {k * x, k * y}; }
    Vec2 operator/(double k) const { return {x / k, y / k}; }
    Vec2& operator+=(Vec2 o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2 operator-() const { return {-x, -y}; }

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
};

inline Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double distance(Vec2 a, Vec2 b) { return (a - b).norm(); }
inline Vec2 midpoint(Vec2 a, Vec2 b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

inline Vec2 normalized(Vec2 v) {
    const double n = v.norm();
    return {v.x / n, v.y / n};
}

inline Vec2 rotated(Vec2 v, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
}

inline Vec2 unit_direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Interior angle at `at` between the rays toward `next` and `prev`.
// Positive and below pi at every vertex of a counterclockwise convex polygon.
inline double interior_angle(Vec2 prev, Vec2 at, Vec2 next) {
    const Vec2 a = next - at;
    const Vec2 b = prev - at;
    return std::atan2(cross(a, b), dot(a, b));
}

// Shoelace area, positive for counterclockwise orientation.
inline double polygon_area(std::span<const Vec2> poly) {
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Vec2 a = poly[i];
        const Vec2 b = poly[(i + 1) % poly.size()];
        twice += cross(a, b);
    }
    return 0.5 * twice;
}

inline bool polygon_convex(std::span<const Vec2> poly) {
    const std::size_t n = poly.size();
    if (n < 3) return false;
    int sign = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 e0 = poly[(i + 1) % n] - poly[i];
        const Vec2 e1 = poly[(i + 2) % n] - poly[(i + 1) % n];
        const double c = cross(e0, e1);
        if (c == 0.0) continue;
        const int s = c > 0.0 ? 1 : -1;
        if (sign == 0) {
            sign = s;
        } else if (s != sign) {
            return false;
        }
    }
    return sign != 0;
}

}  // namespace carousel
