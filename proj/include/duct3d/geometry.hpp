#pragma once

#include <cmath>
#include <vector>

namespace duct3d {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    bool operator==(const Vec2&) const = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }
inline Vec2 normalized(Vec2 a) {
    const double n = norm(a);
    return n > 0.0 ? a / n : Vec2{1.0, 0.0};
}
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline Vec2 rotate(Vec2 a, double rad) {
    const double c = std::cos(rad), s = std::sin(rad);
    return {a.x * c - a.y * s, a.x * s + a.y * c};
}

// Signed shoelace area. Positive for the orientation the contour tracer
// emits for outer borders.
double polygon_area(const std::vector<Vec2>& poly);

double polygon_perimeter(const std::vector<Vec2>& poly);

// Even-odd point containment test.
bool point_in_polygon(Vec2 p, const std::vector<Vec2>& poly);

// Distance from p to the boundary of the polygon (edges, not interior).
double point_to_polygon_boundary(Vec2 p, const std::vector<Vec2>& poly);

// Andrew monotone chain. Returns hull without repeated endpoint.
std::vector<Vec2> convex_hull(std::vector<Vec2> pts);

// Rotated rectangle described by its center, unit axis along the long side
// and the two extents. length >= width.
struct OrientedRect {
    Vec2 center;
    Vec2 axis;  // unit, along length
    double length = 0.0;
    double width = 0.0;

    std::vector<Vec2> corners() const;
    double area() const { return length * width; }
};

// Minimum-area enclosing rectangle via rotating calipers over the hull.
OrientedRect min_area_rect(const std::vector<Vec2>& pts);

// Douglas-Peucker on a closed polyline, anchored at the two mutually
// farthest points. Returns the retained vertices in original order.
std::vector<Vec2> simplify_closed(const std::vector<Vec2>& poly, double eps);

}  // namespace duct3d
