#include "duct3d/calibrate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "duct3d/log.hpp"

namespace duct3d {

namespace {

constexpr double kEquilateralTol = 0.02;
constexpr double kStartEpsFraction = 0.02;  // of perimeter
constexpr double kMaxEpsFraction = 0.10;
constexpr double kAreaAgreement = 0.15;  // triangle area vs contour footprint
constexpr double kMinSidePx = 10.0;

std::vector<Vec2> to_vec2(const std::vector<PixelPoint>& pts) {
    std::vector<Vec2> out;
    out.reserve(pts.size());
    for (const PixelPoint& p : pts) out.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
    return out;
}

// Re-anchor each vertex to the contour point farthest from the line through
// the other two; stabilizes corners against raster jitter.
std::array<Vec2, 3> refine_vertices(const std::vector<Vec2>& contour, std::array<Vec2, 3> v) {
    for (int round = 0; round < 2; ++round) {
        for (int i = 0; i < 3; ++i) {
            const Vec2 a = v[(i + 1) % 3], b = v[(i + 2) % 3];
            const Vec2 ab = normalized(b - a);
            double best = -1.0;
            Vec2 best_p = v[i];
            for (const Vec2& p : contour) {
                const double d = std::abs(cross(ab, p - a));
                if (d > best) {
                    best = d;
                    best_p = p;
                }
            }
            v[i] = best_p;
        }
    }
    return v;
}

std::optional<std::array<Vec2, 3>> try_triangle(const Contour& c) {
    if (c.points.size() < 3) return std::nullopt;
    const std::vector<Vec2> poly = to_vec2(c.points);
    const double perimeter = polygon_perimeter(poly);
    if (perimeter <= 0.0) return std::nullopt;

    for (double frac = kStartEpsFraction; frac <= kMaxEpsFraction; frac *= 1.25) {
        std::vector<Vec2> simple = simplify_closed(poly, frac * perimeter);
        if (simple.size() > 3) continue;
        if (simple.size() < 3) return std::nullopt;

        std::array<Vec2, 3> v{simple[0], simple[1], simple[2]};
        v = refine_vertices(poly, v);

        const double s01 = dist(v[0], v[1]);
        const double s12 = dist(v[1], v[2]);
        const double s20 = dist(v[2], v[0]);
        const double mean = (s01 + s12 + s20) / 3.0;
        if (mean < kMinSidePx) return std::nullopt;
        const double worst =
            std::max({std::abs(s01 - mean), std::abs(s12 - mean), std::abs(s20 - mean)});
        if (worst > kEquilateralTol * mean) return std::nullopt;

        // The contour footprint must actually be the triangle, not a larger
        // shape whose simplification collapsed.
        const double tri_area = std::abs(polygon_area({v[0], v[1], v[2]}));
        const double footprint = region_pixel_area(c);
        if (footprint <= 0.0) return std::nullopt;
        if (std::abs(tri_area - footprint) > kAreaAgreement * footprint) return std::nullopt;

        return v;
    }
    return std::nullopt;
}

}  // namespace

ReferenceNode find_reference(const ContourSet& cs) {
    std::vector<std::pair<int, std::array<Vec2, 3>>> candidates;
    for (int i = 0; i < static_cast<int>(cs.contours.size()); ++i) {
        const Contour& c = cs.contours[i];
        if (!c.is_outer()) continue;
        if (auto v = try_triangle(c)) candidates.emplace_back(i, *v);
    }

    if (candidates.empty())
        throw CalibrationError(CalibrationError::Kind::NotFound,
                               "no reference triangle found in drawing");
    if (candidates.size() > 1)
        throw CalibrationError(CalibrationError::Kind::Ambiguous,
                               std::to_string(candidates.size()) +
                                   " reference-triangle candidates found; expected exactly one");

    auto [id, v] = candidates.front();

    // Counterclockwise (positive shoelace in pixel coordinates), topmost
    // vertex first.
    if (polygon_area({v[0], v[1], v[2]}) < 0.0) std::swap(v[1], v[2]);
    int top = 0;
    for (int i = 1; i < 3; ++i) {
        if (v[i].y < v[top].y || (v[i].y == v[top].y && v[i].x < v[top].x)) top = i;
    }
    std::rotate(v.begin(), v.begin() + top, v.end());

    ReferenceNode ref;
    for (int i = 0; i < 3; ++i)
        ref.vertices[i] = {static_cast<int>(std::lround(v[i].x)),
                           static_cast<int>(std::lround(v[i].y))};
    ref.side_px = (dist(v[0], v[1]) + dist(v[1], v[2]) + dist(v[2], v[0])) / 3.0;
    ref.centroid_px = (v[0] + v[1] + v[2]) / 3.0;
    ref.contour_id = id;
    log::debug("reference triangle at (" + std::to_string(ref.centroid_px.x) + ", " +
               std::to_string(ref.centroid_px.y) + "), side " + std::to_string(ref.side_px) +
               " px");
    return ref;
}

double compute_scale(const ReferenceNode& ref) { return ref.side_mm / ref.side_px; }

}  // namespace duct3d
