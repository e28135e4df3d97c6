#pragma once

#include <array>
#include <stdexcept>

#include "duct3d/contour.hpp"
#include "duct3d/geometry.hpp"

namespace duct3d {

// The scale reference: an equilateral triangle of known physical size drawn
// somewhere on the sheet.
struct ReferenceNode {
    std::array<PixelPoint, 3> vertices{};  // counterclockwise, topmost first
    double side_px = 0.0;                  // mean of the three side lengths
    double side_mm = kReferenceSideMm;
    Vec2 centroid_px;                      // reported so callers can cross-check position
    int contour_id = -1;                   // outer contour the triangle came from
};

struct CalibrationError : std::runtime_error {
    enum class Kind { NotFound, Ambiguous };
    Kind kind;
    CalibrationError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Scans the outer contours for the unique shape that simplifies to three
// vertices and passes the equilateral check (pairwise sides within 2% of
// their mean). Filled and outlined triangles both match, since only the
// outer border is inspected. Throws CalibrationError when no candidate or
// more than one candidate passes.
ReferenceNode find_reference(const ContourSet& cs);

// side_mm / side_px. Homogeneous: doubling side_px halves the result.
double compute_scale(const ReferenceNode& ref);

}  // namespace duct3d
