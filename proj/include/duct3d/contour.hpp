#pragma once

#include <vector>

#include "duct3d/raster.hpp"

namespace duct3d {

// One traced border. Points form a closed 8-connected cycle: consecutive
// points (and last back to first) differ by at most one in each axis.
struct Contour {
    enum class Polarity { Outer, Hole };

    std::vector<PixelPoint> points;
    Polarity polarity = Polarity::Outer;
    int parent = -1;            // contour id, -1 for top level
    std::vector<int> children;  // contour ids

    bool is_outer() const { return polarity == Polarity::Outer; }
};

// Full border hierarchy of one image. Ids are dense 0..n-1 indices into
// `contours`; parent/child links form a forest.
struct ContourSet {
    std::vector<Contour> contours;
    int image_width = 0;
    int image_height = 0;
};

// Border following over the foreground mask: 8-connected foreground,
// 4-connected background. Every foreground component yields exactly one
// outer contour and each enclosed background region one hole contour;
// nesting mirrors geometric containment. Pixels on the image frame are
// treated as background-adjacent. Deterministic: row-major scan from the
// top-left.
ContourSet trace_contours(const BinaryImage& img);

// Signed shoelace area of the traced cycle, in square pixels over the
// pixel-center lattice. Positive for outer contours, negative for holes,
// as emitted by trace_contours; reversing a contour flips the sign.
double contour_area(const Contour& c);

// Sum of step lengths around the cycle (diagonal steps count sqrt(2)).
double contour_path_length(const Contour& c);

// Number of pixels enclosed by an outer border, holes included
// (the component footprint).
double region_pixel_area(const Contour& outer);

// Number of background pixels strictly inside a hole border.
double hole_pixel_area(const Contour& hole);

// Axis-aligned bounds of the contour points.
struct PixelBox {
    int x0 = 0, y0 = 0, x1 = -1, y1 = -1;  // inclusive; empty when x1 < x0
    int width() const { return x1 - x0 + 1; }
    int height() const { return y1 - y0 + 1; }
};
PixelBox contour_bounds(const Contour& c);

}  // namespace duct3d
