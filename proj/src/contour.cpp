#include "duct3d/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace duct3d {

namespace {

// Clockwise 8-neighbourhood in screen coordinates (y down), starting east.
constexpr int kDx[8] = {1, 1, 0, -1, -1, -1, 0, 1};
constexpr int kDy[8] = {0, 1, 1, 1, 0, -1, -1, -1};

int dir_between(int from_x, int from_y, int to_x, int to_y) {
    const int dx = to_x - from_x, dy = to_y - from_y;
    for (int d = 0; d < 8; ++d)
        if (kDx[d] == dx && kDy[d] == dy) return d;
    return -1;
}

double cycle_area(const std::vector<PixelPoint>& pts) {
    const size_t n = pts.size();
    if (n < 3) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const PixelPoint& a = pts[i];
        const PixelPoint& b = pts[(i + 1) % n];
        acc += static_cast<double>(a.x) * b.y - static_cast<double>(b.x) * a.y;
    }
    return 0.5 * acc;
}

}  // namespace

ContourSet trace_contours(const BinaryImage& img) {
    const int w = img.width(), h = img.height();
    const int pw = w + 2, ph = h + 2;

    // Padded working grid: 0 background, 1 unvisited foreground, +-nbd marks.
    std::vector<std::int32_t> f(static_cast<size_t>(pw) * ph, 0);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (img.at(x, y)) f[static_cast<size_t>(y + 1) * pw + (x + 1)] = 1;

    auto fat = [&](int x, int y) -> std::int32_t& { return f[static_cast<size_t>(y) * pw + x]; };

    ContourSet out;
    out.image_width = w;
    out.image_height = h;

    // Border bookkeeping. Slot 1 is the implicit frame (a hole border whose
    // parent is the background); real borders start at nbd = 2 and map to
    // contour id nbd - 2.
    std::vector<Contour::Polarity> border_type = {Contour::Polarity::Hole,
                                                  Contour::Polarity::Hole};
    std::vector<int> border_parent = {0, 0};  // in nbd space, 0 = none

    std::int32_t nbd = 1;

    for (int y = 1; y <= h; ++y) {
        std::int32_t lnbd = 1;
        for (int x = 1; x <= w; ++x) {
            const std::int32_t fxy = fat(x, y);
            if (fxy == 0) continue;

            bool outer = false, hole = false;
            int sx = 0, sy = 0;  // first probe position
            if (fxy == 1 && fat(x - 1, y) == 0) {
                outer = true;
                sx = x - 1;
                sy = y;
            } else if (fxy >= 1 && fat(x + 1, y) == 0) {
                hole = true;
                sx = x + 1;
                sy = y;
                if (fxy > 1) lnbd = fxy;
            }

            if (outer || hole) {
                ++nbd;
                const Contour::Polarity type =
                    hole ? Contour::Polarity::Hole : Contour::Polarity::Outer;

                // Parent from the last border met on this row.
                const Contour::Polarity ltype = border_type[lnbd];
                int parent_nbd;
                if (type == ltype)
                    parent_nbd = border_parent[lnbd];
                else
                    parent_nbd = lnbd;
                border_type.push_back(type);
                border_parent.push_back(parent_nbd);

                std::vector<PixelPoint> pts;

                // Probe clockwise around (x, y) starting from (sx, sy).
                const int start_dir = dir_between(x, y, sx, sy);
                int found = -1;
                for (int k = 0; k < 8; ++k) {
                    const int d = (start_dir + k) % 8;
                    if (fat(x + kDx[d], y + kDy[d]) != 0) {
                        found = d;
                        break;
                    }
                }

                if (found < 0) {
                    // Isolated pixel.
                    fat(x, y) = -nbd;
                    pts.push_back({x - 1, y - 1});
                } else {
                    int px1 = x + kDx[found], py1 = y + kDy[found];  // (i1, j1)
                    int px2 = px1, py2 = py1;                        // trailing neighbour
                    int cx = x, cy = y;                              // current border pixel
                    while (true) {
                        // Counterclockwise probe around (cx, cy) starting just
                        // after (px2, py2); remember if east got examined as 0.
                        const int back = dir_between(cx, cy, px2, py2);
                        bool east_was_zero = false;
                        int nx = 0, ny = 0;
                        for (int k = 1; k <= 8; ++k) {
                            const int d = (back - k + 16) % 8;
                            const int qx = cx + kDx[d], qy = cy + kDy[d];
                            if (fat(qx, qy) != 0) {
                                nx = qx;
                                ny = qy;
                                break;
                            }
                            if (d == 0) east_was_zero = true;
                        }

                        if (east_was_zero)
                            fat(cx, cy) = -nbd;
                        else if (fat(cx, cy) == 1)
                            fat(cx, cy) = nbd;
                        pts.push_back({cx - 1, cy - 1});

                        if (nx == x && ny == y && cx == px1 && cy == py1) break;
                        px2 = cx;
                        py2 = cy;
                        cx = nx;
                        cy = ny;
                    }
                    // The loop emits the start pixel twice (entry and closing
                    // visit) unless the border is that short on purpose.
                    if (pts.size() > 1 && pts.front() == pts.back()) pts.pop_back();
                }

                // Canonical orientation: outer positive, hole negative.
                const double a = cycle_area(pts);
                const bool flip = (type == Contour::Polarity::Outer) ? (a < 0.0) : (a > 0.0);
                if (flip) std::reverse(pts.begin() + 1, pts.end());

                Contour c;
                c.points = std::move(pts);
                c.polarity = type;
                c.parent = parent_nbd >= 2 ? parent_nbd - 2 : -1;
                out.contours.push_back(std::move(c));
            }

            if (fat(x, y) != 1) lnbd = std::abs(fat(x, y));
        }
    }

    for (int i = 0; i < static_cast<int>(out.contours.size()); ++i)
        if (out.contours[i].parent >= 0)
            out.contours[out.contours[i].parent].children.push_back(i);

    return out;
}

double contour_area(const Contour& c) { return cycle_area(c.points); }

double contour_path_length(const Contour& c) {
    const size_t n = c.points.size();
    if (n < 2) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const PixelPoint& a = c.points[i];
        const PixelPoint& b = c.points[(i + 1) % n];
        const int dx = std::abs(a.x - b.x), dy = std::abs(a.y - b.y);
        acc += (dx + dy == 2 && dx == 1) ? std::numbers::sqrt2 : 1.0;
    }
    return acc;
}

namespace {

// Cycle step count; degenerate single points contribute nothing.
double cycle_steps(const Contour& c) {
    return c.points.size() >= 2 ? static_cast<double>(c.points.size()) : 0.0;
}

}  // namespace

double region_pixel_area(const Contour& outer) {
    // Pick-style count of pixel centers on or inside the traced cycle.
    return std::abs(contour_area(outer)) + cycle_steps(outer) / 2.0 + 1.0;
}

double hole_pixel_area(const Contour& hole) {
    const double a = std::abs(contour_area(hole)) - cycle_steps(hole) / 2.0 + 1.0;
    return std::max(0.0, a);
}

PixelBox contour_bounds(const Contour& c) {
    PixelBox b;
    if (c.points.empty()) return b;
    b.x0 = b.x1 = c.points[0].x;
    b.y0 = b.y1 = c.points[0].y;
    for (const PixelPoint& p : c.points) {
        b.x0 = std::min(b.x0, p.x);
        b.x1 = std::max(b.x1, p.x);
        b.y0 = std::min(b.y0, p.y);
        b.y1 = std::max(b.y1, p.y);
    }
    return b;
}

}  // namespace duct3d
