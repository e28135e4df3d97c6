#include "duct3d/geometry.hpp"

#include <algorithm>
#include <limits>

namespace duct3d {

double polygon_area(const std::vector<Vec2>& poly) {
    const size_t n = poly.size();
    if (n < 3) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[(i + 1) % n];
        acc += cross(a, b);
    }
    return 0.5 * acc;
}

double polygon_perimeter(const std::vector<Vec2>& poly) {
    const size_t n = poly.size();
    if (n < 2) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) acc += dist(poly[i], poly[(i + 1) % n]);
    return acc;
}

bool point_in_polygon(Vec2 p, const std::vector<Vec2>& poly) {
    bool inside = false;
    const size_t n = poly.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Vec2& a = poly[i];
        const Vec2& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xcross = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < xcross) inside = !inside;
        }
    }
    return inside;
}

namespace {

double point_to_segment(Vec2 p, Vec2 a, Vec2 b) {
    const Vec2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return dist(p, a);
    const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
    return dist(p, a + ab * t);
}

}  // namespace

double point_to_polygon_boundary(Vec2 p, const std::vector<Vec2>& poly) {
    const size_t n = poly.size();
    if (n == 0) return std::numeric_limits<double>::infinity();
    if (n == 1) return dist(p, poly[0]);
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i)
        best = std::min(best, point_to_segment(p, poly[i], poly[(i + 1) % n]));
    return best;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
    std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n < 3) return pts;

    std::vector<Vec2> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<Vec2> OrientedRect::corners() const {
    const Vec2 u = axis * (length * 0.5);
    const Vec2 v = perp(axis) * (width * 0.5);
    return {center - u - v, center + u - v, center + u + v, center - u + v};
}

OrientedRect min_area_rect(const std::vector<Vec2>& pts) {
    OrientedRect best;
    std::vector<Vec2> hull = convex_hull(pts);
    if (hull.empty()) return best;
    if (hull.size() == 1) {
        best.center = hull[0];
        best.axis = {1.0, 0.0};
        return best;
    }

    double best_area = std::numeric_limits<double>::infinity();
    const size_t n = hull.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2 e = hull[(i + 1) % n] - hull[i];
        const double elen = norm(e);
        if (elen <= 0.0) continue;
        const Vec2 u = e / elen;
        const Vec2 v = perp(u);
        double umin = std::numeric_limits<double>::infinity(), umax = -umin;
        double vmin = umin, vmax = -umin;
        for (const Vec2& p : hull) {
            const double pu = dot(p, u), pv = dot(p, v);
            umin = std::min(umin, pu);
            umax = std::max(umax, pu);
            vmin = std::min(vmin, pv);
            vmax = std::max(vmax, pv);
        }
        const double du = umax - umin, dv = vmax - vmin;
        const double area = du * dv;
        if (area < best_area - 1e-12) {
            best_area = area;
            const Vec2 c = u * ((umin + umax) * 0.5) + v * ((vmin + vmax) * 0.5);
            best.center = c;
            if (du >= dv) {
                best.axis = u;
                best.length = du;
                best.width = dv;
            } else {
                best.axis = v;
                best.length = dv;
                best.width = du;
            }
        }
    }
    return best;
}

namespace {

// Recursive half of Douglas-Peucker over poly[first..last] (indices kept).
void dp_keep(const std::vector<Vec2>& poly, size_t first, size_t last, double eps,
             std::vector<char>& keep) {
    if (last <= first + 1) return;
    const Vec2 a = poly[first], b = poly[last];
    double worst = -1.0;
    size_t worst_i = first;
    for (size_t i = first + 1; i < last; ++i) {
        const double d = point_to_segment(poly[i], a, b);
        if (d > worst) {
            worst = d;
            worst_i = i;
        }
    }
    if (worst > eps) {
        keep[worst_i] = 1;
        dp_keep(poly, first, worst_i, eps, keep);
        dp_keep(poly, worst_i, last, eps, keep);
    }
}

}  // namespace

std::vector<Vec2> simplify_closed(const std::vector<Vec2>& poly, double eps) {
    const size_t n = poly.size();
    if (n < 3) return poly;

    // Anchor at the two mutually farthest vertices so the split does not
    // depend on where the trace started.
    size_t ia = 0, ib = 0;
    double best = -1.0;
    size_t step = std::max<size_t>(1, n / 256);  // coarse pass, refined below
    for (size_t i = 0; i < n; i += step) {
        for (size_t j = i + 1; j < n; j += step) {
            const double d = dist(poly[i], poly[j]);
            if (d > best) {
                best = d;
                ia = i;
                ib = j;
            }
        }
    }
    for (int round = 0; round < 4; ++round) {
        for (size_t j = 0; j < n; ++j) {
            if (dist(poly[ia], poly[j]) > best) {
                best = dist(poly[ia], poly[j]);
                ib = j;
            }
        }
        std::swap(ia, ib);
    }
    if (ia > ib) std::swap(ia, ib);

    // Unroll into a chain starting at ia.
    std::vector<Vec2> chain(n + 1);
    for (size_t i = 0; i <= n; ++i) chain[i] = poly[(ia + i) % n];
    const size_t mid = ib - ia;

    std::vector<char> keep(n + 1, 0);
    keep[0] = keep[mid] = keep[n] = 1;
    dp_keep(chain, 0, mid, eps, keep);
    dp_keep(chain, mid, n, eps, keep);

    std::vector<Vec2> out;
    for (size_t i = 0; i < n; ++i)
        if (keep[i]) out.push_back(chain[i]);
    return out;
}

}  // namespace duct3d
