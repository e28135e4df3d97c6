#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "duct3d/config.hpp"
#include "duct3d/contour.hpp"
#include "duct3d/geometry.hpp"

namespace duct3d {

enum class ObjectKind { Duct, Elbow, Tee, Cross, Other };

std::string to_string(ObjectKind k);
std::optional<ObjectKind> kind_from_string(const std::string& s);

// A recognized duct: oriented rectangle plus its nine spatial coordinates
// (four corners, four edge midpoints, center). Corners run counterclockwise
// (positive shoelace in pixel coordinates) starting from the topmost corner;
// midpoints[i] bisects edge (corners[i], corners[i+1]).
struct DuctShape {
    std::array<PixelPoint, 4> corners{};
    std::array<PixelPoint, 4> midpoints{};
    PixelPoint center{};
    Vec2 axis{1.0, 0.0};  // unit, along the long edge
    double length_px = 0.0;
    double width_px = 0.0;

    // Sub-pixel rectangle the integer coordinates were rounded from.
    OrientedRect rect;
    int contour_id = -1;

    // The two short-edge midpoints (duct ends), sub-pixel.
    std::array<Vec2, 2> endpoints_px() const;
};

// A group of mutually-near duct endpoints.
struct Junction {
    Vec2 location_px;
    struct Incident {
        int duct;       // index into the duct list
        int end;        // 0 or 1, which short edge
        Vec2 point_px;  // endpoint midpoint
    };
    std::vector<Incident> incident;
    double gap_px = 0.0;  // mean pairwise endpoint separation
};

// Typed pipeline output in physical units.
struct HvacObject {
    int id = -1;
    ObjectKind kind = ObjectKind::Other;
    Vec2 center_mm;
    std::optional<Vec2> axis;  // ducts only
    std::optional<double> length_mm;
    std::optional<double> width_mm;
    std::optional<double> height_mm;
    std::vector<int> connections;
    double confidence = 1.0;

    // Fitting port layout (world angles toward each connected duct and the
    // center-to-port distance), filled by classify_fitting and used by the
    // 3D stage.
    std::vector<double> port_angles_rad;
    std::vector<double> port_leg_mm;
};

// Ring-width stroke estimate for outlined shapes; min-area-rectangle width
// for filled ones (no holes). Result in mm.
double stroke_thickness(const Contour& c, const ContourSet& cs, double mm_per_px);

// Keeps outer contours (and their holes) whose stroke is at least
// thick_threshold_mm. Ids are re-densified; hierarchy links that crossed a
// dropped contour are cleared.
ContourSet filter_hvac(const ContourSet& cs, double mm_per_px,
                       double thick_threshold_mm = 0.375);

// Fits the min-area rectangle and derives the nine coordinates. Returns
// nullopt when the contour fails the rectangularity test (footprint below
// `rectangularity` of the rectangle area) and should be treated as a
// non-duct candidate.
std::optional<DuctShape> fit_duct(const Contour& c, double rectangularity = 0.90);

// Endpoint clustering result: junctions, plus pairs of ducts whose facing
// endpoints are collinear and should merge into one continuous duct.
struct ConnectivityResult {
    std::vector<Junction> junctions;
    std::vector<std::pair<int, int>> continuous;  // duct index pairs
};

// Groups duct endpoints lying within proximity of each other. The default
// search radius for a pair is proximity_factor x the wider duct's width.
// A two-endpoint group whose axes agree within collinear_tol_deg merges as
// a continuous duct instead of forming a junction.
ConnectivityResult infer_connectivity(const std::vector<DuctShape>& ducts, double mm_per_px,
                                      double proximity_factor = 1.5,
                                      double collinear_tol_deg = 5.0);

// Junction kind from the incident endpoint count: 2 -> Elbow, 3 -> Tee,
// 4 -> Cross; anything larger is reported as Other. Location is the endpoint
// centroid; dimensions are inherited from the widest incident duct.
HvacObject classify_fitting(const Junction& j, const std::vector<DuctShape>& ducts,
                            double mm_per_px);

}  // namespace duct3d
