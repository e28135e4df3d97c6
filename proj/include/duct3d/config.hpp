#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace duct3d {

// Knobs shared across the pipeline stages. Defaults match the per-module
// documentation in docs/formats.md; the CLI exposes each as a flag and a
// JSON config file key (flags win over file, file wins over defaults).
struct PipelineConfig {
    double threshold = 0.5;            // binarization luminance cut
    double thick_threshold_mm = 0.375; // HVAC vs background stroke split
    double min_duct_width_mm = 50.0;   // rect candidates narrower than this are reported as Other
    double rectangularity = 0.90;      // footprint / min-area-rect coverage for ducts
    double proximity_factor = 1.5;     // junction search radius, x wider duct width
    double collinear_tol_deg = 5.0;    // continuity merge angle tolerance
    double loc_tol_mm = 10.0;          // eval: location tolerance
    double dim_tol_rel = 0.02;         // eval: relative dimension tolerance
    double z_mm = 2800.0;              // default duct elevation
    double snap_limit_mm = 50.0;       // max port gap closed during scene assembly
    int elbow_segments = 1;            // 1 = plain mitre
    std::uint64_t seed = 0;            // corpus generation seed
    std::string material;             // opaque metadata attached to scene objects

    void validate() const {
        auto pos = [](double v, const char* name) {
            if (!(v > 0.0)) throw std::invalid_argument(std::string("config: ") + name + " must be > 0");
        };
        pos(threshold, "threshold");
        pos(thick_threshold_mm, "thick_threshold_mm");
        pos(min_duct_width_mm, "min_duct_width_mm");
        pos(rectangularity, "rectangularity");
        pos(proximity_factor, "proximity_factor");
        pos(collinear_tol_deg, "collinear_tol_deg");
        pos(loc_tol_mm, "loc_tol_mm");
        pos(dim_tol_rel, "dim_tol_rel");
        pos(z_mm, "z_mm");
        pos(snap_limit_mm, "snap_limit_mm");
        if (elbow_segments < 1) throw std::invalid_argument("config: elbow_segments must be >= 1");
    }
};

}  // namespace duct3d
