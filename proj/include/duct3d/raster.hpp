#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace duct3d {

struct PixelPoint {
    int x = 0;
    int y = 0;
    bool operator==(const PixelPoint&) const = default;
};

// Monochrome raster, foreground = ink. Row-major, origin at the top-left
// pixel, x rightward, y downward. Immutable once handed to the pipeline;
// the setters exist for construction (loader, synthetic painter).
class BinaryImage {
public:
    BinaryImage() = default;
    BinaryImage(int width, int height) : width_(width), height_(height) {
        if (width < 1 || height < 1) throw std::invalid_argument("BinaryImage: zero-size image");
        bits_.assign(static_cast<size_t>(width) * height, 0);
    }

    int width() const { return width_; }
    int height() const { return height_; }

    bool in_bounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

    bool at(int x, int y) const { return bits_[static_cast<size_t>(y) * width_ + x] != 0; }
    void set(int x, int y, bool on) { bits_[static_cast<size_t>(y) * width_ + x] = on ? 1 : 0; }

    std::int64_t foreground_count() const;

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    // mm per pixel; absent until calibration.
    std::optional<double> mm_per_px;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> bits_;
};

struct PngError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Drawing-standard constants used by validate_standard.
inline constexpr int kStandardWidthPx = 7680;
inline constexpr int kStandardHeightPx = 4320;
inline constexpr double kHvacStrokeMm = 0.6;
inline constexpr double kBackgroundStrokeMm = 0.15;
inline constexpr double kReferenceSideMm = 500.0;

// Reads an 8/16-bit gray, gray+alpha, RGB, RGBA (or palette) PNG and
// binarizes it: foreground = alpha > 0 and luminance < threshold.
// Fully transparent pixels are background regardless of color.
BinaryImage load_drawing(const std::string& path, double threshold = 0.5);

// Writes the mask as an RGBA PNG: ink opaque black, background transparent.
void save_png(const BinaryImage& img, const std::string& path);

// Checks the drawing-standard expectations (8K UHD resolution). Returns a
// possibly-empty list of violations; never rejects the image, so desk-scale
// inputs keep working.
std::vector<std::string> validate_standard(const BinaryImage& img);

}  // namespace duct3d
