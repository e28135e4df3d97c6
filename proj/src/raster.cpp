#include "duct3d/raster.hpp"

#include <png.h>

#include <cstdio>
#include <memory>
#include <numeric>

namespace duct3d {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

std::int64_t BinaryImage::foreground_count() const {
    return std::accumulate(bits_.begin(), bits_.end(), std::int64_t{0});
}

BinaryImage load_drawing(const std::string& path, double threshold) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw PngError("cannot open " + path);

    png_byte header[8] = {};
    if (std::fread(header, 1, 8, fp.get()) != 8 || png_sig_cmp(header, 0, 8) != 0)
        throw PngError(path + " is not a PNG file");

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw PngError("png_create_read_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw PngError("png_create_info_struct failed");
    }

    std::vector<png_byte> data;
    std::vector<png_bytep> rows;
    int width = 0, height = 0;

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw PngError("failed to decode " + path);
    }

    png_init_io(png, fp.get());
    png_set_sig_bytes(png, 8);
    png_read_info(png, info);

    width = static_cast<int>(png_get_image_width(png, info));
    height = static_cast<int>(png_get_image_height(png, info));
    if (width < 1 || height < 1) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw PngError(path + ": zero-size image");
    }

    // Normalize every supported layout to 16-bit RGBA.
    png_set_expand(png);
    if (png_get_bit_depth(png, info) < 16) png_set_expand_16(png);
    int color_type = png_get_color_type(png, info);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_set_add_alpha(png, 0xFFFF, PNG_FILLER_AFTER);
    png_read_update_info(png, info);

    const size_t rowbytes = png_get_rowbytes(png, info);
    data.resize(rowbytes * height);
    rows.resize(height);
    for (int y = 0; y < height; ++y) rows[y] = data.data() + rowbytes * y;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);

    BinaryImage img(width, height);
    for (int y = 0; y < height; ++y) {
        const png_byte* row = data.data() + rowbytes * y;
        for (int x = 0; x < width; ++x) {
            const png_byte* px = row + static_cast<size_t>(x) * 8;  // RGBA16, big-endian
            auto ch = [&](int i) { return (px[2 * i] << 8) | px[2 * i + 1]; };
            const int a = ch(3);
            if (a == 0) continue;
            const double lum =
                (0.2126 * ch(0) + 0.7152 * ch(1) + 0.0722 * ch(2)) / 65535.0;
            if (lum < threshold) img.set(x, y, true);
        }
    }
    return img;
}

void save_png(const BinaryImage& img, const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw PngError("cannot open " + path + " for writing");

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw PngError("png_create_write_struct failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw PngError("png_create_info_struct failed");
    }

    std::vector<png_byte> row(static_cast<size_t>(img.width()) * 4);

    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw PngError("failed to encode " + path);
    }

    png_init_io(png, fp.get());
    png_set_IHDR(png, info, img.width(), img.height(), 8, PNG_COLOR_TYPE_RGBA,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);

    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            png_byte* px = row.data() + static_cast<size_t>(x) * 4;
            const bool ink = img.at(x, y);
            px[0] = px[1] = px[2] = 0;
            px[3] = ink ? 255 : 0;
        }
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

std::vector<std::string> validate_standard(const BinaryImage& img) {
    std::vector<std::string> violations;
    if (img.width() != kStandardWidthPx || img.height() != kStandardHeightPx) {
        violations.push_back("resolution is " + std::to_string(img.width()) + "x" +
                             std::to_string(img.height()) + ", standard requires " +
                             std::to_string(kStandardWidthPx) + "x" +
                             std::to_string(kStandardHeightPx));
    }
    if (img.mm_per_px && !(*img.mm_per_px > 0.0)) {
        violations.push_back("calibrated scale is not positive");
    }
    return violations;
}

}  // namespace duct3d
