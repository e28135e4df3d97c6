#include "duct3d/font5x7.hpp"

#include <algorithm>

namespace duct3d::font {

// Bit patterns read left to right, 0bXXXXX with the high bit as the left
// column. Kept in sync with docs/font.md.
const std::vector<Glyph>& glyphs() {
    static const std::vector<Glyph> table = {
        {"0", {0b01110, 0b10001, 0b10001, 0b10001, 0b10001, 0b10001, 0b01110}},
        {"1", {0b00100, 0b01100, 0b00100, 0b00100, 0b00100, 0b00100, 0b01110}},
        {"2", {0b01110, 0b10001, 0b00001, 0b00010, 0b00100, 0b01000, 0b11111}},
        {"3", {0b11111, 0b00010, 0b00100, 0b00010, 0b00001, 0b10001, 0b01110}},
        {"4", {0b00010, 0b00110, 0b01010, 0b10010, 0b11111, 0b00010, 0b00010}},
        {"5", {0b11111, 0b10000, 0b11110, 0b00001, 0b00001, 0b10001, 0b01110}},
        {"6", {0b00110, 0b01000, 0b10000, 0b11110, 0b10001, 0b10001, 0b01110}},
        {"7", {0b11111, 0b00001, 0b00010, 0b00100, 0b01000, 0b01000, 0b01000}},
        {"8", {0b01110, 0b10001, 0b10001, 0b01110, 0b10001, 0b10001, 0b01110}},
        {"9", {0b01110, 0b10001, 0b10001, 0b01111, 0b00001, 0b00010, 0b01100}},
        {"x", {0b00000, 0b00000, 0b10001, 0b01010, 0b00100, 0b01010, 0b10001}},
        {"X", {0b10001, 0b10001, 0b01010, 0b00100, 0b01010, 0b10001, 0b10001}},
        {"*", {0b00000, 0b00100, 0b10101, 0b01110, 0b10101, 0b00100, 0b00000}},
        {"\xC3\x98", {0b00001, 0b01110, 0b10011, 0b10101, 0b11001, 0b01110, 0b10000}},
    };
    return table;
}

const Glyph* glyph_for(const std::string& code) {
    for (const Glyph& g : glyphs())
        if (g.code == code) return &g;
    return nullptr;
}

CellBox tight_bounds(const Glyph& g) {
    CellBox b{kCols, kRows, -1, -1};
    for (int r = 0; r < kRows; ++r) {
        for (int c = 0; c < kCols; ++c) {
            if (!g.on(c, r)) continue;
            b.col0 = std::min(b.col0, c);
            b.col1 = std::max(b.col1, c);
            b.row0 = std::min(b.row0, r);
            b.row1 = std::max(b.row1, r);
        }
    }
    return b;
}

}  // namespace duct3d::font
