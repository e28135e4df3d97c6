#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace duct3d::font {

inline constexpr int kCols = 5;
inline constexpr int kRows = 7;

// One glyph: 7 rows of 5 cells, bit 4 = leftmost column. The full table is
// documented in docs/font.md; every glyph is a single 8-connected component
// so it traces as one outer contour.
struct Glyph {
    std::string code;  // text emitted on a match ("0".."9", "x", "X", "*", UTF-8 diameter mark)
    std::array<std::uint8_t, kRows> rows;

    bool on(int col, int row) const { return (rows[row] >> (kCols - 1 - col)) & 1; }
};

// Digits 0-9 plus the dimension separators 'x', 'X', '*' and the diameter
// mark.
const std::vector<Glyph>& glyphs();

// Lookup by text code; nullptr when the font has no such glyph.
const Glyph* glyph_for(const std::string& code);

// Tight ink bounds of a glyph within the 5x7 grid, inclusive.
struct CellBox {
    int col0 = 0, row0 = 0, col1 = 0, row1 = 0;
    int width() const { return col1 - col0 + 1; }
    int height() const { return row1 - row0 + 1; }
};
CellBox tight_bounds(const Glyph& g);

}  // namespace duct3d::font
