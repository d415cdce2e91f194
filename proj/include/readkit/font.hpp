// Copyright (c) 2026 readkit authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace readkit {

// Fixed-cell bitmap font covering printable ASCII (32..126). Every glyph
// keeps its ink inside the cap band (rows [0, cap_rows)): descenders are
// drawn raised, so a rendered run's ink never extends below the baseline
// and requested pixel heights are exact by construction.
struct BitmapFont {
    std::string name;
    int cap_rows = 0; // design cap height in cells
    int ink_cols = 0; // design glyph width in cells
    std::vector<std::uint32_t> rows; // 95 glyphs x cap_rows, bit 0 = leftmost column

    bool covers(char c) const { return c >= 32 && c <= 126; }
    // True if the design cell (row, col) of glyph `c` is inked. Uncovered
    // characters render as blank.
    bool inked(char c, int row, int col) const;
};

// The bundled default face and its algorithmically emboldened variant.
const BitmapFont& builtin_font();
const BitmapFont& builtin_font_bold();

// Loads a `.bfnt` textual bitmap font (format documented in
// docs/formats.md). Throws parse_error / io_error.
BitmapFont load_bfnt(const std::string& path);

// All `.bfnt` faces in a directory, sorted by filename; the builtin faces
// are used when the directory string is empty.
std::vector<BitmapFont> load_font_dir(const std::string& dir);

// Serializes a font back to `.bfnt` text.
std::string to_bfnt(const BitmapFont& font);

// Integer metrics of a face scaled so the cap height is exactly
// `font_px` pixels.
struct GlyphMetrics {
    int font_px = 0;     // cap height, pixels
    int ink_width_px = 0; // scaled glyph ink width
    int spacing_px = 0;   // inter-character gap
    int advance_px = 0;   // ink_width_px + spacing_px
    int line_pitch_px = 0; // baseline-to-baseline distance
};

GlyphMetrics metrics_for(const BitmapFont& font, int font_px);

} // namespace readkit
