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
#include <string_view>
#include <vector>

#include "readkit/font.hpp"
#include "readkit/geometry.hpp"

namespace readkit {

// 8-bit grayscale canvas. PGM-backed: byte-identical files for identical
// pixel content.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 255);

    std::uint8_t& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    bool in_bounds(int x, int y) const { return x >= 0 && x < width && y >= 0 && y < height; }
};

// Binary PGM (P5). Deterministic bytes.
void write_pgm(const GrayImage& image, const std::string& path);

// Reads P2/P5 (gray) and P3/P6 (color, converted to luma). Used for
// natural-background images.
GrayImage read_pnm(const std::string& path);

// Draws `text` with the glyph cap band's top-left corner at (x, y), cap
// height exactly `font_px`. Glyphs are nearest-neighbor scaled from the
// font cell. Returns the advance box [x, y, x + n*advance, y + font_px];
// all ink falls inside it. Pixels outside the canvas are clipped.
Rect draw_text(GrayImage& image, const BitmapFont& font, int font_px, int x, int y,
               std::string_view text, std::uint8_t ink);

// Tight bounding box of pixels differing from `background` inside
// `clip` (whole image when clip is null). Returns false when no ink.
bool ink_extent(const GrayImage& image, std::uint8_t background, const Rect* clip, Rect& out);

// Mean pixel value over the rect intersected with the canvas.
double region_mean(const GrayImage& image, const Rect& region);

// Multiplies every pixel in the region by factor/256 (used as the
// darkening overlay behind text on bright natural backgrounds).
void darken_region(GrayImage& image, const Rect& region, int factor);

// Tiles `background` over a w x h canvas.
GrayImage tile_background(const GrayImage& background, int width, int height);

} // namespace readkit
