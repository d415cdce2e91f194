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

#include "readkit/render.hpp"

#include <algorithm>
#include <fstream>

#include "readkit/errors.hpp"

namespace readkit {

GrayImage::GrayImage(int w, int h, std::uint8_t fill) : width(w), height(h) {
    if (w < 1 || h < 1) {
        throw validation_error("image dimensions must be positive");
    }
    pixels.assign(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill);
}

void write_pgm(const GrayImage& image, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open for writing: " + path);
    }
    out << "P5\n" << image.width << " " << image.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels.data()),
              static_cast<std::streamsize>(image.pixels.size()));
    if (!out) {
        throw io_error("write failure: " + path);
    }
}

namespace {

int next_pnm_int(std::istream& in, const std::string& path) {
    // PNM allows '#' comments between tokens.
    while (true) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    int v = 0;
    if (!(in >> v)) {
        throw parse_error(path + ": truncated PNM header");
    }
    return v;
}

} // namespace

GrayImage read_pnm(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open file: " + path);
    }
    std::string magic;
    in >> magic;
    const bool ascii = magic == "P2" || magic == "P3";
    const bool color = magic == "P3" || magic == "P6";
    if (magic != "P2" && magic != "P3" && magic != "P5" && magic != "P6") {
        throw parse_error(path + ": unsupported PNM magic \"" + magic + "\"");
    }
    int w = next_pnm_int(in, path);
    int h = next_pnm_int(in, path);
    int maxval = next_pnm_int(in, path);
    if (w < 1 || h < 1 || maxval < 1 || maxval > 255) {
        throw parse_error(path + ": unsupported PNM dimensions or maxval");
    }
    GrayImage img(w, h, 0);
    std::size_t samples = static_cast<std::size_t>(w) * h * (color ? 3 : 1);
    std::vector<int> raw(samples);
    if (ascii) {
        for (auto& s : raw) {
            if (!(in >> s)) {
                throw parse_error(path + ": truncated PNM data");
            }
        }
    } else {
        in.get(); // single whitespace after maxval
        std::vector<std::uint8_t> bytes(samples);
        in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(samples));
        if (static_cast<std::size_t>(in.gcount()) != samples) {
            throw parse_error(path + ": truncated PNM data");
        }
        for (std::size_t i = 0; i < samples; ++i) {
            raw[i] = bytes[i];
        }
    }
    for (std::size_t i = 0; i < static_cast<std::size_t>(w) * h; ++i) {
        int v;
        if (color) {
            // integer Rec.601 luma
            v = (299 * raw[3 * i] + 587 * raw[3 * i + 1] + 114 * raw[3 * i + 2]) / 1000;
        } else {
            v = raw[i];
        }
        img.pixels[i] = static_cast<std::uint8_t>(v * 255 / maxval);
    }
    return img;
}

Rect draw_text(GrayImage& image, const BitmapFont& font, int font_px, int x, int y,
               std::string_view text, std::uint8_t ink) {
    GlyphMetrics m = metrics_for(font, font_px);
    int pen_x = x;
    for (char c : text) {
        if (c != ' ') {
            for (int ty = 0; ty < font_px; ++ty) {
                // Nearest-neighbor with exact band alignment: target row
                // ty samples design row floor(ty * cap_rows / font_px),
                // so the top and bottom design rows are always hit and a
                // full-height glyph inks exactly font_px rows.
                int sy = ty * font.cap_rows / font_px;
                for (int tx = 0; tx < m.ink_width_px; ++tx) {
                    int sx = tx * font.ink_cols / m.ink_width_px;
                    if (font.inked(c, sy, sx) && image.in_bounds(pen_x + tx, y + ty)) {
                        image.at(pen_x + tx, y + ty) = ink;
                    }
                }
            }
        }
        pen_x += m.advance_px;
    }
    return Rect{static_cast<double>(x), static_cast<double>(y), static_cast<double>(pen_x),
                static_cast<double>(y + font_px)};
}

bool ink_extent(const GrayImage& image, std::uint8_t background, const Rect* clip, Rect& out) {
    int x0 = 0, y0 = 0, x1 = image.width, y1 = image.height;
    if (clip) {
        x0 = std::max(0, static_cast<int>(clip->x_min));
        y0 = std::max(0, static_cast<int>(clip->y_min));
        x1 = std::min(image.width, static_cast<int>(clip->x_max));
        y1 = std::min(image.height, static_cast<int>(clip->y_max));
    }
    int min_x = x1, min_y = y1, max_x = -1, max_y = -1;
    for (int yy = y0; yy < y1; ++yy) {
        for (int xx = x0; xx < x1; ++xx) {
            if (image.at(xx, yy) != background) {
                min_x = std::min(min_x, xx);
                min_y = std::min(min_y, yy);
                max_x = std::max(max_x, xx);
                max_y = std::max(max_y, yy);
            }
        }
    }
    if (max_x < 0) {
        return false;
    }
    out = Rect{static_cast<double>(min_x), static_cast<double>(min_y),
               static_cast<double>(max_x + 1), static_cast<double>(max_y + 1)};
    return true;
}

double region_mean(const GrayImage& image, const Rect& region) {
    int x0 = std::max(0, static_cast<int>(region.x_min));
    int y0 = std::max(0, static_cast<int>(region.y_min));
    int x1 = std::min(image.width, static_cast<int>(region.x_max));
    int y1 = std::min(image.height, static_cast<int>(region.y_max));
    if (x0 >= x1 || y0 >= y1) {
        return 0.0;
    }
    long long sum = 0;
    for (int yy = y0; yy < y1; ++yy) {
        for (int xx = x0; xx < x1; ++xx) {
            sum += image.at(xx, yy);
        }
    }
    return static_cast<double>(sum) /
           (static_cast<double>(x1 - x0) * static_cast<double>(y1 - y0));
}

void darken_region(GrayImage& image, const Rect& region, int factor) {
    int x0 = std::max(0, static_cast<int>(region.x_min));
    int y0 = std::max(0, static_cast<int>(region.y_min));
    int x1 = std::min(image.width, static_cast<int>(region.x_max));
    int y1 = std::min(image.height, static_cast<int>(region.y_max));
    for (int yy = y0; yy < y1; ++yy) {
        for (int xx = x0; xx < x1; ++xx) {
            image.at(xx, yy) = static_cast<std::uint8_t>(image.at(xx, yy) * factor / 256);
        }
    }
}

GrayImage tile_background(const GrayImage& background, int width, int height) {
    if (background.width < 1 || background.height < 1) {
        throw validation_error("background image is empty");
    }
    GrayImage out(width, height, 0);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            out.at(x, y) = background.at(x % background.width, y % background.height);
        }
    }
    return out;
}

} // namespace readkit
