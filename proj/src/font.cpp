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

#include "readkit/font.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "readkit/errors.hpp"
#include "readkit/geometry.hpp"

namespace readkit {

namespace {

// The bundled 5x7 face, one glyph per printable ASCII character in order,
// rows separated by '|', '#' = ink. Descenders (g j p q y , ;) are drawn
// raised so all ink stays inside the 7-row band.
const char* const kGlyphs5x7[95] = {
    /* ' ' */ ".....|.....|.....|.....|.....|.....|.....",
    /* '!' */ "..#..|..#..|..#..|..#..|..#..|.....|..#..",
    /* '"' */ ".#.#.|.#.#.|.#.#.|.....|.....|.....|.....",
    /* '#' */ ".#.#.|.#.#.|#####|.#.#.|#####|.#.#.|.#.#.",
    /* '$' */ "..#..|.####|#.#..|.###.|..#.#|####.|..#..",
    /* '%' */ "##...|##..#|...#.|..#..|.#...|#..##|...##",
    /* '&' */ ".##..|#..#.|#.#..|.#...|#.#.#|#..#.|.##.#",
    /* ''' */ "..#..|..#..|.....|.....|.....|.....|.....",
    /* '(' */ "...#.|..#..|.#...|.#...|.#...|..#..|...#.",
    /* ')' */ ".#...|..#..|...#.|...#.|...#.|..#..|.#...",
    /* '*' */ ".....|..#..|#.#.#|.###.|#.#.#|..#..|.....",
    /* '+' */ ".....|..#..|..#..|#####|..#..|..#..|.....",
    /* ',' */ ".....|.....|.....|.....|.##..|..#..|.#...",
    /* '-' */ ".....|.....|.....|#####|.....|.....|.....",
    /* '.' */ ".....|.....|.....|.....|.....|.##..|.##..",
    /* '/' */ ".....|....#|...#.|..#..|.#...|#....|.....",
    /* '0' */ ".###.|#...#|#..##|#.#.#|##..#|#...#|.###.",
    /* '1' */ "..#..|.##..|..#..|..#..|..#..|..#..|.###.",
    /* '2' */ ".###.|#...#|....#|...#.|..#..|.#...|#####",
    /* '3' */ ".###.|#...#|....#|..##.|....#|#...#|.###.",
    /* '4' */ "...#.|..##.|.#.#.|#..#.|#####|...#.|...#.",
    /* '5' */ "#####|#....|####.|....#|....#|#...#|.###.",
    /* '6' */ "..##.|.#...|#....|####.|#...#|#...#|.###.",
    /* '7' */ "#####|....#|...#.|..#..|..#..|..#..|..#..",
    /* '8' */ ".###.|#...#|#...#|.###.|#...#|#...#|.###.",
    /* '9' */ ".###.|#...#|#...#|.####|....#|...#.|.##..",
    /* ':' */ ".....|.##..|.##..|.....|.##..|.##..|.....",
    /* ';' */ ".....|.##..|.##..|.....|.##..|..#..|.#...",
    /* '<' */ "...#.|..#..|.#...|#....|.#...|..#..|...#.",
    /* '=' */ ".....|.....|#####|.....|#####|.....|.....",
    /* '>' */ ".#...|..#..|...#.|....#|...#.|..#..|.#...",
    /* '?' */ ".###.|#...#|....#|...#.|..#..|.....|..#..",
    /* '@' */ ".###.|#...#|....#|.##.#|#.#.#|#.#.#|.###.",
    /* 'A' */ ".###.|#...#|#...#|#####|#...#|#...#|#...#",
    /* 'B' */ "####.|#...#|#...#|####.|#...#|#...#|####.",
    /* 'C' */ ".###.|#...#|#....|#....|#....|#...#|.###.",
    /* 'D' */ "####.|#...#|#...#|#...#|#...#|#...#|####.",
    /* 'E' */ "#####|#....|#....|####.|#....|#....|#####",
    /* 'F' */ "#####|#....|#....|####.|#....|#....|#....",
    /* 'G' */ ".###.|#...#|#....|#.###|#...#|#...#|.###.",
    /* 'H' */ "#...#|#...#|#...#|#####|#...#|#...#|#...#",
    /* 'I' */ ".###.|..#..|..#..|..#..|..#..|..#..|.###.",
    /* 'J' */ "..###|...#.|...#.|...#.|...#.|#..#.|.##..",
    /* 'K' */ "#...#|#..#.|#.#..|##...|#.#..|#..#.|#...#",
    /* 'L' */ "#....|#....|#....|#....|#....|#....|#####",
    /* 'M' */ "#...#|##.##|#.#.#|#.#.#|#...#|#...#|#...#",
    /* 'N' */ "#...#|##..#|#.#.#|#..##|#...#|#...#|#...#",
    /* 'O' */ ".###.|#...#|#...#|#...#|#...#|#...#|.###.",
    /* 'P' */ "####.|#...#|#...#|####.|#....|#....|#....",
    /* 'Q' */ ".###.|#...#|#...#|#...#|#.#.#|#..#.|.##.#",
    /* 'R' */ "####.|#...#|#...#|####.|#.#..|#..#.|#...#",
    /* 'S' */ ".####|#....|#....|.###.|....#|....#|####.",
    /* 'T' */ "#####|..#..|..#..|..#..|..#..|..#..|..#..",
    /* 'U' */ "#...#|#...#|#...#|#...#|#...#|#...#|.###.",
    /* 'V' */ "#...#|#...#|#...#|#...#|#...#|.#.#.|..#..",
    /* 'W' */ "#...#|#...#|#...#|#.#.#|#.#.#|##.##|#...#",
    /* 'X' */ "#...#|#...#|.#.#.|..#..|.#.#.|#...#|#...#",
    /* 'Y' */ "#...#|#...#|.#.#.|..#..|..#..|..#..|..#..",
    /* 'Z' */ "#####|....#|...#.|..#..|.#...|#....|#####",
    /* '[' */ ".###.|.#...|.#...|.#...|.#...|.#...|.###.",
    /* '\' */ ".....|#....|.#...|..#..|...#.|....#|.....",
    /* ']' */ ".###.|...#.|...#.|...#.|...#.|...#.|.###.",
    /* '^' */ "..#..|.#.#.|#...#|.....|.....|.....|.....",
    /* '_' */ ".....|.....|.....|.....|.....|.....|#####",
    /* '`' */ ".#...|..#..|.....|.....|.....|.....|.....",
    /* 'a' */ ".....|.....|.###.|....#|.####|#...#|.####",
    /* 'b' */ "#....|#....|####.|#...#|#...#|#...#|####.",
    /* 'c' */ ".....|.....|.###.|#....|#....|#...#|.###.",
    /* 'd' */ "....#|....#|.####|#...#|#...#|#...#|.####",
    /* 'e' */ ".....|.....|.###.|#...#|#####|#....|.###.",
    /* 'f' */ "..##.|.#..#|.#...|###..|.#...|.#...|.#...",
    /* 'g' */ ".....|.####|#...#|#...#|.####|....#|.###.",
    /* 'h' */ "#....|#....|####.|#...#|#...#|#...#|#...#",
    /* 'i' */ "..#..|.....|.##..|..#..|..#..|..#..|.###.",
    /* 'j' */ "...#.|.....|..##.|...#.|...#.|#..#.|.##..",
    /* 'k' */ "#....|#....|#..#.|#.#..|##...|#.#..|#..#.",
    /* 'l' */ ".##..|..#..|..#..|..#..|..#..|..#..|.###.",
    /* 'm' */ ".....|.....|##.#.|#.#.#|#.#.#|#.#.#|#.#.#",
    /* 'n' */ ".....|.....|####.|#...#|#...#|#...#|#...#",
    /* 'o' */ ".....|.....|.###.|#...#|#...#|#...#|.###.",
    /* 'p' */ ".....|####.|#...#|#...#|####.|#....|#....",
    /* 'q' */ ".....|.####|#...#|#...#|.####|....#|....#",
    /* 'r' */ ".....|.....|#.##.|##..#|#....|#....|#....",
    /* 's' */ ".....|.....|.####|#....|.###.|....#|####.",
    /* 't' */ ".#...|.#...|###..|.#...|.#...|.#..#|..##.",
    /* 'u' */ ".....|.....|#...#|#...#|#...#|#..##|.##.#",
    /* 'v' */ ".....|.....|#...#|#...#|#...#|.#.#.|..#..",
    /* 'w' */ ".....|.....|#...#|#...#|#.#.#|#.#.#|.#.#.",
    /* 'x' */ ".....|.....|#...#|.#.#.|..#..|.#.#.|#...#",
    /* 'y' */ ".....|#...#|#...#|#...#|.####|....#|.###.",
    /* 'z' */ ".....|.....|#####|...#.|..#..|.#...|#####",
    /* '{' */ "..##.|.#...|.#...|##...|.#...|.#...|..##.",
    /* '|' */ "..#..|..#..|..#..|..#..|..#..|..#..|..#..",
    /* '}' */ ".##..|...#.|...#.|...##|...#.|...#.|.##..",
    /* '~' */ ".....|.....|.#...|#.#.#|...#.|.....|.....",
};

BitmapFont build_builtin(bool bold) {
    BitmapFont font;
    font.name = bold ? "kit5x7-bold" : "kit5x7";
    font.cap_rows = 7;
    // the bold face smears each row one column right, widening the cell
    font.ink_cols = bold ? 6 : 5;
    font.rows.assign(95u * 7u, 0u);
    for (int g = 0; g < 95; ++g) {
        const char* p = kGlyphs5x7[g];
        for (int r = 0; r < 7; ++r) {
            std::uint32_t bits = 0;
            for (int c = 0; c < 5; ++c, ++p) {
                if (*p == '#') {
                    bits |= 1u << c;
                }
            }
            if (*p == '|') {
                ++p;
            }
            if (bold) {
                bits |= bits << 1;
            }
            font.rows[static_cast<std::size_t>(g * 7 + r)] = bits;
        }
    }
    return font;
}

} // namespace

bool BitmapFont::inked(char c, int row, int col) const {
    if (!covers(c) || row < 0 || row >= cap_rows || col < 0 || col >= ink_cols) {
        return false;
    }
    std::size_t idx = static_cast<std::size_t>((c - 32) * cap_rows + row);
    return (rows[idx] >> col) & 1u;
}

const BitmapFont& builtin_font() {
    static const BitmapFont font = build_builtin(false);
    return font;
}

const BitmapFont& builtin_font_bold() {
    static const BitmapFont font = build_builtin(true);
    return font;
}

BitmapFont load_bfnt(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open font file: " + path);
    }
    std::string magic;
    int version = 0;
    in >> magic >> version;
    if (magic != "bfnt" || version != 1) {
        throw parse_error(path + ": not a bfnt v1 font file");
    }
    BitmapFont font;
    std::string key;
    while (in >> key) {
        if (key == "name") {
            in >> font.name;
        } else if (key == "rows") {
            in >> font.cap_rows;
        } else if (key == "cols") {
            in >> font.ink_cols;
        } else if (key == "glyph") {
            break;
        } else {
            throw parse_error(path + ": unexpected key \"" + key + "\"");
        }
    }
    if (font.cap_rows < 1 || font.cap_rows > 32 || font.ink_cols < 1 || font.ink_cols > 32) {
        throw parse_error(path + ": rows/cols must be in [1, 32]");
    }
    font.rows.assign(95u * static_cast<std::size_t>(font.cap_rows), 0u);
    while (in) {
        int code = 0;
        if (!(in >> code)) {
            break;
        }
        if (code < 32 || code > 126) {
            throw parse_error(path + ": glyph code outside printable ASCII: " +
                              std::to_string(code));
        }
        for (int r = 0; r < font.cap_rows; ++r) {
            std::string row;
            if (!(in >> row) || static_cast<int>(row.size()) != font.ink_cols) {
                throw parse_error(path + ": glyph " + std::to_string(code) + " row " +
                                  std::to_string(r) + " must have " +
                                  std::to_string(font.ink_cols) + " cells");
            }
            std::uint32_t bits = 0;
            for (int c = 0; c < font.ink_cols; ++c) {
                if (row[static_cast<std::size_t>(c)] == '#') {
                    bits |= 1u << c;
                }
            }
            font.rows[static_cast<std::size_t>((code - 32) * font.cap_rows + r)] = bits;
        }
        std::string next;
        if (!(in >> next)) {
            break;
        }
        if (next != "glyph") {
            throw parse_error(path + ": expected \"glyph\", got \"" + next + "\"");
        }
    }
    if (font.name.empty()) {
        font.name = std::filesystem::path(path).stem().string();
    }
    return font;
}

std::vector<BitmapFont> load_font_dir(const std::string& dir) {
    if (dir.empty()) {
        return {builtin_font()};
    }
    std::vector<std::string> paths;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (entry.path().extension() == ".bfnt") {
            paths.push_back(entry.path().string());
        }
    }
    if (ec) {
        throw io_error("cannot read font directory: " + dir);
    }
    if (paths.empty()) {
        throw validation_error("no .bfnt fonts found in " + dir);
    }
    std::sort(paths.begin(), paths.end());
    std::vector<BitmapFont> fonts;
    fonts.reserve(paths.size());
    for (const auto& p : paths) {
        fonts.push_back(load_bfnt(p));
    }
    return fonts;
}

std::string to_bfnt(const BitmapFont& font) {
    std::ostringstream out;
    out << "bfnt 1\n"
        << "name " << font.name << "\n"
        << "rows " << font.cap_rows << "\n"
        << "cols " << font.ink_cols << "\n";
    for (int code = 32; code <= 126; ++code) {
        out << "glyph " << code << "\n";
        for (int r = 0; r < font.cap_rows; ++r) {
            for (int c = 0; c < font.ink_cols; ++c) {
                out << (font.inked(static_cast<char>(code), r, c) ? '#' : '.');
            }
            out << "\n";
        }
    }
    return out.str();
}

GlyphMetrics metrics_for(const BitmapFont& font, int font_px) {
    if (font_px < 1) {
        throw validation_error("font_px must be positive");
    }
    GlyphMetrics m;
    m.font_px = font_px;
    double scale = static_cast<double>(font_px) / font.cap_rows;
    m.ink_width_px = std::max(1LL, round_half_away(font.ink_cols * scale));
    m.spacing_px = std::max(1LL, round_half_away(scale));
    m.advance_px = m.ink_width_px + m.spacing_px;
    m.line_pitch_px = font_px + std::max(2LL, round_half_away(font_px / 3.0));
    return m;
}

} // namespace readkit
