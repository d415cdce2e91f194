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

#include "readkit/bbox_codec.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "readkit/errors.hpp"

namespace readkit {

void NormalizedBox::validate() const {
    auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
    if (!in_unit(x_min) || !in_unit(y_min) || !in_unit(x_max) || !in_unit(y_max)) {
        throw validation_error("normalized coordinates must lie in [0, 1]");
    }
    if (!(x_min < x_max) || !(y_min < y_max)) {
        throw validation_error("normalized box is degenerate (min >= max)");
    }
}

NormalizedBox normalize(const Rect& rect, int width_px, int height_px) {
    if (width_px <= 0 || height_px <= 0) {
        throw validation_error("page dimensions must be positive to normalize");
    }
    if (!rect.valid()) {
        throw validation_error("cannot normalize an invalid rect");
    }
    NormalizedBox box{rect.x_min / width_px, rect.y_min / height_px, rect.x_max / width_px,
                      rect.y_max / height_px};
    box.validate(); // catches rects outside page bounds
    return box;
}

Rect denormalize(const NormalizedBox& box, int width_px, int height_px) {
    if (width_px <= 0 || height_px <= 0) {
        throw validation_error("page dimensions must be positive to denormalize");
    }
    box.validate();
    return Rect{box.x_min * width_px, box.y_min * height_px, box.x_max * width_px,
                box.y_max * height_px};
}

std::string format_coord(double v) {
    // Quantize to 3 decimals half-away-from-zero, then print from
    // integers so the output is identical on every platform.
    long long q = round_half_away(v * 1000.0);
    bool neg = q < 0;
    unsigned long long a = neg ? static_cast<unsigned long long>(-q)
                               : static_cast<unsigned long long>(q);
    std::string out = neg ? "-" : "";
    out += std::to_string(a / 1000);
    out += '.';
    unsigned long long frac = a % 1000;
    out += static_cast<char>('0' + frac / 100);
    out += static_cast<char>('0' + (frac / 10) % 10);
    out += static_cast<char>('0' + frac % 10);
    return out;
}

std::string format_box(const NormalizedBox& box) {
    box.validate();
    std::string out = "[";
    out += format_coord(box.x_min);
    out += ", ";
    out += format_coord(box.y_min);
    out += ", ";
    out += format_coord(box.x_max);
    out += ", ";
    out += format_coord(box.y_max);
    out += ']';
    return out;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) {
            ++pos;
        }
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw parse_error("box string: expected " + expected + " at position " +
                          std::to_string(pos));
    }

    void expect(char c) {
        skip_ws();
        if (pos >= s.size() || s[pos] != c) {
            fail(std::string("'") + c + "'");
        }
        ++pos;
    }

    double number() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            ++pos;
        }
        bool digits = false;
        while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
            ++pos;
            digits = true;
        }
        if (pos < s.size() && s[pos] == '.') {
            ++pos;
            while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
                ++pos;
                digits = true;
            }
        }
        if (!digits) {
            fail("a number");
        }
        return std::strtod(std::string(s.substr(start, pos - start)).c_str(), nullptr);
    }
};

} // namespace

NormalizedBox parse_box(std::string_view s) {
    Cursor cur{s};
    cur.expect('[');
    std::array<double, 4> v{};
    for (int i = 0; i < 4; ++i) {
        if (i > 0) {
            cur.expect(',');
        }
        v[static_cast<std::size_t>(i)] = cur.number();
    }
    cur.expect(']');
    cur.skip_ws();
    if (cur.pos != s.size()) {
        cur.fail("end of string");
    }
    NormalizedBox box{v[0], v[1], v[2], v[3]};
    box.validate();
    return box;
}

} // namespace readkit
