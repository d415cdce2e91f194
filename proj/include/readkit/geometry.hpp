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

#include <array>
#include <cmath>

namespace readkit {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

// Axis-aligned box in image pixels. Invariants: x_min < x_max,
// y_min < y_max, all coordinates finite and >= 0.
struct Rect {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    double width() const { return x_max - x_min; }
    double height() const { return y_max - y_min; }
    double x_center() const { return (x_min + x_max) / 2.0; }
    double y_center() const { return (y_min + y_max) / 2.0; }

    bool valid() const {
        return std::isfinite(x_min) && std::isfinite(y_min) && std::isfinite(x_max) &&
               std::isfinite(y_max) && x_min >= 0.0 && y_min >= 0.0 && x_min < x_max &&
               y_min < y_max;
    }

    bool contains(const Vec2& p) const {
        return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
    }

    friend bool operator==(const Rect&, const Rect&) = default;
};

// One OCR detection quadrilateral, points in the engine's order
// (conventionally top-left, top-right, bottom-right, bottom-left). The
// point order is never relied upon; consumers take the hull.
struct QuadBox {
    std::array<Vec2, 4> points{};

    bool finite_nonnegative() const {
        for (const auto& p : points) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y) || p.x < 0.0 || p.y < 0.0) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const QuadBox&, const QuadBox&) = default;
};

// Axis-aligned hull of a quad: (min x, min y, max x, max y) over the four
// points. Throws validation_error if the quad is degenerate (zero width
// or height) or has non-finite/negative coordinates.
Rect hull(const QuadBox& quad);

// Axis-aligned quad whose hull is exactly `r`. Used when synthesizing
// pages from rect-only sources.
QuadBox quad_from_rect(const Rect& r);

// round-half-away-from-zero, the fixed rounding rule for every
// pixel-to-count and pixel-to-decimal conversion in this library.
inline long long round_half_away(double v) {
    return std::llround(v);
}

} // namespace readkit
