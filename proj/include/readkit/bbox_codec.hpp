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

#include <string>
#include <string_view>

#include "readkit/geometry.hpp"

namespace readkit {

// Top-left / bottom-right box with coordinates scaled into [0, 1].
struct NormalizedBox {
    double x_min = 0.0;
    double y_min = 0.0;
    double x_max = 0.0;
    double y_max = 0.0;

    // 0 <= x_min < x_max <= 1 and likewise for y. Throws validation_error.
    void validate() const;

    friend bool operator==(const NormalizedBox&, const NormalizedBox&) = default;
};

// Pixel rect -> normalized box (x by width, y by height). The rect must
// already lie within the page (post-clamp). Zero page dimension is an
// error.
NormalizedBox normalize(const Rect& rect, int width_px, int height_px);

// Inverse of normalize.
Rect denormalize(const NormalizedBox& box, int width_px, int height_px);

// "[x_min, y_min, x_max, y_max]", each value with exactly 3 decimal
// places, round-half-away-from-zero. This is the exact grammar the
// localization task responses use.
std::string format_box(const NormalizedBox& box);

// Parses the bracketed 4-float form, whitespace-tolerant. Grammar
// violations throw parse_error with a character position; a parsed box
// violating the NormalizedBox invariants throws validation_error.
NormalizedBox parse_box(std::string_view s);

// One value at the codec's precision: "0.250", "1.000", ...
std::string format_coord(double v);

} // namespace readkit
