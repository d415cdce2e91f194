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
#include <vector>

#include "readkit/geometry.hpp"

namespace readkit {

// One OCR detection. Immutable after construction; `rect` is always the
// axis-aligned hull of `quad`. Text is non-empty and newline-free;
// confidence is in [0, 1]. Confidence is retained but never used by
// layout recovery.
struct TextBox {
    std::string text;
    QuadBox quad;
    Rect rect;
    double confidence = 1.0;

    // Builds a box from a quad, deriving the hull. Throws
    // validation_error on empty/newline text, degenerate quad, or
    // confidence outside [0, 1].
    static TextBox from_quad(std::string text, const QuadBox& quad, double confidence);

    // Same, for rect-only sources (synthetic pages, benchmark manifests).
    static TextBox from_rect(std::string text, const Rect& rect, double confidence = 1.0);

    friend bool operator==(const TextBox&, const TextBox&) = default;
};

// An image's dimensions plus its detections, in OCR output order.
struct Page {
    std::string image_id;
    int width_px = 0;
    int height_px = 0;
    std::vector<TextBox> boxes;

    // True iff dimensions are positive and every rect lies within
    // [0, width_px] x [0, height_px].
    bool within_bounds() const;

    friend bool operator==(const Page&, const Page&) = default;
};

// Number of Unicode code points in a UTF-8 string (continuation bytes are
// not counted). Malformed sequences count one point per lead byte.
std::size_t codepoint_count(std::string_view text);

} // namespace readkit
