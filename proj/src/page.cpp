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

#include "readkit/page.hpp"

#include "readkit/errors.hpp"

namespace readkit {

namespace {

void check_text_and_confidence(const std::string& text, double confidence) {
    if (text.empty()) {
        throw validation_error("text box has empty text");
    }
    if (text.find('\n') != std::string::npos || text.find('\r') != std::string::npos) {
        throw validation_error("text box text contains a newline character");
    }
    if (!(confidence >= 0.0 && confidence <= 1.0)) {
        throw validation_error("confidence outside [0, 1]");
    }
}

} // namespace

TextBox TextBox::from_quad(std::string text, const QuadBox& quad, double confidence) {
    check_text_and_confidence(text, confidence);
    Rect rect = hull(quad); // throws on degenerate quads
    return TextBox{std::move(text), quad, rect, confidence};
}

TextBox TextBox::from_rect(std::string text, const Rect& rect, double confidence) {
    check_text_and_confidence(text, confidence);
    if (!rect.valid()) {
        throw validation_error("invalid rect for text box");
    }
    return TextBox{std::move(text), quad_from_rect(rect), rect, confidence};
}

bool Page::within_bounds() const {
    if (width_px <= 0 || height_px <= 0) {
        return false;
    }
    for (const auto& b : boxes) {
        if (b.rect.x_min < 0.0 || b.rect.y_min < 0.0 || b.rect.x_max > width_px ||
            b.rect.y_max > height_px) {
            return false;
        }
    }
    return true;
}

std::size_t codepoint_count(std::string_view text) {
    std::size_t n = 0;
    for (unsigned char c : text) {
        if ((c & 0xC0) != 0x80) {
            ++n;
        }
    }
    return n;
}

} // namespace readkit
