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

#include "readkit/page.hpp"

namespace readkit {

// Free parameters of the layout recovery heuristic.
struct LayoutConfig {
    // A box joins a row iff their vertical-interval overlap is at least
    // this fraction of min(box height, row height).
    double row_overlap_threshold = 0.5;
    // Upper bound on inserted placeholder spaces (indent and gaps alike);
    // keeps lines bounded on very wide pages.
    int max_gap_spaces = 40;
    // Lead each line with round(x_min / char_width) spaces.
    bool indent_enabled = true;
    // Opt-in: one blank line between rows whose vertical gap exceeds
    // vgap_factor x median row height.
    bool vgap_blank_lines = false;
    double vgap_factor = 1.5;

    // Throws validation_error when a field is out of range.
    void validate() const;
};

// One text row: boxes sorted by x_min ascending (ties keep input order),
// vertical extent over member rects, estimated character width.
struct RowGroup {
    std::vector<TextBox> boxes;
    double y_top = 0.0;
    double y_bottom = 0.0;
    double char_width_px = 0.0;

    double height() const { return y_bottom - y_top; }
    double y_center() const { return (y_top + y_bottom) / 2.0; }
};

// Plain-text reconstruction of a page; spaces and newlines encode the
// geometry.
struct LayoutText {
    std::vector<std::string> lines; // no trailing whitespace per line
    std::string rendered;           // lines joined by '\n'

    friend bool operator==(const LayoutText&, const LayoutText&) = default;
};

// Step I: assign every box to exactly one row, rows ordered top-to-bottom
// by vertical center, boxes left-to-right within each row. Boxes are
// processed in ascending y-center order; a box joins the best-overlapping
// existing row that meets the threshold, else starts a new row. The
// returned rows carry their estimated character width. Empty page -> {}.
std::vector<RowGroup> group_rows(const Page& page, const LayoutConfig& cfg = {});

// Step II calibration: (sum of box rect widths) / (sum of text lengths in
// code points, internal spaces included), in pixels per character.
double estimate_char_width(const RowGroup& row);

// Step II: one line of text for a row. Leading indent (if enabled) of
// round(x_min / char_width) spaces capped at max_gap_spaces; between
// boxes, round(gap / char_width) spaces clamped to [1, max_gap_spaces];
// box texts verbatim. Trailing whitespace is NOT stripped here.
std::string layout_row(const RowGroup& row, const LayoutConfig& cfg = {});

// Step III: rows joined by newlines, trailing spaces stripped per line,
// optional blank lines at large vertical gaps.
LayoutText recover_layout(const Page& page, const LayoutConfig& cfg = {});

// Box texts in reading order (group_rows order), single-space joined.
// This is the Task-I target sequence and the token-preservation oracle.
std::string reading_order_text(const Page& page, const LayoutConfig& cfg = {});

// Boxes in reading order, flattened.
std::vector<TextBox> reading_order_boxes(const Page& page, const LayoutConfig& cfg = {});

// Collapses every whitespace run to a single space, trimming the ends.
std::string collapse_whitespace(std::string_view text);

} // namespace readkit
