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

#include "readkit/layout.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "readkit/errors.hpp"

namespace readkit {

void LayoutConfig::validate() const {
    if (!(row_overlap_threshold > 0.0 && row_overlap_threshold <= 1.0)) {
        throw validation_error("row_overlap_threshold must be in (0, 1]");
    }
    if (max_gap_spaces < 1) {
        throw validation_error("max_gap_spaces must be positive");
    }
    if (!(vgap_factor > 0.0)) {
        throw validation_error("vgap_factor must be positive");
    }
}

namespace {

struct ProtoRow {
    double y_top;
    double y_bottom;
    std::vector<std::size_t> members; // indices into page.boxes
};

long long clamp_count(long long n, long long lo, long long hi) {
    return std::max(lo, std::min(n, hi));
}

} // namespace

std::vector<RowGroup> group_rows(const Page& page, const LayoutConfig& cfg) {
    cfg.validate();
    if (page.boxes.empty()) {
        return {};
    }

    // Process in ascending y-center order; equal centers keep input order.
    std::vector<std::size_t> order(page.boxes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return page.boxes[a].rect.y_center() < page.boxes[b].rect.y_center();
    });

    std::vector<ProtoRow> rows;
    for (std::size_t idx : order) {
        const Rect& r = page.boxes[idx].rect;
        std::size_t best = rows.size();
        double best_overlap = 0.0;
        for (std::size_t j = 0; j < rows.size(); ++j) {
            const ProtoRow& row = rows[j];
            double overlap = std::min(r.y_max, row.y_bottom) - std::max(r.y_min, row.y_top);
            double need =
                cfg.row_overlap_threshold * std::min(r.height(), row.y_bottom - row.y_top);
            if (overlap >= need && overlap > best_overlap) {
                best = j;
                best_overlap = overlap;
            }
        }
        if (best == rows.size()) {
            rows.push_back(ProtoRow{r.y_min, r.y_max, {idx}});
        } else {
            rows[best].y_top = std::min(rows[best].y_top, r.y_min);
            rows[best].y_bottom = std::max(rows[best].y_bottom, r.y_max);
            rows[best].members.push_back(idx);
        }
    }

    std::stable_sort(rows.begin(), rows.end(), [](const ProtoRow& a, const ProtoRow& b) {
        return (a.y_top + a.y_bottom) / 2.0 < (b.y_top + b.y_bottom) / 2.0;
    });

    std::vector<RowGroup> result;
    result.reserve(rows.size());
    for (auto& row : rows) {
        // Left-to-right; identical x_min resolves by original input order.
        std::sort(row.members.begin(), row.members.end(), [&](std::size_t a, std::size_t b) {
            double xa = page.boxes[a].rect.x_min;
            double xb = page.boxes[b].rect.x_min;
            return xa != xb ? xa < xb : a < b;
        });
        RowGroup group;
        group.y_top = row.y_top;
        group.y_bottom = row.y_bottom;
        group.boxes.reserve(row.members.size());
        for (std::size_t idx : row.members) {
            group.boxes.push_back(page.boxes[idx]);
        }
        group.char_width_px = estimate_char_width(group);
        result.push_back(std::move(group));
    }
    return result;
}

double estimate_char_width(const RowGroup& row) {
    if (row.boxes.empty()) {
        throw validation_error("cannot estimate character width of an empty row");
    }
    double total_width = 0.0;
    std::size_t total_chars = 0;
    for (const auto& box : row.boxes) {
        total_width += box.rect.width();
        total_chars += codepoint_count(box.text);
    }
    // Texts are non-empty by TextBox invariant, so total_chars > 0.
    return total_width / static_cast<double>(total_chars);
}

std::string layout_row(const RowGroup& row, const LayoutConfig& cfg) {
    cfg.validate();
    if (row.boxes.empty()) {
        return {};
    }
    double cw = row.char_width_px > 0.0 ? row.char_width_px : estimate_char_width(row);

    std::string line;
    if (cfg.indent_enabled) {
        long long indent = clamp_count(round_half_away(row.boxes.front().rect.x_min / cw), 0,
                                       cfg.max_gap_spaces);
        line.append(static_cast<std::size_t>(indent), ' ');
    }
    line += row.boxes.front().text;
    for (std::size_t i = 1; i < row.boxes.size(); ++i) {
        double gap = row.boxes[i].rect.x_min - row.boxes[i - 1].rect.x_max;
        long long spaces = clamp_count(round_half_away(gap / cw), 1, cfg.max_gap_spaces);
        line.append(static_cast<std::size_t>(spaces), ' ');
        line += row.boxes[i].text;
    }
    return line;
}

namespace {

void rstrip(std::string& s) {
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.pop_back();
    }
}

double median_row_height(const std::vector<RowGroup>& rows) {
    std::vector<double> heights;
    heights.reserve(rows.size());
    for (const auto& r : rows) {
        heights.push_back(r.height());
    }
    std::sort(heights.begin(), heights.end());
    std::size_t n = heights.size();
    if (n % 2 == 1) {
        return heights[n / 2];
    }
    return (heights[n / 2 - 1] + heights[n / 2]) / 2.0;
}

} // namespace

LayoutText recover_layout(const Page& page, const LayoutConfig& cfg) {
    std::vector<RowGroup> rows = group_rows(page, cfg);
    LayoutText out;
    if (rows.empty()) {
        return out;
    }
    double median_height = cfg.vgap_blank_lines ? median_row_height(rows) : 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (cfg.vgap_blank_lines && i > 0) {
            double vgap = rows[i].y_top - rows[i - 1].y_bottom;
            if (vgap > cfg.vgap_factor * median_height) {
                out.lines.emplace_back();
            }
        }
        std::string line = layout_row(rows[i], cfg);
        rstrip(line);
        out.lines.push_back(std::move(line));
    }
    for (std::size_t i = 0; i < out.lines.size(); ++i) {
        if (i > 0) {
            out.rendered += '\n';
        }
        out.rendered += out.lines[i];
    }
    return out;
}

std::vector<TextBox> reading_order_boxes(const Page& page, const LayoutConfig& cfg) {
    std::vector<TextBox> flat;
    for (auto& row : group_rows(page, cfg)) {
        for (auto& box : row.boxes) {
            flat.push_back(std::move(box));
        }
    }
    return flat;
}

std::string reading_order_text(const Page& page, const LayoutConfig& cfg) {
    std::string out;
    bool first = true;
    for (const auto& box : reading_order_boxes(page, cfg)) {
        if (!first) {
            out += ' ';
        }
        out += box.text;
        first = false;
    }
    return out;
}

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_ws = true; // leading whitespace is dropped
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            in_ws = true;
        } else {
            if (in_ws && !out.empty()) {
                out += ' ';
            }
            out += c;
            in_ws = false;
        }
    }
    return out;
}

} // namespace readkit
