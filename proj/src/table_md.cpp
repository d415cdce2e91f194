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

#include "readkit/table_md.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "readkit/errors.hpp"
#include "readkit/geometry.hpp"
#include "readkit/layout.hpp"

namespace readkit {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// ---- minimal HTML tokenizer -------------------------------------------

struct HtmlTag {
    std::string name;   // lowercase, no '/'
    bool closing = false;
    bool self_closing = false;
    std::string attrs; // raw attribute text
};

// Case-insensitive attribute lookup inside a raw attribute string.
// Handles name="v", name='v', and name=v forms.
std::optional<std::string> attr_value(const std::string& attrs, const std::string& name) {
    std::string hay = lower(attrs);
    std::string needle = lower(name);
    std::size_t pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        bool start_ok = pos == 0 || std::isspace(static_cast<unsigned char>(hay[pos - 1]));
        std::size_t after = pos + needle.size();
        if (!start_ok) {
            pos = after;
            continue;
        }
        while (after < hay.size() && std::isspace(static_cast<unsigned char>(hay[after]))) {
            ++after;
        }
        if (after >= hay.size() || hay[after] != '=') {
            pos = after;
            continue;
        }
        ++after;
        while (after < hay.size() && std::isspace(static_cast<unsigned char>(hay[after]))) {
            ++after;
        }
        if (after >= attrs.size()) {
            return std::string{};
        }
        char quote = attrs[after];
        if (quote == '"' || quote == '\'') {
            std::size_t end = attrs.find(quote, after + 1);
            if (end == std::string::npos) {
                return attrs.substr(after + 1);
            }
            return attrs.substr(after + 1, end - after - 1);
        }
        std::size_t end = after;
        while (end < attrs.size() && !std::isspace(static_cast<unsigned char>(attrs[end]))) {
            ++end;
        }
        return attrs.substr(after, end - after);
    }
    return std::nullopt;
}

std::string decode_entities(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '&') {
            out += text[i++];
            continue;
        }
        std::size_t semi = text.find(';', i + 1);
        if (semi == std::string::npos || semi - i > 10) {
            out += text[i++];
            continue;
        }
        std::string ent = text.substr(i + 1, semi - i - 1);
        if (ent == "amp") {
            out += '&';
        } else if (ent == "lt") {
            out += '<';
        } else if (ent == "gt") {
            out += '>';
        } else if (ent == "quot") {
            out += '"';
        } else if (ent == "apos") {
            out += '\'';
        } else if (ent == "nbsp") {
            out += ' ';
        } else if (!ent.empty() && ent[0] == '#') {
            long code = 0;
            if (ent.size() > 2 && (ent[1] == 'x' || ent[1] == 'X')) {
                code = std::strtol(ent.c_str() + 2, nullptr, 16);
            } else {
                code = std::strtol(ent.c_str() + 1, nullptr, 10);
            }
            // UTF-8 encode
            if (code > 0 && code < 0x80) {
                out += static_cast<char>(code);
            } else if (code >= 0x80 && code < 0x800) {
                out += static_cast<char>(0xC0 | (code >> 6));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else if (code >= 0x800 && code <= 0xFFFF) {
                out += static_cast<char>(0xE0 | (code >> 12));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            } else if (code > 0xFFFF && code <= 0x10FFFF) {
                out += static_cast<char>(0xF0 | (code >> 18));
                out += static_cast<char>(0x80 | ((code >> 12) & 0x3F));
                out += static_cast<char>(0x80 | ((code >> 6) & 0x3F));
                out += static_cast<char>(0x80 | (code & 0x3F));
            }
        } else {
            out += text.substr(i, semi - i + 1); // unknown entity, keep verbatim
        }
        i = semi + 1;
    }
    return out;
}

struct Cell {
    std::string text;
    int colspan = 1;
};

} // namespace

void ChartSeries::validate() const {
    for (const auto& [name, values] : series) {
        if (values.size() != categories.size()) {
            throw validation_error("series \"" + name + "\" has " +
                                   std::to_string(values.size()) + " values for " +
                                   std::to_string(categories.size()) + " categories");
        }
    }
}

TableModel html_table_to_model(const std::string& html) {
    std::size_t table_open = lower(html).find("<table");
    if (table_open == std::string::npos) {
        throw validation_error("no <table> element found");
    }

    std::vector<std::vector<Cell>> all_rows;
    std::vector<bool> is_header_row;

    bool in_table = false;
    bool in_thead = false;
    bool in_cell = false;
    bool row_open = false;
    bool row_has_th = false;
    std::string cell_text;
    int cell_span = 1;
    std::vector<Cell> current_row;

    auto flush_cell = [&]() {
        if (in_cell) {
            std::string text = collapse_whitespace(decode_entities(cell_text));
            current_row.push_back(Cell{std::move(text), cell_span});
            in_cell = false;
            cell_text.clear();
        }
    };
    auto flush_row = [&]() {
        flush_cell();
        if (row_open) {
            if (!current_row.empty()) { // a cell-less <tr> contributes nothing
                all_rows.push_back(std::move(current_row));
                is_header_row.push_back(in_thead || row_has_th);
            }
            current_row.clear();
            row_open = false;
        }
    };

    std::size_t i = 0;
    while (i < html.size()) {
        if (html[i] != '<') {
            if (in_cell) {
                cell_text += html[i];
            }
            ++i;
            continue;
        }
        // comments
        if (html.compare(i, 4, "<!--") == 0) {
            std::size_t end = html.find("-->", i + 4);
            i = end == std::string::npos ? html.size() : end + 3;
            continue;
        }
        std::size_t close = html.find('>', i);
        if (close == std::string::npos) {
            break;
        }
        std::string inner = html.substr(i + 1, close - i - 1);
        i = close + 1;

        HtmlTag tag;
        if (!inner.empty() && inner.back() == '/') {
            tag.self_closing = true;
            inner.pop_back();
        }
        std::size_t p = 0;
        if (p < inner.size() && inner[p] == '/') {
            tag.closing = true;
            ++p;
        }
        std::size_t name_start = p;
        while (p < inner.size() && !std::isspace(static_cast<unsigned char>(inner[p]))) {
            ++p;
        }
        tag.name = lower(inner.substr(name_start, p - name_start));
        tag.attrs = inner.substr(std::min(p + 1, inner.size()));

        if (tag.name == "table") {
            if (!tag.closing) {
                if (in_table) {
                    throw validation_error("nested tables are not supported");
                }
                in_table = true;
            } else {
                flush_row();
                break; // single-table contract: stop at </table>
            }
            continue;
        }
        if (!in_table) {
            continue;
        }
        if (tag.name == "thead") {
            in_thead = !tag.closing;
        } else if (tag.name == "tbody" || tag.name == "tfoot") {
            // structural only
        } else if (tag.name == "tr") {
            if (!tag.closing) {
                flush_row();
                row_open = true;
                row_has_th = false;
            } else {
                flush_row();
            }
        } else if (tag.name == "td" || tag.name == "th") {
            if (!tag.closing) {
                flush_cell();
                if (!row_open) { // tolerate a missing <tr>
                    row_open = true;
                    row_has_th = false;
                }
                in_cell = true;
                cell_span = 1;
                if (tag.name == "th") {
                    row_has_th = true;
                }
                if (auto span = attr_value(tag.attrs, "colspan")) {
                    int v = std::atoi(span->c_str());
                    if (v > 1) {
                        cell_span = v;
                    }
                }
                if (auto span = attr_value(tag.attrs, "rowspan")) {
                    if (std::atoi(span->c_str()) > 1) {
                        throw validation_error(
                            "rowspan is not supported: Markdown tables cannot represent "
                            "row-spanning cells");
                    }
                }
            } else {
                flush_cell();
            }
        } else if (tag.name == "br") {
            if (in_cell) {
                cell_text += ' ';
            }
        }
        // every other tag is stripped; its text content still flows into
        // the enclosing cell
    }
    flush_row();

    if (all_rows.empty()) {
        throw validation_error("table has no cells");
    }

    // colspan expansion by duplication
    std::vector<std::vector<std::string>> expanded;
    expanded.reserve(all_rows.size());
    for (const auto& row : all_rows) {
        std::vector<std::string> cells;
        for (const auto& cell : row) {
            for (int c = 0; c < cell.colspan; ++c) {
                cells.push_back(cell.text);
            }
        }
        expanded.push_back(std::move(cells));
    }

    std::size_t header_idx = 0;
    for (std::size_t r = 0; r < is_header_row.size(); ++r) {
        if (is_header_row[r]) {
            header_idx = r;
            break;
        }
    }
    // Rows before the header (rare: tbody emitted before thead) stay data
    // rows; the chosen header row is removed from the data.
    TableModel model;
    model.header = expanded[header_idx];
    for (std::size_t r = 0; r < expanded.size(); ++r) {
        if (r != header_idx) {
            model.rows.push_back(std::move(expanded[r]));
        }
    }

    // pad ragged rows (header included) to the widest arity
    std::size_t arity = model.header.size();
    for (const auto& row : model.rows) {
        arity = std::max(arity, row.size());
    }
    model.header.resize(arity);
    for (auto& row : model.rows) {
        row.resize(arity);
    }
    return model;
}

namespace {

std::string escape_cell(const std::string& cell) {
    std::string out;
    out.reserve(cell.size());
    for (char c : cell) {
        if (c == '\\') {
            out += "\\\\";
        } else if (c == '|') {
            out += "\\|";
        } else if (c == '\n' || c == '\r') {
            out += ' ';
        } else {
            out += c;
        }
    }
    return out;
}

std::string unescape_cell(const std::string& cell) {
    std::string out;
    out.reserve(cell.size());
    for (std::size_t i = 0; i < cell.size(); ++i) {
        if (cell[i] == '\\' && i + 1 < cell.size() &&
            (cell[i + 1] == '\\' || cell[i + 1] == '|')) {
            out += cell[i + 1];
            ++i;
        } else {
            out += cell[i];
        }
    }
    return out;
}

std::string render_row(const std::vector<std::string>& cells) {
    std::string line = "|";
    for (const auto& cell : cells) {
        line += ' ';
        line += escape_cell(cell);
        line += " |";
    }
    return line;
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Splits one markdown table line on unescaped pipes.
std::vector<std::string> split_md_row(const std::string& line) {
    std::vector<std::string> raw;
    std::string cur;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '\\' && i + 1 < line.size()) {
            cur += line[i];
            cur += line[i + 1];
            ++i;
        } else if (line[i] == '|') {
            raw.push_back(cur);
            cur.clear();
        } else {
            cur += line[i];
        }
    }
    raw.push_back(cur);
    // drop the empty segments before the leading and after the trailing pipe
    if (!raw.empty() && trim(raw.front()).empty()) {
        raw.erase(raw.begin());
    }
    if (!raw.empty() && trim(raw.back()).empty()) {
        raw.pop_back();
    }
    std::vector<std::string> cells;
    cells.reserve(raw.size());
    for (auto& c : raw) {
        cells.push_back(unescape_cell(trim(c)));
    }
    return cells;
}

bool is_separator_row(const std::vector<std::string>& cells) {
    if (cells.empty()) {
        return false;
    }
    for (const auto& c : cells) {
        if (c.size() < 3 || c.find_first_not_of("-:") != std::string::npos) {
            return false;
        }
    }
    return true;
}

} // namespace

std::string model_to_markdown(const TableModel& model) {
    std::string out = render_row(model.header);
    out += '\n';
    out += "|";
    for (std::size_t i = 0; i < model.header.size(); ++i) {
        out += " --- |";
    }
    for (const auto& row : model.rows) {
        out += '\n';
        out += render_row(row);
    }
    return out;
}

TableModel markdown_to_model(const std::string& markdown) {
    std::istringstream in(markdown);
    std::string line;
    std::vector<std::vector<std::string>> table_rows;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') {
            if (!table_rows.empty()) {
                break; // table ended
            }
            continue; // skip title/blank prefix
        }
        if (t[0] != '|') {
            throw parse_error("not a pipe-table line: \"" + t + "\"");
        }
        table_rows.push_back(split_md_row(t));
    }
    if (table_rows.size() < 2 || !is_separator_row(table_rows[1])) {
        throw parse_error("pipe table needs a header row and a --- separator row");
    }
    TableModel model;
    model.header = table_rows[0];
    for (std::size_t r = 2; r < table_rows.size(); ++r) {
        model.rows.push_back(table_rows[r]);
    }
    std::size_t arity = model.header.size();
    for (auto& row : model.rows) {
        row.resize(arity);
    }
    return model;
}

std::string format_number(double v) {
    if (!std::isfinite(v)) {
        throw validation_error("cannot format a non-finite number");
    }
    double rounded = std::nearbyint(v);
    if (rounded == v && std::abs(v) < 9.0e15) {
        return std::to_string(static_cast<long long>(v));
    }
    long long q = round_half_away(v * 100.0);
    bool neg = q < 0;
    unsigned long long a =
        neg ? static_cast<unsigned long long>(-q) : static_cast<unsigned long long>(q);
    std::string out = neg ? "-" : "";
    out += std::to_string(a / 100);
    out += '.';
    out += static_cast<char>('0' + (a / 10) % 10);
    out += static_cast<char>('0' + a % 10);
    return out;
}

std::string chart_to_markdown(const ChartSeries& chart) {
    chart.validate();
    TableModel model;
    model.header.push_back("Category");
    for (const auto& [name, values] : chart.series) {
        model.header.push_back(name);
    }
    for (std::size_t i = 0; i < chart.categories.size(); ++i) {
        std::vector<std::string> row;
        row.push_back(chart.categories[i]);
        for (const auto& [name, values] : chart.series) {
            row.push_back(format_number(values[i]));
        }
        model.rows.push_back(std::move(row));
    }
    std::string out;
    if (chart.title && !chart.title->empty()) {
        out += "# " + *chart.title + "\n\n";
    }
    out += model_to_markdown(model);
    return out;
}

ChartSeries parse_chart_json(const std::string& json_text, const std::string& source_name) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(source_name + ": " + e.what());
    }
    if (!root.is_object() || !root.contains("categories") || !root.contains("series")) {
        throw parse_error(source_name + ": chart JSON needs \"categories\" and \"series\"");
    }
    ChartSeries chart;
    if (root.contains("title") && root["title"].is_string()) {
        chart.title = root["title"].get<std::string>();
    }
    for (const auto& cat : root["categories"]) {
        if (cat.is_string()) {
            chart.categories.push_back(cat.get<std::string>());
        } else if (cat.is_number()) {
            chart.categories.push_back(format_number(cat.get<double>()));
        } else {
            throw parse_error(source_name + ": categories must be strings or numbers");
        }
    }
    for (const auto& s : root["series"]) {
        if (!s.is_object() || !s.contains("name") || !s.contains("values")) {
            throw parse_error(source_name + ": each series needs \"name\" and \"values\"");
        }
        std::vector<double> values;
        for (const auto& v : s["values"]) {
            if (!v.is_number()) {
                throw parse_error(source_name + ": series values must be numbers");
            }
            values.push_back(v.get<double>());
        }
        chart.series.emplace_back(s["name"].get<std::string>(), std::move(values));
    }
    chart.validate();
    return chart;
}

std::string html_table_to_markdown(const std::string& html) {
    return model_to_markdown(html_table_to_model(html));
}

} // namespace readkit
