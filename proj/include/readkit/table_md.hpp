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

#include <optional>
#include <string>
#include <vector>

namespace readkit {

// Rectangular table: every row has the same arity as the header (ragged
// sources are padded with empty cells). Cell text is stored trimmed with
// internal whitespace runs collapsed.
struct TableModel {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const TableModel&, const TableModel&) = default;
};

// Chart source data: categories plus one value list per series, all of
// equal length.
struct ChartSeries {
    std::optional<std::string> title;
    std::vector<std::string> categories;
    std::vector<std::pair<std::string, std::vector<double>>> series;

    // Throws validation_error on a length mismatch.
    void validate() const;
};

// Parses a single <table> supporting thead/tbody/tfoot/tr/th/td and
// colspan (expanded by cell duplication). Tags outside that whitelist are
// stripped, entities decoded. Errors: no <table>, nested tables, and
// rowspan > 1 (Markdown cannot represent it).
TableModel html_table_to_model(const std::string& html);

// GitHub-flavored pipe table: header row, `---` separator, data rows.
// `|` in cells renders as `\|` and `\` as `\\` so the output re-parses
// losslessly.
std::string model_to_markdown(const TableModel& model);

// Parses a pipe table produced by model_to_markdown (a leading `# title`
// line is skipped). Inverse of model_to_markdown for any model whose
// cells are trimmed and newline-free.
TableModel markdown_to_model(const std::string& markdown);

// Optional `# title` line, then a pipe table: first column "Category",
// one column per series. Integers render bare, other values with 2
// decimals.
std::string chart_to_markdown(const ChartSeries& chart);

// Chart input JSON:
//   {"title": ..., "categories": [...],
//    "series": [{"name": ..., "values": [...]}, ...]}
// Numeric categories are formatted with the same number rule as values.
ChartSeries parse_chart_json(const std::string& json_text,
                             const std::string& source_name = "<string>");

// Integers bare, everything else with exactly 2 decimals
// (round-half-away-from-zero).
std::string format_number(double v);

// Convenience: html_table_to_model |> model_to_markdown.
std::string html_table_to_markdown(const std::string& html);

} // namespace readkit
