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

#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <random>
#include <sstream>

#include "readkit/errors.hpp"
#include "readkit/rng.hpp"
#include "readkit/table_md.hpp"

using namespace readkit;

#ifndef READKIT_TEST_DATA_DIR
#define READKIT_TEST_DATA_DIR "tests/golden"
#endif

namespace {

std::string read_golden(const std::string& name) {
    std::ifstream in(std::string(READKIT_TEST_DATA_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::multiset<std::string> nonempty_cells(const TableModel& model) {
    std::multiset<std::string> cells;
    for (const auto& c : model.header) {
        if (!c.empty()) {
            cells.insert(c);
        }
    }
    for (const auto& row : model.rows) {
        for (const auto& c : row) {
            if (!c.empty()) {
                cells.insert(c);
            }
        }
    }
    return cells;
}

} // namespace

TEST_CASE("basic th/td table") {
    TableModel m = html_table_to_model(
        "<table><tr><th>A</th><th>B</th></tr><tr><td>1</td><td>2</td></tr></table>");
    CHECK(m.header == std::vector<std::string>{"A", "B"});
    REQUIRE(m.rows.size() == 1);
    CHECK(m.rows[0] == std::vector<std::string>{"1", "2"});
}

TEST_CASE("colspan expands by duplicating the cell") {
    TableModel m = html_table_to_model(
        "<table><tr><th>A</th><th>B</th></tr>"
        "<tr><td colspan=\"2\">X</td></tr></table>");
    REQUIRE(m.rows.size() == 1);
    CHECK(m.rows[0] == std::vector<std::string>{"X", "X"});
}

TEST_CASE("thead marks the header even without th") {
    TableModel m = html_table_to_model(
        "<table><thead><tr><td>H1</td><td>H2</td></tr></thead>"
        "<tbody><tr><td>a</td><td>b</td></tr></tbody></table>");
    CHECK(m.header == std::vector<std::string>{"H1", "H2"});
    REQUIRE(m.rows.size() == 1);
}

TEST_CASE("a table of only td rows takes the first row as header") {
    TableModel m =
        html_table_to_model("<table><tr><td>x</td></tr><tr><td>y</td></tr></table>");
    CHECK(m.header == std::vector<std::string>{"x"});
    REQUIRE(m.rows.size() == 1);
    CHECK(m.rows[0] == std::vector<std::string>{"y"});
}

TEST_CASE("ragged rows pad with empty cells") {
    TableModel m = html_table_to_model(
        "<table><tr><th>A</th><th>B</th><th>C</th></tr><tr><td>1</td></tr></table>");
    REQUIRE(m.rows.size() == 1);
    CHECK(m.rows[0] == std::vector<std::string>{"1", "", ""});
}

TEST_CASE("inline tags strip, entities decode, whitespace collapses") {
    TableModel m = html_table_to_model(
        "<table><tr><th> A&amp;B </th></tr>"
        "<tr><td><b>bold</b> &lt;text&gt;\n  and &#65;</td></tr></table>");
    CHECK(m.header == std::vector<std::string>{"A&B"});
    CHECK(m.rows[0][0] == "bold <text> and A");
}

TEST_CASE("missing table, nested tables, and rowspan are explicit errors") {
    CHECK_THROWS_AS(html_table_to_model("<div>no table</div>"), validation_error);
    CHECK_THROWS_AS(html_table_to_model("<table><tr><td><table></table></td></tr></table>"),
                    validation_error);
    CHECK_THROWS_AS(
        html_table_to_model("<table><tr><td rowspan=\"2\">x</td></tr><tr></tr></table>"),
        validation_error);
    // rowspan="1" is harmless
    CHECK_NOTHROW(html_table_to_model("<table><tr><td rowspan=\"1\">x</td></tr></table>"));
    // cell-less tables have nothing to convert
    CHECK_THROWS_AS(html_table_to_model("<table><tr></tr></table>"), validation_error);
}

TEST_CASE("annotation-style cell list survives flattening") {
    // The source annotation's cell sequence is the oracle for the parse.
    std::vector<std::string> annotation = {"Model", "Score", "alpha", "0.91", "beta", "0.87"};
    std::string html =
        "<table><thead><tr><th>Model</th><th>Score</th></tr></thead><tbody>"
        "<tr><td>alpha</td><td>0.91</td></tr>"
        "<tr><td>beta</td><td>0.87</td></tr></tbody></table>";
    TableModel m = html_table_to_model(html);
    std::vector<std::string> flattened = m.header;
    for (const auto& row : m.rows) {
        flattened.insert(flattened.end(), row.begin(), row.end());
    }
    CHECK(flattened == annotation);
}

TEST_CASE("markdown rendering matches the pipe-table form") {
    TableModel m;
    m.header = {"A", "B"};
    m.rows = {{"1", "2"}};
    CHECK(model_to_markdown(m) == "| A | B |\n| --- | --- |\n| 1 | 2 |");
}

TEST_CASE("empty rows render header and separator only") {
    TableModel m;
    m.header = {"A", "B"};
    CHECK(model_to_markdown(m) == "| A | B |\n| --- | --- |");
}

TEST_CASE("pipes inside cells are escaped and recovered") {
    TableModel m;
    m.header = {"menu"};
    m.rows = {{"a|b"}};
    std::string md = model_to_markdown(m);
    CHECK(md.find("a\\|b") != std::string::npos);
    CHECK(markdown_to_model(md) == m);
}

TEST_CASE("backslashes inside cells survive the round trip") {
    TableModel m;
    m.header = {"path"};
    m.rows = {{"C:\\tmp"}, {"a\\|literal"}};
    CHECK(markdown_to_model(model_to_markdown(m)) == m);
}

TEST_CASE("markdown re-parse equals the source model (fuzz)") {
    std::mt19937_64 rng(substream(41, "table/fuzz"));
    const std::string alphabet = "abcXYZ019 |\\-#&<>.";
    for (int trial = 0; trial < 500; ++trial) {
        TableModel m;
        std::size_t cols = 1 + bounded(rng, 5);
        std::size_t rows = bounded(rng, 5);
        auto cell = [&]() {
            std::size_t len = bounded(rng, 9);
            std::string s;
            for (std::size_t i = 0; i < len; ++i) {
                s += alphabet[bounded(rng, alphabet.size())];
            }
            // stored cells are trimmed; mirror that in the generator
            std::size_t b = s.find_first_not_of(' ');
            if (b == std::string::npos) {
                return std::string{};
            }
            std::size_t e = s.find_last_not_of(' ');
            return s.substr(b, e - b + 1);
        };
        for (std::size_t c = 0; c < cols; ++c) {
            m.header.push_back(cell());
        }
        for (std::size_t r = 0; r < rows; ++r) {
            std::vector<std::string> row;
            for (std::size_t c = 0; c < cols; ++c) {
                row.push_back(cell());
            }
            m.rows.push_back(std::move(row));
        }
        TableModel back = markdown_to_model(model_to_markdown(m));
        CHECK(back == m);
    }
}

TEST_CASE("cell multiset survives html -> model -> markdown -> re-parse") {
    std::string html =
        "<table><tr><th>Item</th><th>Price</th></tr>"
        "<tr><td>Soup | Salad</td><td>4.5</td></tr>"
        "<tr><td colspan=\"2\">Combo</td></tr></table>";
    TableModel model = html_table_to_model(html);
    TableModel back = markdown_to_model(model_to_markdown(model));
    CHECK(nonempty_cells(back) == nonempty_cells(model));
    CHECK(back == model);
}

TEST_CASE("chart renders categories against series columns") {
    ChartSeries chart;
    chart.categories = {"2020", "2021"};
    chart.series = {{"Sales", {5, 7}}};
    std::string md = chart_to_markdown(chart);
    CHECK(md == "| Category | Sales |\n| --- | --- |\n| 2020 | 5 |\n| 2021 | 7 |");
}

TEST_CASE("zero series still yields the category table") {
    ChartSeries chart;
    chart.categories = {"a", "b"};
    std::string md = chart_to_markdown(chart);
    CHECK(md == "| Category |\n| --- |\n| a |\n| b |");
}

TEST_CASE("series length mismatch is an error") {
    ChartSeries chart;
    chart.categories = {"a", "b"};
    chart.series = {{"S", {1.0}}};
    CHECK_THROWS_AS(chart_to_markdown(chart), validation_error);
}

TEST_CASE("number formatting: integers bare, others at 2 decimals") {
    CHECK(format_number(5) == "5");
    CHECK(format_number(5.0) == "5");
    CHECK(format_number(-2.0) == "-2");
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(1.5) == "1.50");
    CHECK(format_number(6.549) == "6.55");
    CHECK(format_number(-2.345) == "-2.35"); // half away from zero
}

TEST_CASE("chart golden file") {
    ChartSeries chart;
    chart.title = "Quarterly revenue";
    chart.categories = {"2020", "2021", "2022"};
    chart.series = {{"Sales", {5, 7, 6.55}}, {"Returns", {0.25, 1.5, -2}}};
    CHECK(chart_to_markdown(chart) + "\n" == read_golden("chart_sales.md"));
}

TEST_CASE("table golden file") {
    std::string html =
        "<table><tr><th>Item</th><th>Price</th><th>Notes</th></tr>"
        "<tr><td>Soup | Salad</td><td>4.50</td><td>choose one</td></tr>"
        "<tr><td>Bread</td><td>2</td></tr>"
        "<tr><td>Combo</td><td>6</td><td>soup and salad</td></tr></table>";
    CHECK(html_table_to_markdown(html) + "\n" == read_golden("table_menu.md"));
}

TEST_CASE("the parser survives arbitrary byte soup") {
    // never crashes: either a model comes back or a typed error is thrown
    std::mt19937_64 rng(substream(43, "table/soup"));
    const std::string pieces[] = {"<table>", "</table>", "<tr>", "</tr>",  "<td",
                                  ">",       "colspan",  "=",    "\"2\"",  "<th>",
                                  "&amp;",   "&#x41;",   "text", "<!--",   "-->",
                                  "|",       "\\",       "<",    "\r\n",   "<x y>"};
    for (int trial = 0; trial < 2000; ++trial) {
        std::string html;
        std::size_t n = bounded(rng, 30);
        for (std::size_t i = 0; i < n; ++i) {
            html += pieces[bounded(rng, std::size(pieces))];
        }
        try {
            TableModel m = html_table_to_model(html);
            CHECK(m.header.size() >= 1);
        } catch (const validation_error&) {
        } catch (const parse_error&) {
        }
    }
}

TEST_CASE("chart JSON parses with numeric categories formatted") {
    std::string json = R"({"title":"T","categories":[2020,2021],
                           "series":[{"name":"Sales","values":[5,7]}]})";
    ChartSeries chart = parse_chart_json(json);
    CHECK(chart.categories == std::vector<std::string>{"2020", "2021"});
    REQUIRE(chart.series.size() == 1);
    CHECK(chart.series[0].first == "Sales");
    CHECK_THROWS_AS(parse_chart_json("{"), parse_error);
    CHECK_THROWS_AS(parse_chart_json(R"({"categories":[1]})"), parse_error);
    CHECK_THROWS_AS(
        parse_chart_json(R"({"categories":[1],"series":[{"name":"s","values":[1,2]}]})"),
        validation_error);
}
