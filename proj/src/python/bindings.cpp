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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "readkit/assets.hpp"
#include "readkit/bbox_codec.hpp"
#include "readkit/errors.hpp"
#include "readkit/instruct.hpp"
#include "readkit/layout.hpp"
#include "readkit/ocr_json.hpp"
#include "readkit/scoring.hpp"
#include "readkit/synth_bench.hpp"
#include "readkit/table_md.hpp"
#include "readkit/version.hpp"

namespace py = pybind11;
using namespace readkit;

PYBIND11_MODULE(_readkit, m) {
    m.doc() = "OCR layout recovery, instruction data generation, and the synthetic "
              "text-recognition benchmark";
    m.attr("__version__") = kVersion;

    py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<io_error>(m, "IoError", PyExc_IOError);

    // ---- geometry / pages -------------------------------------------
    py::class_<Rect>(m, "Rect")
        .def(py::init<double, double, double, double>(), py::arg("x_min"), py::arg("y_min"),
             py::arg("x_max"), py::arg("y_max"))
        .def_readwrite("x_min", &Rect::x_min)
        .def_readwrite("y_min", &Rect::y_min)
        .def_readwrite("x_max", &Rect::x_max)
        .def_readwrite("y_max", &Rect::y_max)
        .def("width", &Rect::width)
        .def("height", &Rect::height)
        .def("__eq__", [](const Rect& a, const Rect& b) { return a == b; })
        .def("__repr__", [](const Rect& r) {
            return "Rect(" + std::to_string(r.x_min) + ", " + std::to_string(r.y_min) + ", " +
                   std::to_string(r.x_max) + ", " + std::to_string(r.y_max) + ")";
        });

    py::class_<TextBox>(m, "TextBox")
        .def_static("from_rect", &TextBox::from_rect, py::arg("text"), py::arg("rect"),
                    py::arg("confidence") = 1.0)
        .def_readonly("text", &TextBox::text)
        .def_readonly("rect", &TextBox::rect)
        .def_readonly("confidence", &TextBox::confidence);

    py::class_<Page>(m, "Page")
        .def(py::init<>())
        .def(py::init([](std::string image_id, int width, int height) {
                 return Page{std::move(image_id), width, height, {}};
             }),
             py::arg("image_id"), py::arg("width_px"), py::arg("height_px"))
        .def_readwrite("image_id", &Page::image_id)
        .def_readwrite("width_px", &Page::width_px)
        .def_readwrite("height_px", &Page::height_px)
        .def_readwrite("boxes", &Page::boxes)
        .def("add_box",
             [](Page& page, const std::string& text, const Rect& rect, double confidence) {
                 page.boxes.push_back(TextBox::from_rect(text, rect, confidence));
             },
             py::arg("text"), py::arg("rect"), py::arg("confidence") = 1.0);

    m.def(
        "ingest_ocr",
        [](const std::string& path, const std::string& image_id, int w, int h) {
            return ingest_ocr(path, image_id, w, h);
        },
        py::arg("path"), py::arg("image_id"), py::arg("width_px"), py::arg("height_px"),
        "Read the bare OCR-JSON array form from a file");
    m.def(
        "ingest_ocr_text",
        [](const std::string& text, const std::string& image_id, int w, int h) {
            return ingest_ocr_text(text, image_id, w, h);
        },
        py::arg("json_text"), py::arg("image_id"), py::arg("width_px"), py::arg("height_px"));
    m.def(
        "ingest_ocr_sidecar",
        [](const std::string& path) { return ingest_ocr_sidecar(path); }, py::arg("path"));
    m.def(
        "ingest_ocr_sidecar_text",
        [](const std::string& text) { return ingest_ocr_sidecar_text(text); },
        py::arg("json_text"));
    m.def("page_to_ocr_json", &page_to_ocr_json, py::arg("page"));

    // ---- layout recovery ----------------------------------------------
    py::class_<LayoutConfig>(m, "LayoutConfig")
        .def(py::init<>())
        .def_readwrite("row_overlap_threshold", &LayoutConfig::row_overlap_threshold)
        .def_readwrite("max_gap_spaces", &LayoutConfig::max_gap_spaces)
        .def_readwrite("indent_enabled", &LayoutConfig::indent_enabled)
        .def_readwrite("vgap_blank_lines", &LayoutConfig::vgap_blank_lines)
        .def_readwrite("vgap_factor", &LayoutConfig::vgap_factor);

    py::class_<LayoutText>(m, "LayoutText")
        .def_readonly("lines", &LayoutText::lines)
        .def_readonly("rendered", &LayoutText::rendered);

    m.def("recover_layout", &recover_layout, py::arg("page"),
          py::arg("config") = LayoutConfig{});
    m.def("reading_order_text", &reading_order_text, py::arg("page"),
          py::arg("config") = LayoutConfig{});
    m.def("collapse_whitespace", &collapse_whitespace, py::arg("text"));

    // ---- box codec ------------------------------------------------------
    py::class_<NormalizedBox>(m, "NormalizedBox")
        .def(py::init<double, double, double, double>(), py::arg("x_min"), py::arg("y_min"),
             py::arg("x_max"), py::arg("y_max"))
        .def_readonly("x_min", &NormalizedBox::x_min)
        .def_readonly("y_min", &NormalizedBox::y_min)
        .def_readonly("x_max", &NormalizedBox::x_max)
        .def_readonly("y_max", &NormalizedBox::y_max)
        .def("__eq__", [](const NormalizedBox& a, const NormalizedBox& b) { return a == b; });

    m.def("normalize_box", &normalize, py::arg("rect"), py::arg("width_px"),
          py::arg("height_px"));
    m.def("denormalize_box", &denormalize, py::arg("box"), py::arg("width_px"),
          py::arg("height_px"));
    m.def("format_box", &format_box, py::arg("box"));
    m.def("parse_box", [](const std::string& s) { return parse_box(s); }, py::arg("text"));

    // ---- instruction data ------------------------------------------------
    py::enum_<Task>(m, "Task")
        .value("TextRecognition", Task::TextRecognition)
        .value("TextLocalization", Task::TextLocalization)
        .value("PageParsing", Task::PageParsing)
        .value("LayoutRecovery", Task::LayoutRecovery);

    py::class_<InstructionRecord>(m, "InstructionRecord")
        .def_readonly("id", &InstructionRecord::id)
        .def_readonly("image_ref", &InstructionRecord::image_ref)
        .def_readonly("task", &InstructionRecord::task)
        .def_readonly("instruction", &InstructionRecord::instruction)
        .def_readonly("response", &InstructionRecord::response);

    m.def("template_pool", [](Task task) {
        const TemplatePool& pool = template_pool(task);
        return std::vector<std::string>(pool.begin(), pool.end());
    });
    m.def("gen_task1", &gen_task1, py::arg("page"), py::arg("rng_seed"),
          py::arg("config") = LayoutConfig{});
    m.def("gen_task2", &gen_task2, py::arg("page"), py::arg("rng_seed"),
          py::arg("config") = LayoutConfig{});
    m.def("gen_task3", &gen_task3, py::arg("page_markdown"), py::arg("rng_seed"),
          py::arg("image_ref"));
    m.def("gen_task4", &gen_task4, py::arg("page"), py::arg("rng_seed"),
          py::arg("config") = LayoutConfig{});
    m.def("records_to_json", &records_to_json, py::arg("records"));
    m.def("write_records", &write_records, py::arg("records"), py::arg("path"));
    m.def("read_records", &read_records, py::arg("path"));

    // ---- tables and charts -------------------------------------------------
    m.def("html_table_to_markdown", &html_table_to_markdown, py::arg("html"));
    m.def(
        "chart_json_to_markdown",
        [](const std::string& json_text) {
            return chart_to_markdown(parse_chart_json(json_text));
        },
        py::arg("json_text"));

    // ---- benchmark + scoring ------------------------------------------------
    py::class_<SweepSpec>(m, "SweepSpec")
        .def(py::init<>())
        .def_readwrite("font_sizes", &SweepSpec::font_sizes)
        .def_readwrite("word_counts", &SweepSpec::word_counts)
        .def_readwrite("seeds_per_condition", &SweepSpec::seeds_per_condition)
        .def_readwrite("canvas_w", &SweepSpec::canvas_w)
        .def_readwrite("canvas_h", &SweepSpec::canvas_h)
        .def_readwrite("phrases_per_image", &SweepSpec::phrases_per_image)
        .def_readwrite("word_sweep_font_px", &SweepSpec::word_sweep_font_px)
        .def_readwrite("seed", &SweepSpec::seed)
        .def_readwrite("plain_font_sweep", &SweepSpec::plain_font_sweep)
        .def_readwrite("word_count_sweep", &SweepSpec::word_count_sweep)
        .def_readwrite("background_dir", &SweepSpec::background_dir)
        .def_readwrite("font_dir", &SweepSpec::font_dir)
        .def_readwrite("threads", &SweepSpec::threads);

    py::class_<ManifestEntry>(m, "ManifestEntry")
        .def_readonly("image", &ManifestEntry::image)
        .def_readonly("font_px", &ManifestEntry::font_px)
        .def_readonly("word_count", &ManifestEntry::word_count)
        .def_readonly("seed", &ManifestEntry::seed)
        .def_readonly("phrases", &ManifestEntry::phrases)
        .def_readonly("boxes", &ManifestEntry::boxes)
        .def_readonly("font_name", &ManifestEntry::font_name);

    m.def("gen_suite", &gen_suite, py::arg("spec"), py::arg("out_dir"));
    m.def("read_manifest", &read_manifest, py::arg("path"));
    m.def("page_from_manifest_entry", &page_from_manifest_entry, py::arg("entry"));

    m.def("tokenize", &tokenize, py::arg("text"));
    m.def("english_stopwords", []() {
        const auto& words = StopWordList::english().words;
        return std::vector<std::string>(words.begin(), words.end());
    });
    m.def(
        "score_exact",
        [](const std::vector<std::string>& gt, const std::string& output, bool use_stops) {
            MatchCount c = score_exact(
                gt, output, use_stops ? StopWordList::english() : StopWordList::none());
            return py::make_tuple(c.detected, c.total);
        },
        py::arg("gt_phrases"), py::arg("output"), py::arg("use_stopwords") = true);
    m.def(
        "score_topk",
        [](const std::vector<std::string>& gt,
           const std::vector<std::vector<std::string>>& ranked, int k, bool use_stops) {
            MatchCount c = score_topk(
                gt, ranked, k, use_stops ? StopWordList::english() : StopWordList::none());
            return py::make_tuple(c.detected, c.total);
        },
        py::arg("gt_words"), py::arg("ranked"), py::arg("k") = 3,
        py::arg("use_stopwords") = true);
}
