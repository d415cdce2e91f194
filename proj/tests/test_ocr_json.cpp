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

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "readkit/errors.hpp"
#include "readkit/ocr_json.hpp"
#include "readkit/rng.hpp"

using namespace readkit;

TEST_CASE("a single detection becomes one TextBox") {
    std::string json = R"([ [[[10,10],[110,10],[110,30],[10,30]], ["Hello", 0.99]] ])";
    IngestWarnings w;
    Page page = ingest_ocr_text(json, "img0", 200, 100, &w);
    REQUIRE(page.boxes.size() == 1);
    CHECK(page.boxes[0].text == "Hello");
    CHECK(page.boxes[0].rect == Rect{10, 10, 110, 30});
    CHECK(page.boxes[0].confidence == doctest::Approx(0.99));
    CHECK_FALSE(w.any());
}

TEST_CASE("rotated quads ingest as their hull") {
    std::string json = R"([ [[[0,10],[20,0],[30,10],[10,20]], ["tilted", 0.5]] ])";
    Page page = ingest_ocr_text(json, "img0", 100, 100);
    REQUIRE(page.boxes.size() == 1);
    CHECK(page.boxes[0].rect == Rect{0, 0, 30, 20});
}

TEST_CASE("empty text is skipped with a warning") {
    std::string json = R"([ [[[0,0],[10,0],[10,10],[0,10]], ["", 0.9]] ])";
    IngestWarnings w;
    Page page = ingest_ocr_text(json, "img0", 100, 100, &w);
    CHECK(page.boxes.empty());
    CHECK(w.skipped_empty_text == 1);
}

TEST_CASE("degenerate quads are skipped, not fatal") {
    std::string json = R"([
        [[[0,5],[10,5],[10,5],[0,5]], ["flat", 0.9]],
        [[[0,0],[10,0],[10,10],[0,10]], ["ok", 0.9]]
    ])";
    IngestWarnings w;
    Page page = ingest_ocr_text(json, "img0", 100, 100, &w);
    REQUIRE(page.boxes.size() == 1);
    CHECK(page.boxes[0].text == "ok");
    CHECK(w.skipped_degenerate == 1);
}

TEST_CASE("out-of-bounds coordinates clamp to the image") {
    std::string json = R"([ [[[ -3,10],[110,10],[110,30],[-3,30]], ["wide", 0.9]] ])";
    IngestWarnings w;
    Page page = ingest_ocr_text(json, "img0", 100, 50, &w);
    REQUIRE(page.boxes.size() == 1);
    CHECK(page.boxes[0].rect == Rect{0, 10, 100, 30});
    CHECK(w.clamped_boxes == 1);
    CHECK(page.within_bounds());
}

TEST_CASE("a box entirely outside the page degenerates and is skipped") {
    std::string json = R"([ [[[200,10],[250,10],[250,30],[200,30]], ["gone", 0.9]] ])";
    IngestWarnings w;
    Page page = ingest_ocr_text(json, "img0", 100, 50, &w);
    CHECK(page.boxes.empty());
    CHECK(w.skipped_degenerate == 1);
}

TEST_CASE("malformed JSON reports a line number") {
    std::string json = "[\n  [[[0,0],[1,0],[1,1],[0,1]], [\"a\", 1]],\n  oops\n]";
    try {
        ingest_ocr_text(json, "img0", 10, 10);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find(":3") != std::string::npos);
    }
}

TEST_CASE("confidence outside [0, 1] is skipped as invalid") {
    std::string json = R"([ [[[0,0],[10,0],[10,10],[0,10]], ["ok", 1.5]] ])";
    IngestWarnings w;
    Page page = ingest_ocr_text(json, "img0", 100, 100, &w);
    CHECK(page.boxes.empty());
    CHECK(w.skipped_invalid == 1);
}

TEST_CASE("newline in detection text is skipped as invalid") {
    std::string json = "[ [[[0,0],[10,0],[10,10],[0,10]], [\"a\\nb\", 0.9]] ]";
    IngestWarnings w;
    Page page = ingest_ocr_text(json, "img0", 100, 100, &w);
    CHECK(page.boxes.empty());
    CHECK(w.skipped_invalid == 1);
}

TEST_CASE("sidecar form is self-contained") {
    std::string json = R"({"image_id":"doc7","width":320,"height":240,"detections":
        [ [[[10,10],[50,10],[50,20],[10,20]], ["word", 0.8]] ]})";
    Page page = ingest_ocr_sidecar_text(json);
    CHECK(page.image_id == "doc7");
    CHECK(page.width_px == 320);
    CHECK(page.height_px == 240);
    REQUIRE(page.boxes.size() == 1);
}

TEST_CASE("sidecar with missing keys is a parse error") {
    CHECK_THROWS_AS(ingest_ocr_sidecar_text(R"({"image_id":"x","width":10})"), parse_error);
    CHECK_THROWS_AS(ingest_ocr_sidecar_text("[1,2,3]"), parse_error);
}

TEST_CASE("ingest_ocr_any dispatches on the JSON root") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "readkit_ocr_any";
    fs::create_directories(dir);

    std::string bare = (dir / "bare.json").string();
    {
        std::ofstream out(bare);
        out << R"([ [[[0,0],[10,0],[10,10],[0,10]], ["a", 1]] ])";
    }
    Page p1 = ingest_ocr_any(bare, "given-id", 50, 40);
    CHECK(p1.image_id == "given-id");
    CHECK(p1.width_px == 50);

    std::string sidecar = (dir / "sidecar.json").string();
    {
        std::ofstream out(sidecar);
        out << R"({"image_id":"own-id","width":30,"height":20,"detections":[]})";
    }
    // sidecar metadata wins over the supplied values
    Page p2 = ingest_ocr_any(sidecar, "ignored", 999, 999);
    CHECK(p2.image_id == "own-id");
    CHECK(p2.width_px == 30);

    CHECK_THROWS_AS(ingest_ocr_any((dir / "missing.json").string(), "x", 1, 1), io_error);
    fs::remove_all(dir);
}

TEST_CASE("ingestion is order-preserving and lossless for valid records") {
    std::mt19937_64 rng(substream(11, "ocr/roundtrip"));
    for (int trial = 0; trial < 200; ++trial) {
        Page page;
        page.image_id = "p" + std::to_string(trial);
        page.width_px = 640;
        page.height_px = 480;
        std::size_t n = 1 + bounded(rng, 8);
        for (std::size_t i = 0; i < n; ++i) {
            double x = uniform_in(rng, 0.0, 600.0);
            double y = uniform_in(rng, 0.0, 440.0);
            double w = uniform_in(rng, 1.0, 39.0);
            double h = uniform_in(rng, 1.0, 39.0);
            page.boxes.push_back(TextBox::from_rect(
                "w" + std::to_string(i), Rect{x, y, x + w, y + h}, unit_double(rng)));
        }
        IngestWarnings warnings;
        Page again = ingest_ocr_sidecar_text(page_to_ocr_json(page), &warnings);
        CHECK(again == page);
        CHECK_FALSE(warnings.any());
    }
}
