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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "readkit/font.hpp"
#include "readkit/page.hpp"
#include "readkit/render.hpp"

namespace readkit {

// The three sweep families behind the recognition-accuracy curves.
enum class BenchMode {
    PlainFontSweep,     // font sizes, plain white background
    NaturalFontSweep,   // font sizes, natural image background
    PlainWordCountSweep // word counts at a fixed font size
};

std::string_view mode_name(BenchMode mode);
BenchMode parse_mode(std::string_view name);

// One rendering condition. For font sweeps, `word_count` records the
// words actually placed; for word-count sweeps it is the requested run
// length.
struct BenchCondition {
    BenchMode mode = BenchMode::PlainFontSweep;
    int font_px = 12;
    int word_count = 0;
    int phrase_count = 12;              // phrases per image in font sweeps
    std::string background_ref;         // required iff NaturalFontSweep
    int canvas_w = 1024;
    int canvas_h = 1024;
    std::uint64_t seed = 0;
};

// Exact ground truth for one rendered image: every phrase has exactly one
// box, boxes lie within the canvas.
struct ManifestEntry {
    std::string image;
    BenchMode mode = BenchMode::PlainFontSweep;
    int font_px = 0;
    int word_count = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> phrases;
    std::vector<Rect> boxes;
    std::string font_name;
    bool overlay_applied = false;
    std::string background_ref;
    int canvas_w = 0;
    int canvas_h = 0;
};

using BenchManifest = std::vector<ManifestEntry>;

struct RenderedCondition {
    GrayImage image;
    ManifestEntry entry; // entry.image left empty; gen_suite names files
};

// Renders one condition. Phrase sampling and placement are pure functions
// of (condition, word source, font, background). Font sweeps sample
// distinct phrases from `words` (the lexicon); word-count sweeps take a
// contiguous (cyclic) run of `words` (the corpus). Overflowing the canvas
// throws validation_error advising a larger canvas; there is no silent
// truncation.
RenderedCondition render_condition(const BenchCondition& cond,
                                   const std::vector<std::string>& words,
                                   const BitmapFont& font,
                                   const GrayImage* background = nullptr);

// A full sweep-suite definition. The default grid brackets every font
// size a plugged-in OCR engine must be probed at, including the whole
// 4..9 px band.
struct SweepSpec {
    std::vector<int> font_sizes = {4, 5, 6, 7, 8, 9, 10, 12, 16, 24, 32};
    std::vector<int> word_counts = {10, 25, 50, 100, 200, 400};
    int seeds_per_condition = 3;
    int canvas_w = 1024;
    int canvas_h = 1024;
    int phrases_per_image = 12;
    int word_sweep_font_px = 12;
    std::uint64_t seed = 0;
    bool plain_font_sweep = true;
    bool word_count_sweep = true;
    std::string background_dir; // enables the natural-background font sweep
    std::string font_dir;       // multi-font mode; builtin face when empty
    std::string lexicon_path;   // overrides the bundled term lexicon
    std::string corpus_path;    // overrides the bundled prose corpus
    int threads = 1;            // parallel rendering across conditions

    void validate() const;
};

// Renders every condition of the sweep into out_dir (PGM images plus
// manifest.jsonl) and returns the manifest. Deterministic: identical
// (spec, fonts, backgrounds) give byte-identical images and manifest.
BenchManifest gen_suite(const SweepSpec& spec, const std::string& out_dir);

// Manifest JSONL (one record per line, schema in docs/formats.md).
std::string manifest_to_jsonl(const BenchManifest& manifest);
void write_manifest(const BenchManifest& manifest, const std::string& path);
BenchManifest read_manifest(const std::string& path);

// Ground-truth boxes as a Page, for feeding the layout engine.
Page page_from_manifest_entry(const ManifestEntry& entry);

} // namespace readkit
