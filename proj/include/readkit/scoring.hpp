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
#include <unordered_set>
#include <vector>

#include "readkit/synth_bench.hpp"

namespace readkit {

// Lowercase stop words removed from ground truth before matching.
struct StopWordList {
    std::unordered_set<std::string> words;

    bool contains(const std::string& w) const { return words.count(w) > 0; }

    // The bundled 179-word English list.
    static const StopWordList& english();
    // An empty list (no filtering).
    static const StopWordList& none();
};

// Lowercases and splits on whitespace and punctuation. Alphanumerics are
// kept; a hyphen survives only between two alphanumerics ("state-of" is
// one token, "- dash" is not).
std::vector<std::string> tokenize(std::string_view text);

struct MatchCount {
    int detected = 0;
    int total = 0;

    double accuracy() const { return total == 0 ? 0.0 : static_cast<double>(detected) / total; }
};

// Exact-match recognition accuracy: a ground-truth phrase counts as
// detected iff its token sequence (lowercased, stop words removed)
// appears contiguously in the tokenized output. Phrases emptied by
// stop-word removal are excluded from the total.
MatchCount score_exact(const std::vector<std::string>& gt_phrases, const std::string& output,
                       const StopWordList& stops = StopWordList::english());

// Top-k accuracy over ranked candidate lists: a ground-truth word counts
// as detected iff it appears among the top k candidates of at least one
// list. k < 1 is an error.
MatchCount score_topk(const std::vector<std::string>& gt_words,
                      const std::vector<std::vector<std::string>>& ranked, int k = 3,
                      const StopWordList& stops = StopWordList::english());

// Per-image score joined back to its rendering condition.
struct ConditionScore {
    std::string image;
    BenchMode mode = BenchMode::PlainFontSweep;
    int font_px = 0;
    int word_count = 0;
    MatchCount count;
};

// Aggregate curve row: accuracy against the sweep axis (font_px for font
// sweeps, word_count for word-count sweeps), n = total phrases in the
// group.
struct CurveRow {
    BenchMode mode = BenchMode::PlainFontSweep;
    int x = 0;
    double accuracy = 0.0;
    int n = 0;
};

struct ScoreReport {
    std::vector<ConditionScore> per_condition;
    std::vector<CurveRow> curve;
};

// Groups per-condition scores into curve rows. Errors: empty input, or
// the same image appearing with conflicting conditions (two suites mixed
// together).
ScoreReport aggregate(const std::vector<ConditionScore>& scores);

// "mode,x,accuracy,n" CSV, rows ordered by (mode, x). Deterministic.
std::string report_to_csv(const ScoreReport& report);
std::vector<CurveRow> parse_curve_csv(const std::string& csv);

// Report JSON (schema in docs/formats.md).
std::string report_to_json(const ScoreReport& report);

// One model output per image: either plain text or ranked candidate
// lists.
struct ModelOutput {
    std::string image;
    std::string text;
    std::vector<std::vector<std::string>> ranked;
};

// Outputs JSONL: {"image": ..., "output": ...} or {"image": ...,
// "ranked": [["w1", ...], ...]}.
std::vector<ModelOutput> read_outputs_jsonl(const std::string& path);

// Scores a whole manifest against model outputs (matched by image name;
// images without an output score zero with a warning counted). Exact
// mode uses score_exact on each entry; top-k mode uses score_topk with
// the entry's phrases split into words.
std::vector<ConditionScore> score_manifest(const BenchManifest& manifest,
                                           const std::vector<ModelOutput>& outputs,
                                           bool topk_mode = false, int k = 3,
                                           const StopWordList& stops = StopWordList::english(),
                                           int* missing_outputs = nullptr);

} // namespace readkit
