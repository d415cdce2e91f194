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

#include "readkit/scoring.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "readkit/errors.hpp"

namespace readkit {

namespace {

// The 179-word English stop-word list shipped with the scorer.
const char* const kEnglishStopWords[] = {
    "i", "me", "my", "myself", "we", "our", "ours", "ourselves", "you", "you're", "you've",
    "you'll", "you'd", "your", "yours", "yourself", "yourselves", "he", "him", "his",
    "himself", "she", "she's", "her", "hers", "herself", "it", "it's", "its", "itself",
    "they", "them", "their", "theirs", "themselves", "what", "which", "who", "whom", "this",
    "that", "that'll", "these", "those", "am", "is", "are", "was", "were", "be", "been",
    "being", "have", "has", "had", "having", "do", "does", "did", "doing", "a", "an", "the",
    "and", "but", "if", "or", "because", "as", "until", "while", "of", "at", "by", "for",
    "with", "about", "against", "between", "into", "through", "during", "before", "after",
    "above", "below", "to", "from", "up", "down", "in", "out", "on", "off", "over", "under",
    "again", "further", "then", "once", "here", "there", "when", "where", "why", "how",
    "all", "any", "both", "each", "few", "more", "most", "other", "some", "such", "no",
    "nor", "not", "only", "own", "same", "so", "than", "too", "very", "s", "t", "can",
    "will", "just", "don", "don't", "should", "should've", "now", "d", "ll", "m", "o", "re",
    "ve", "y", "ain", "aren", "aren't", "couldn", "couldn't", "didn", "didn't", "doesn",
    "doesn't", "hadn", "hadn't", "hasn", "hasn't", "haven", "haven't", "isn", "isn't", "ma",
    "mightn", "mightn't", "mustn", "mustn't", "needn", "needn't", "shan", "shan't",
    "shouldn", "shouldn't", "wasn", "wasn't", "weren", "weren't", "won", "won't", "wouldn",
    "wouldn't",
};

bool is_word_char(unsigned char c) {
    // ASCII alphanumerics split words; non-ASCII bytes are kept so UTF-8
    // words pass through intact.
    return std::isalnum(c) || c >= 0x80;
}

char ascii_lower(char c) {
    return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c;
}

// Ground-truth tokens after lowercasing and stop-word removal.
std::vector<std::string> filtered_tokens(const std::string& phrase, const StopWordList& stops) {
    std::vector<std::string> tokens = tokenize(phrase);
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (auto& t : tokens) {
        if (!stops.contains(t)) {
            kept.push_back(std::move(t));
        }
    }
    return kept;
}

} // namespace

const StopWordList& StopWordList::english() {
    static const StopWordList list = [] {
        StopWordList l;
        for (const char* w : kEnglishStopWords) {
            l.words.insert(w);
        }
        return l;
    }();
    return list;
}

const StopWordList& StopWordList::none() {
    static const StopWordList list;
    return list;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    auto flush = [&]() {
        if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word_char(c)) {
            cur += ascii_lower(static_cast<char>(c));
        } else if (c == '-' && !cur.empty() && i + 1 < text.size() &&
                   is_word_char(static_cast<unsigned char>(text[i + 1]))) {
            cur += '-'; // intra-word hyphen
        } else {
            flush();
        }
    }
    flush();
    return tokens;
}

MatchCount score_exact(const std::vector<std::string>& gt_phrases, const std::string& output,
                       const StopWordList& stops) {
    std::vector<std::string> out_tokens = tokenize(output);
    MatchCount count;
    for (const auto& phrase : gt_phrases) {
        std::vector<std::string> needle = filtered_tokens(phrase, stops);
        if (needle.empty()) {
            continue; // emptied by stop-word removal: excluded from total
        }
        ++count.total;
        auto it = std::search(out_tokens.begin(), out_tokens.end(), needle.begin(),
                              needle.end());
        if (it != out_tokens.end()) {
            ++count.detected;
        }
    }
    return count;
}

MatchCount score_topk(const std::vector<std::string>& gt_words,
                      const std::vector<std::vector<std::string>>& ranked, int k,
                      const StopWordList& stops) {
    if (k < 1) {
        throw validation_error("k must be at least 1");
    }
    // candidate set = union of every list's top k
    std::unordered_set<std::string> candidates;
    for (const auto& list : ranked) {
        std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), list.size());
        for (std::size_t i = 0; i < take; ++i) {
            std::string w = list[i];
            std::transform(w.begin(), w.end(), w.begin(), ascii_lower);
            candidates.insert(std::move(w));
        }
    }
    MatchCount count;
    for (const auto& word : gt_words) {
        std::vector<std::string> toks = filtered_tokens(word, stops);
        if (toks.empty()) {
            continue;
        }
        // single ground-truth words only; multi-token entries count per token
        for (const auto& t : toks) {
            ++count.total;
            if (candidates.count(t)) {
                ++count.detected;
            }
        }
    }
    return count;
}

namespace {

int axis_of(const ConditionScore& s) {
    return s.mode == BenchMode::PlainWordCountSweep ? s.word_count : s.font_px;
}

std::string format_accuracy(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

} // namespace

ScoreReport aggregate(const std::vector<ConditionScore>& scores) {
    if (scores.empty()) {
        throw validation_error("nothing to aggregate: no scored conditions");
    }
    // detect two suites mixed together: one image, two conditions
    std::unordered_map<std::string, std::pair<int, int>> seen;
    for (const auto& s : scores) {
        auto key = std::make_pair(static_cast<int>(s.mode), axis_of(s));
        auto [it, inserted] = seen.emplace(s.image, key);
        if (!inserted && it->second != key) {
            throw validation_error("mixed suites: image " + s.image +
                                   " appears with conflicting conditions");
        }
    }

    ScoreReport report;
    report.per_condition = scores;
    std::map<std::pair<int, int>, std::pair<long long, long long>> groups; // (mode,x) -> (det, tot)
    for (const auto& s : scores) {
        auto& g = groups[{static_cast<int>(s.mode), axis_of(s)}];
        g.first += s.count.detected;
        g.second += s.count.total;
    }
    for (const auto& [key, g] : groups) {
        CurveRow row;
        row.mode = static_cast<BenchMode>(key.first);
        row.x = key.second;
        row.n = static_cast<int>(g.second);
        row.accuracy = g.second == 0 ? 0.0 : static_cast<double>(g.first) / g.second;
        report.curve.push_back(row);
    }
    return report;
}

std::string report_to_csv(const ScoreReport& report) {
    std::string out = "mode,x,accuracy,n\n";
    for (const auto& row : report.curve) {
        out += std::string(mode_name(row.mode)) + "," + std::to_string(row.x) + "," +
               format_accuracy(row.accuracy) + "," + std::to_string(row.n) + "\n";
    }
    return out;
}

std::vector<CurveRow> parse_curve_csv(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != "mode,x,accuracy,n") {
        throw parse_error("curve CSV must start with header \"mode,x,accuracy,n\"");
    }
    std::vector<CurveRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream ls(line);
        std::string mode, x, acc, n;
        if (!std::getline(ls, mode, ',') || !std::getline(ls, x, ',') ||
            !std::getline(ls, acc, ',') || !std::getline(ls, n)) {
            throw parse_error("bad curve CSV row: \"" + line + "\"");
        }
        CurveRow row;
        row.mode = parse_mode(mode);
        row.x = std::stoi(x);
        row.accuracy = std::stod(acc);
        row.n = std::stoi(n);
        rows.push_back(row);
    }
    return rows;
}

std::string report_to_json(const ScoreReport& report) {
    nlohmann::ordered_json j;
    auto conditions = nlohmann::ordered_json::array();
    for (const auto& s : report.per_condition) {
        conditions.push_back({{"image", s.image},
                              {"mode", std::string(mode_name(s.mode))},
                              {"font_px", s.font_px},
                              {"word_count", s.word_count},
                              {"n_phrases", s.count.total},
                              {"n_detected", s.count.detected},
                              {"accuracy", s.count.accuracy()}});
    }
    auto curve = nlohmann::ordered_json::array();
    for (const auto& row : report.curve) {
        curve.push_back({{"mode", std::string(mode_name(row.mode))},
                         {"x", row.x},
                         {"accuracy", row.accuracy},
                         {"n", row.n}});
    }
    j["per_condition"] = std::move(conditions);
    j["curve"] = std::move(curve);
    return j.dump(2) + "\n";
}

std::vector<ModelOutput> read_outputs_jsonl(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open file: " + path);
    }
    std::vector<ModelOutput> outputs;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::parse_error& e) {
            throw parse_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
        ModelOutput out;
        out.image = j.at("image").get<std::string>();
        if (j.contains("output")) {
            out.text = j["output"].get<std::string>();
        }
        if (j.contains("ranked")) {
            for (const auto& list : j["ranked"]) {
                std::vector<std::string> words;
                for (const auto& w : list) {
                    words.push_back(w.get<std::string>());
                }
                out.ranked.push_back(std::move(words));
            }
        }
        outputs.push_back(std::move(out));
    }
    return outputs;
}

std::vector<ConditionScore> score_manifest(const BenchManifest& manifest,
                                           const std::vector<ModelOutput>& outputs,
                                           bool topk_mode, int k, const StopWordList& stops,
                                           int* missing_outputs) {
    std::unordered_map<std::string, const ModelOutput*> by_image;
    for (const auto& o : outputs) {
        by_image[o.image] = &o;
    }
    int missing = 0;
    std::vector<ConditionScore> scores;
    scores.reserve(manifest.size());
    for (const auto& entry : manifest) {
        ConditionScore s;
        s.image = entry.image;
        s.mode = entry.mode;
        s.font_px = entry.font_px;
        s.word_count = entry.word_count;
        auto it = by_image.find(entry.image);
        const ModelOutput* out = it == by_image.end() ? nullptr : it->second;
        if (!out) {
            ++missing;
        }
        if (topk_mode) {
            static const std::vector<std::vector<std::string>> kNoLists;
            s.count = score_topk(entry.phrases, out ? out->ranked : kNoLists, k, stops);
        } else {
            s.count = score_exact(entry.phrases, out ? out->text : std::string{}, stops);
        }
        scores.push_back(std::move(s));
    }
    if (missing_outputs) {
        *missing_outputs = missing;
    }
    return scores;
}

} // namespace readkit
