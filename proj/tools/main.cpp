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

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "readkit/assets.hpp"
#include "readkit/bbox_codec.hpp"
#include "readkit/errors.hpp"
#include "readkit/instruct.hpp"
#include "readkit/layout.hpp"
#include "readkit/ocr_json.hpp"
#include "readkit/rng.hpp"
#include "readkit/scoring.hpp"
#include "readkit/synth_bench.hpp"
#include "readkit/table_md.hpp"
#include "readkit/version.hpp"

namespace fs = std::filesystem;
using namespace readkit;

namespace {

enum class LogLevel { Debug = 0, Info = 1, Warn = 2, Error = 3 };

struct Globals {
    std::uint64_t seed = 0;
    int threads = 1;
    std::string log_level = "info";

    LogLevel level() const {
        if (log_level == "debug") {
            return LogLevel::Debug;
        }
        if (log_level == "warn") {
            return LogLevel::Warn;
        }
        if (log_level == "error") {
            return LogLevel::Error;
        }
        return LogLevel::Info;
    }
};

Globals g_globals;

void log_at(LogLevel level, const std::string& msg) {
    static const char* names[] = {"debug", "info", "warn", "error"};
    if (level >= g_globals.level()) {
        std::cerr << "readkit [" << names[static_cast<int>(level)] << "] " << msg << "\n";
    }
}

// Ordered parallel map: each index writes its own slot, so output order
// never depends on scheduling. The first worker exception is rethrown on
// the calling thread after the pool drains.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    if (threads == 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                if (failed.load()) {
                    return;
                }
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                    failed.store(true);
                    return;
                }
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open for writing: " + path);
    }
    out << content;
    if (!out) {
        throw io_error("write failure: " + path);
    }
}

std::string utc_now() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Machine-readable run metadata next to every output artifact. The
// timestamp lives only here, never in the outputs themselves.
void write_run_meta(const std::string& near_path, const std::string& subcommand,
                    const std::string& config_desc) {
    nlohmann::ordered_json meta;
    meta["tool"] = "readkit";
    meta["version"] = kVersion;
    meta["subcommand"] = subcommand;
    meta["seed"] = g_globals.seed;
    meta["threads"] = g_globals.threads;
    char hash[20];
    std::snprintf(hash, sizeof(hash), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(config_desc)));
    meta["config_hash"] = hash;
    meta["created_utc"] = utc_now();
    std::string path = fs::is_directory(near_path)
                           ? (fs::path(near_path) / "run.json").string()
                           : near_path + ".run.json";
    write_file(path, meta.dump(2) + "\n");
}

// Sorted .json inputs: a single file, or every *.json in a directory.
std::vector<std::string> collect_json_inputs(const std::string& in) {
    if (!fs::exists(in)) {
        throw io_error("input does not exist: " + in);
    }
    if (fs::is_regular_file(in)) {
        return {in};
    }
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(in)) {
        if (entry.path().extension() == ".json") {
            paths.push_back(entry.path().string());
        }
    }
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) {
        throw validation_error("no .json inputs found in " + in);
    }
    return paths;
}

struct PageOptions {
    std::string image_id;
    int width = 0;
    int height = 0;
    double min_confidence = -1.0; // off by default
};

Page load_page(const std::string& path, const PageOptions& opts, IngestWarnings* warnings) {
    std::string id = opts.image_id.empty() ? fs::path(path).stem().string() : opts.image_id;
    Page page = ingest_ocr_any(path, id, opts.width, opts.height, warnings);
    if (opts.min_confidence >= 0.0) {
        std::vector<TextBox> kept;
        for (auto& box : page.boxes) {
            if (box.confidence >= opts.min_confidence) {
                kept.push_back(std::move(box));
            }
        }
        page.boxes = std::move(kept);
    }
    return page;
}

void warn_summary(const std::string& path, const IngestWarnings& warnings) {
    if (warnings.any()) {
        log_at(LogLevel::Warn, path + ": " + warnings.summary());
    }
}

// ---- subcommand payloads ---------------------------------------------

struct LayoutArgs {
    std::string in;
    std::string out;
    std::string format = "text"; // text | jsonl
    PageOptions page;
    LayoutConfig cfg;
};

int run_recover_layout(const LayoutArgs& args) {
    std::vector<std::string> inputs = collect_json_inputs(args.in);
    std::vector<std::string> ids(inputs.size());
    std::vector<std::string> rendered(inputs.size());
    std::vector<IngestWarnings> warnings(inputs.size());
    parallel_for(inputs.size(), g_globals.threads, [&](std::size_t i) {
        Page page = load_page(inputs[i], args.page, &warnings[i]);
        ids[i] = page.image_id;
        rendered[i] = recover_layout(page, args.cfg).rendered;
    });
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        warn_summary(inputs[i], warnings[i]);
    }

    if (args.format == "jsonl") {
        std::string out;
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            nlohmann::ordered_json j;
            j["image_id"] = ids[i];
            j["layout_text"] = rendered[i];
            out += j.dump();
            out += '\n';
        }
        write_file(args.out, out);
    } else if (inputs.size() == 1) {
        write_file(args.out, rendered[0] + "\n");
    } else {
        fs::create_directories(args.out);
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            write_file((fs::path(args.out) / (ids[i] + ".txt")).string(), rendered[i] + "\n");
        }
    }
    write_run_meta(args.out, "recover-layout", args.in + "|" + args.format);
    log_at(LogLevel::Info, "recovered layout for " + std::to_string(inputs.size()) +
                               " page(s) -> " + args.out);
    return 0;
}

struct NormalizeArgs {
    std::string in;
    std::string out;
    std::string format = "text";
    PageOptions page;
};

int run_normalize_boxes(const NormalizeArgs& args) {
    std::vector<std::string> inputs = collect_json_inputs(args.in);
    std::string out;
    for (const auto& path : inputs) {
        IngestWarnings warnings;
        Page page = load_page(path, args.page, &warnings);
        warn_summary(path, warnings);
        if (args.format == "jsonl") {
            for (const auto& box : reading_order_boxes(page)) {
                nlohmann::ordered_json j;
                j["image_id"] = page.image_id;
                j["text"] = box.text;
                NormalizedBox nb = normalize(box.rect, page.width_px, page.height_px);
                j["box"] = {nb.x_min, nb.y_min, nb.x_max, nb.y_max};
                j["box_str"] = format_box(nb);
                out += j.dump();
                out += '\n';
            }
        } else {
            out += ocr_block(page);
            out += '\n';
        }
    }
    write_file(args.out, out);
    write_run_meta(args.out, "normalize-boxes", args.in + "|" + args.format);
    return 0;
}

struct GenArgs {
    int task = 1;
    std::string in;  // OCR json file/dir (tasks 1, 2, 4; layout source for 3)
    std::string md;  // pre-converted markdown file/dir (task 3)
    std::string out;
    PageOptions page;
    LayoutConfig cfg;
};

int run_gen_instructions(const GenArgs& args) {
    if (args.task < 1 || args.task > 4) {
        throw validation_error("--task must be 1, 2, 3, or 4");
    }
    std::vector<InstructionRecord> records;
    int skipped = 0;

    if (args.task == 3 && !args.md.empty()) {
        std::vector<std::string> files;
        if (fs::is_regular_file(args.md)) {
            files.push_back(args.md);
        } else {
            for (const auto& entry : fs::directory_iterator(args.md)) {
                if (entry.path().extension() == ".md" ||
                    entry.path().extension() == ".txt") {
                    files.push_back(entry.path().string());
                }
            }
            std::sort(files.begin(), files.end());
        }
        if (files.empty()) {
            throw validation_error("no .md/.txt inputs found in " + args.md);
        }
        for (const auto& path : files) {
            std::string body = read_file(path);
            while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) {
                body.pop_back();
            }
            try {
                records.push_back(
                    gen_task3(body, g_globals.seed, fs::path(path).stem().string()));
            } catch (const validation_error& e) {
                ++skipped;
                log_at(LogLevel::Warn, std::string(e.what()));
            }
        }
    } else {
        if (args.in.empty()) {
            throw validation_error("--in is required for tasks driven by OCR pages");
        }
        std::vector<std::string> inputs = collect_json_inputs(args.in);
        std::vector<Page> pages(inputs.size());
        std::vector<IngestWarnings> warnings(inputs.size());
        parallel_for(inputs.size(), g_globals.threads, [&](std::size_t i) {
            pages[i] = load_page(inputs[i], args.page, &warnings[i]);
        });
        for (std::size_t i = 0; i < inputs.size(); ++i) {
            warn_summary(inputs[i], warnings[i]);
            try {
                switch (args.task) {
                case 1:
                    records.push_back(gen_task1(pages[i], g_globals.seed, args.cfg));
                    break;
                case 2:
                    records.push_back(gen_task2(pages[i], g_globals.seed, args.cfg));
                    break;
                case 3:
                    records.push_back(gen_task3(recover_layout(pages[i], args.cfg).rendered,
                                                g_globals.seed, pages[i].image_id));
                    break;
                case 4:
                    records.push_back(gen_task4(pages[i], g_globals.seed, args.cfg));
                    break;
                default:
                    break;
                }
            } catch (const validation_error& e) {
                ++skipped;
                log_at(LogLevel::Warn, std::string(e.what()));
            }
        }
    }

    std::size_t written = write_records(records, args.out);
    write_run_meta(args.out, "gen-instructions",
                   "task" + std::to_string(args.task) + "|" + args.in + "|" + args.md);
    log_at(LogLevel::Info, "wrote " + std::to_string(written) + " record(s), skipped " +
                               std::to_string(skipped));
    return 0;
}

struct FileArgs {
    std::string in;
    std::string out;
};

int run_table2md(const FileArgs& args) {
    std::string md = html_table_to_markdown(read_file(args.in));
    write_file(args.out, md + "\n");
    write_run_meta(args.out, "table2md", args.in);
    return 0;
}

int run_chart2md(const FileArgs& args) {
    ChartSeries chart = parse_chart_json(read_file(args.in), args.in);
    write_file(args.out, chart_to_markdown(chart) + "\n");
    write_run_meta(args.out, "chart2md", args.in);
    return 0;
}

struct BenchArgs {
    std::string out;
    std::string spec_file;
    SweepSpec spec;
};

// Minimal TOML subset for sweep spec files: `key = value` lines, optional
// quotes, # comments, section headers ignored. Command-line flags win:
// a key is applied only when its flag was not given.
void apply_spec_file(const std::string& path, const CLI::App* cmd, SweepSpec& spec) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open spec file: " + path);
    }
    auto trim = [](std::string s) {
        std::size_t b = s.find_first_not_of(" \t\r");
        std::size_t e = s.find_last_not_of(" \t\r");
        return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    auto parse_int_list = [&](const std::string& value) {
        std::vector<int> out;
        std::string item;
        std::istringstream ss(value);
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (!item.empty()) {
                out.push_back(std::stoi(item));
            }
        }
        if (out.empty()) {
            throw validation_error(path + ": empty list value");
        }
        return out;
    };
    auto flag_given = [&](const std::string& flag) { return cmd->count(flag) > 0; };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty() || line.front() == '[') {
            continue; // blank or section header
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw parse_error(path + ":" + std::to_string(line_no) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
            value.back() == value.front()) {
            value = value.substr(1, value.size() - 2);
        }
        try {
            if (key == "font-sizes") {
                if (!flag_given("--font-sizes")) {
                    spec.font_sizes = parse_int_list(value);
                }
            } else if (key == "word-counts") {
                if (!flag_given("--word-counts")) {
                    spec.word_counts = parse_int_list(value);
                }
            } else if (key == "seeds") {
                if (!flag_given("--seeds")) {
                    spec.seeds_per_condition = std::stoi(value);
                }
            } else if (key == "canvas-width") {
                if (!flag_given("--canvas-width")) {
                    spec.canvas_w = std::stoi(value);
                }
            } else if (key == "canvas-height") {
                if (!flag_given("--canvas-height")) {
                    spec.canvas_h = std::stoi(value);
                }
            } else if (key == "phrases") {
                if (!flag_given("--phrases")) {
                    spec.phrases_per_image = std::stoi(value);
                }
            } else if (key == "word-sweep-font") {
                if (!flag_given("--word-sweep-font")) {
                    spec.word_sweep_font_px = std::stoi(value);
                }
            } else if (key == "background-dir") {
                if (!flag_given("--background-dir")) {
                    spec.background_dir = value;
                }
            } else if (key == "font-dir") {
                if (!flag_given("--font-dir")) {
                    spec.font_dir = value;
                }
            } else if (key == "lexicon") {
                if (!flag_given("--lexicon")) {
                    spec.lexicon_path = value;
                }
            } else if (key == "corpus") {
                if (!flag_given("--corpus")) {
                    spec.corpus_path = value;
                }
            } else if (key == "font-sweep") {
                if (!flag_given("--no-font-sweep")) {
                    spec.plain_font_sweep = value == "true" || value == "1";
                }
            } else if (key == "word-sweep") {
                if (!flag_given("--no-word-sweep")) {
                    spec.word_count_sweep = value == "true" || value == "1";
                }
            } else {
                throw validation_error(path + ":" + std::to_string(line_no) +
                                       ": unknown spec key \"" + key + "\"");
            }
        } catch (const std::invalid_argument&) {
            throw parse_error(path + ":" + std::to_string(line_no) + ": bad value for \"" +
                              key + "\"");
        }
    }
}

int run_render_bench(BenchArgs& args, const CLI::App* cmd) {
    if (!args.spec_file.empty()) {
        apply_spec_file(args.spec_file, cmd, args.spec);
    }
    args.spec.seed = g_globals.seed;
    args.spec.threads = g_globals.threads;
    BenchManifest manifest = gen_suite(args.spec, args.out);
    std::ostringstream desc;
    for (int f : args.spec.font_sizes) {
        desc << f << ",";
    }
    desc << "|";
    for (int w : args.spec.word_counts) {
        desc << w << ",";
    }
    write_run_meta(args.out, "render-bench", desc.str());
    log_at(LogLevel::Info, "rendered " + std::to_string(manifest.size()) + " image(s) -> " +
                               args.out);
    return 0;
}

struct ScoreArgs {
    std::string manifest;
    std::string outputs;
    std::string report = "report.json";
    std::string csv;
    bool topk = false;
    int k = 3;
    bool no_stopwords = false;
};

int run_score(const ScoreArgs& args) {
    BenchManifest manifest = read_manifest(args.manifest);
    std::vector<ModelOutput> outputs = read_outputs_jsonl(args.outputs);
    const StopWordList& stops =
        args.no_stopwords ? StopWordList::none() : StopWordList::english();
    int missing = 0;
    auto scores = score_manifest(manifest, outputs, args.topk, args.k, stops, &missing);
    if (missing > 0) {
        log_at(LogLevel::Warn, std::to_string(missing) +
                                   " image(s) had no model output and scored zero");
    }
    ScoreReport report = aggregate(scores);
    write_file(args.report, report_to_json(report));
    if (!args.csv.empty()) {
        write_file(args.csv, report_to_csv(report));
    }
    write_run_meta(args.report, "score",
                   args.manifest + "|" + args.outputs + (args.topk ? "|topk" : "|exact"));
    for (const auto& row : report.curve) {
        std::ostringstream line;
        line << mode_name(row.mode) << " x=" << row.x << " accuracy="
             << row.accuracy << " n=" << row.n;
        log_at(LogLevel::Info, line.str());
    }
    return 0;
}

void add_layout_flags(CLI::App* cmd, LayoutConfig& cfg) {
    cmd->add_option("--row-overlap", cfg.row_overlap_threshold,
                    "Row membership overlap threshold in (0,1]")
        ->capture_default_str();
    cmd->add_option("--max-gap-spaces", cfg.max_gap_spaces,
                    "Upper bound on inserted placeholder spaces")
        ->capture_default_str();
    cmd->add_flag("--no-indent,!--indent", [&cfg](std::int64_t count) {
        cfg.indent_enabled = count == 0;
    }, "Disable leading indentation");
    cmd->add_flag("--vgap-blank-lines", cfg.vgap_blank_lines,
                  "Insert a blank line at large vertical gaps");
    cmd->add_option("--vgap-factor", cfg.vgap_factor,
                    "Vertical gap threshold as a multiple of median row height")
        ->capture_default_str();
}

void add_page_flags(CLI::App* cmd, PageOptions& page) {
    cmd->add_option("--image-id", page.image_id,
                    "Image id for bare-array inputs (default: file stem)");
    cmd->add_option("--width", page.width, "Page width for bare-array inputs");
    cmd->add_option("--height", page.height, "Page height for bare-array inputs");
    cmd->add_option("--min-confidence", page.min_confidence,
                    "Drop detections below this confidence (default: keep all)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"OCR layout recovery, layout-aware pretraining data generation, and the "
                 "synthetic text-recognition benchmark"};
    app.set_version_flag("--version", std::string("readkit ") + kVersion);
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a TOML config file (flags win)");
    app.add_option("--seed", g_globals.seed, "Root seed for all sampled choices")
        ->capture_default_str();
    app.add_option("--threads", g_globals.threads, "Worker threads for batch inputs")
        ->capture_default_str();
    app.add_option("--log-level", g_globals.log_level, "debug, info, warn, or error")
        ->capture_default_str();

    LayoutArgs layout_args;
    auto* rl = app.add_subcommand("recover-layout",
                                  "Reconstruct page layout text from OCR boxes");
    rl->add_option("--in", layout_args.in, "OCR-JSON file or directory")->required();
    rl->add_option("--out", layout_args.out, "Output file (or directory for batch text)")
        ->required();
    rl->add_option("--format", layout_args.format, "text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}))
        ->capture_default_str();
    add_page_flags(rl, layout_args.page);
    add_layout_flags(rl, layout_args.cfg);

    NormalizeArgs norm_args;
    auto* nb = app.add_subcommand("normalize-boxes",
                                  "Emit `text [x, y, x, y]` lines with normalized boxes");
    nb->add_option("--in", norm_args.in, "OCR-JSON file or directory")->required();
    nb->add_option("--out", norm_args.out, "Output file")->required();
    nb->add_option("--format", norm_args.format, "text or jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}))
        ->capture_default_str();
    add_page_flags(nb, norm_args.page);

    GenArgs gen_args;
    auto* gi = app.add_subcommand("gen-instructions",
                                  "Generate instruction/response records for tasks 1-4");
    gi->add_option("--task", gen_args.task, "1 recognition, 2 localization, 3 parsing, 4 layout")
        ->required()
        ->check(CLI::Range(1, 4));
    gi->add_option("--in", gen_args.in, "OCR-JSON file or directory");
    gi->add_option("--md", gen_args.md,
                   "Markdown file or directory as the task-3 page text source");
    gi->add_option("--out", gen_args.out, "Output conversation-JSON file")->required();
    add_page_flags(gi, gen_args.page);
    add_layout_flags(gi, gen_args.cfg);

    FileArgs table_args;
    auto* t2m = app.add_subcommand("table2md", "Convert an HTML table to a Markdown table");
    t2m->add_option("--in", table_args.in, "HTML file")->required();
    t2m->add_option("--out", table_args.out, "Markdown output file")->required();

    FileArgs chart_args;
    auto* c2m = app.add_subcommand("chart2md", "Convert chart source JSON to Markdown");
    c2m->add_option("--in", chart_args.in, "Chart JSON file")->required();
    c2m->add_option("--out", chart_args.out, "Markdown output file")->required();

    BenchArgs bench_args;
    auto* rb = app.add_subcommand("render-bench",
                                  "Render the synthetic recognition benchmark suite");
    rb->add_option("--spec", bench_args.spec_file,
                   "TOML sweep spec file (command-line flags win)");
    rb->add_option("--out", bench_args.out, "Output directory")->required();
    rb->add_option("--font-sizes", bench_args.spec.font_sizes,
                   "Font sweep pixel sizes")->delimiter(',')->capture_default_str();
    rb->add_option("--word-counts", bench_args.spec.word_counts,
                   "Word-count sweep values")->delimiter(',')->capture_default_str();
    rb->add_option("--seeds", bench_args.spec.seeds_per_condition,
                   "Seeds (images) per condition")->capture_default_str();
    rb->add_option("--canvas-width", bench_args.spec.canvas_w, "Canvas width")
        ->capture_default_str();
    rb->add_option("--canvas-height", bench_args.spec.canvas_h, "Canvas height")
        ->capture_default_str();
    rb->add_option("--phrases", bench_args.spec.phrases_per_image,
                   "Phrases per image in font sweeps")->capture_default_str();
    rb->add_option("--word-sweep-font", bench_args.spec.word_sweep_font_px,
                   "Font size for the word-count sweep")->capture_default_str();
    rb->add_option("--background-dir", bench_args.spec.background_dir,
                   "PNM background directory (enables the natural-background sweep)");
    rb->add_option("--font-dir", bench_args.spec.font_dir,
                   ".bfnt font directory (multi-font mode)");
    rb->add_option("--lexicon", bench_args.spec.lexicon_path,
                   "Phrase file overriding the bundled term lexicon");
    rb->add_option("--corpus", bench_args.spec.corpus_path,
                   "Word file overriding the bundled prose corpus");
    rb->add_flag("--no-font-sweep", [&](std::int64_t) {
        bench_args.spec.plain_font_sweep = false;
    }, "Skip the plain-background font sweep");
    rb->add_flag("--no-word-sweep", [&](std::int64_t) {
        bench_args.spec.word_count_sweep = false;
    }, "Skip the word-count sweep");

    ScoreArgs score_args;
    auto* sc = app.add_subcommand("score", "Score model outputs against a benchmark manifest");
    sc->add_option("--manifest", score_args.manifest, "Benchmark manifest JSONL")->required();
    sc->add_option("--outputs", score_args.outputs, "Model outputs JSONL")->required();
    sc->add_option("--report", score_args.report, "Report JSON output path")
        ->capture_default_str();
    sc->add_option("--csv", score_args.csv, "Curve CSV output path");
    sc->add_flag("--topk", score_args.topk, "Score ranked candidate lists instead of text");
    sc->add_option("--k", score_args.k, "k for --topk")->capture_default_str();
    sc->add_flag("--no-stopwords", score_args.no_stopwords, "Skip stop-word removal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help / --version
        }
        std::cerr << "error: " << e.what() << "\n\n" << app.help() << "\n";
        return 1;
    }

    try {
        if (rl->parsed()) {
            return run_recover_layout(layout_args);
        }
        if (nb->parsed()) {
            return run_normalize_boxes(norm_args);
        }
        if (gi->parsed()) {
            return run_gen_instructions(gen_args);
        }
        if (t2m->parsed()) {
            return run_table2md(table_args);
        }
        if (c2m->parsed()) {
            return run_chart2md(chart_args);
        }
        if (rb->parsed()) {
            return run_render_bench(bench_args, rb);
        }
        if (sc->parsed()) {
            return run_score(score_args);
        }
    } catch (const io_error& e) {
        log_at(LogLevel::Error, e.what());
        return 2;
    } catch (const validation_error& e) {
        log_at(LogLevel::Error, e.what());
        return 1;
    } catch (const parse_error& e) {
        log_at(LogLevel::Error, e.what());
        return 1;
    } catch (const std::exception& e) {
        log_at(LogLevel::Error, std::string("unexpected: ") + e.what());
        return 1;
    }
    return 0;
}
