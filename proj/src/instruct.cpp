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

#include "readkit/instruct.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "readkit/bbox_codec.hpp"
#include "readkit/errors.hpp"
#include "readkit/rng.hpp"

namespace readkit {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kImageToken = "<image>\n";

std::string record_id(const std::string& image_ref, Task task) {
    return image_ref + ":t" + std::to_string(static_cast<int>(task));
}

// Uniform template pick, seeded by (root seed, image id, task) so every
// record is independent of shard order and of the other tasks.
std::string_view pick_template(Task task, std::uint64_t rng_seed, const std::string& image_ref) {
    std::uint64_t seed = substream(rng_seed, std::string(task_name(task)) + "/" + image_ref);
    std::mt19937_64 rng(seed);
    const TemplatePool& pool = template_pool(task);
    return pool[bounded(rng, pool.size())];
}

void require_nonempty(const Page& page, Task task) {
    if (page.boxes.empty()) {
        throw validation_error("page " + page.image_id + " has no text boxes; skipping " +
                               std::string(task_name(task)) + " record");
    }
}

} // namespace

std::string ocr_block(const Page& page, const LayoutConfig& cfg) {
    std::string out;
    bool first = true;
    for (const auto& box : reading_order_boxes(page, cfg)) {
        if (!first) {
            out += '\n';
        }
        out += box.text;
        out += ' ';
        out += format_box(normalize(box.rect, page.width_px, page.height_px));
        first = false;
    }
    return out;
}

InstructionRecord gen_task1(const Page& page, std::uint64_t rng_seed, const LayoutConfig& cfg) {
    require_nonempty(page, Task::TextRecognition);
    InstructionRecord rec;
    rec.id = record_id(page.image_id, Task::TextRecognition);
    rec.image_ref = page.image_id;
    rec.task = Task::TextRecognition;
    rec.instruction = pick_template(Task::TextRecognition, rng_seed, page.image_id);
    rec.response = reading_order_text(page, cfg);
    return rec;
}

InstructionRecord gen_task2(const Page& page, std::uint64_t rng_seed, const LayoutConfig& cfg) {
    require_nonempty(page, Task::TextLocalization);
    InstructionRecord rec;
    rec.id = record_id(page.image_id, Task::TextLocalization);
    rec.image_ref = page.image_id;
    rec.task = Task::TextLocalization;
    rec.instruction = pick_template(Task::TextLocalization, rng_seed, page.image_id);
    rec.response = ocr_block(page, cfg);
    return rec;
}

InstructionRecord gen_task3(const std::string& page_markdown, std::uint64_t rng_seed,
                            const std::string& image_ref) {
    if (page_markdown.empty()) {
        throw validation_error("page markdown for " + image_ref + " is empty");
    }
    InstructionRecord rec;
    rec.id = record_id(image_ref, Task::PageParsing);
    rec.image_ref = image_ref;
    rec.task = Task::PageParsing;
    rec.instruction = pick_template(Task::PageParsing, rng_seed, image_ref);
    rec.response = page_markdown;
    return rec;
}

InstructionRecord gen_task4(const Page& page, std::uint64_t rng_seed, const LayoutConfig& cfg) {
    require_nonempty(page, Task::LayoutRecovery);
    InstructionRecord rec;
    rec.id = record_id(page.image_id, Task::LayoutRecovery);
    rec.image_ref = page.image_id;
    rec.task = Task::LayoutRecovery;
    rec.instruction = std::string(pick_template(Task::LayoutRecovery, rng_seed, page.image_id)) +
                      "\n" + ocr_block(page, cfg);
    rec.response = recover_layout(page, cfg).rendered;
    return rec;
}

std::string records_to_json(const std::vector<InstructionRecord>& records) {
    ordered_json root = ordered_json::array();
    for (const auto& rec : records) {
        ordered_json conv = ordered_json::array();
        conv.push_back({{"from", "human"}, {"value", std::string(kImageToken) + rec.instruction}});
        conv.push_back({{"from", "gpt"}, {"value", rec.response}});
        root.push_back({{"id", rec.id}, {"image", rec.image_ref}, {"conversations", conv}});
    }
    return root.dump(2) + "\n";
}

std::size_t write_records(const std::vector<InstructionRecord>& records,
                          const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open for writing: " + path);
    }
    out << records_to_json(records);
    if (!out) {
        throw io_error("write failure: " + path);
    }
    return records.size();
}

std::vector<InstructionRecord> read_records(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    ordered_json root;
    try {
        root = ordered_json::parse(ss.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(path + ": " + e.what());
    }
    if (!root.is_array()) {
        throw parse_error(path + ": expected a JSON array of records");
    }
    std::vector<InstructionRecord> records;
    records.reserve(root.size());
    for (const auto& item : root) {
        InstructionRecord rec;
        rec.id = item.at("id").get<std::string>();
        rec.image_ref = item.at("image").get<std::string>();
        const auto& conv = item.at("conversations");
        if (!conv.is_array() || conv.size() != 2) {
            throw parse_error(path + ": record " + rec.id + " is not single-turn");
        }
        rec.instruction = conv[0].at("value").get<std::string>();
        if (rec.instruction.rfind(kImageToken, 0) == 0) {
            rec.instruction.erase(0, kImageToken.size());
        }
        rec.response = conv[1].at("value").get<std::string>();
        if (rec.id.size() >= 3 && rec.id[rec.id.size() - 2] == 't') {
            int t = rec.id.back() - '0';
            if (t >= 1 && t <= 4) {
                rec.task = static_cast<Task>(t);
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

} // namespace readkit
