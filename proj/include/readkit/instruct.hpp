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
#include <string>
#include <vector>

#include "readkit/layout.hpp"
#include "readkit/page.hpp"
#include "readkit/templates.hpp"

namespace readkit {

// One single-turn instruction/response pair attached to an image.
struct InstructionRecord {
    std::string id;
    std::string image_ref;
    Task task = Task::TextRecognition;
    std::string instruction;
    std::string response;

    friend bool operator==(const InstructionRecord&, const InstructionRecord&) = default;
};

// Each generator samples its instruction uniformly from the task's pool,
// seeded per record by (rng_seed, image_id) so shard order never matters.
// Empty pages throw validation_error; batch drivers skip and warn.

// Target sequence = box texts in reading order, single-space joined.
InstructionRecord gen_task1(const Page& page, std::uint64_t rng_seed,
                            const LayoutConfig& cfg = {});

// Response = one line per box in reading order: `text [x, y, x, y]` with
// normalized 3-decimal coordinates.
InstructionRecord gen_task2(const Page& page, std::uint64_t rng_seed,
                            const LayoutConfig& cfg = {});

// Response = page_markdown verbatim (layout text, or table/chart
// Markdown).
InstructionRecord gen_task3(const std::string& page_markdown, std::uint64_t rng_seed,
                            const std::string& image_ref);

// Instruction = template + the task-2-style OCR block; response = the
// recovered layout text.
InstructionRecord gen_task4(const Page& page, std::uint64_t rng_seed,
                            const LayoutConfig& cfg = {});

// The `text [x, y, x, y]` block for a page, one line per box in reading
// order (shared by task 2 responses and task 4 instructions).
std::string ocr_block(const Page& page, const LayoutConfig& cfg = {});

// Conversation-JSON serialization: an array of
//   {"id", "image", "conversations": [{"from": "human", "value":
//    "<image>\n" + instruction}, {"from": "gpt", "value": response}]}
// Returns the number of records written. Output is canonical: re-reading
// and re-serializing is byte-identical.
std::string records_to_json(const std::vector<InstructionRecord>& records);
std::size_t write_records(const std::vector<InstructionRecord>& records,
                          const std::string& path);

// Reads conversation-JSON back into records. The task is recovered from
// the record id suffix; instructions keep the OCR block, the leading
// "<image>\n" marker is stripped.
std::vector<InstructionRecord> read_records(const std::string& path);

} // namespace readkit
