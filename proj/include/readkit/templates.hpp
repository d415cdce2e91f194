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

#include <array>
#include <string_view>

namespace readkit {

// The four pretraining data tasks.
enum class Task {
    TextRecognition = 1, // all detected words, reading order
    TextLocalization = 2, // words plus normalized boxes
    PageParsing = 3,      // image -> layout text / Markdown
    LayoutRecovery = 4,   // OCR words+boxes -> layout text
};

std::string_view task_name(Task task);

// Fixed instruction pool for a task. Pools for localization, page
// parsing, and layout recovery are verbatim; generated instructions must
// be byte-exact members. The recognition pool is authored in this
// repository.
using TemplatePool = std::array<std::string_view, 10>;

const TemplatePool& template_pool(Task task);

// True iff `instruction` is a byte-exact member of `task`'s pool.
bool in_template_pool(Task task, std::string_view instruction);

} // namespace readkit
