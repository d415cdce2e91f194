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
#include <vector>

namespace readkit {

// Bundled machine-learning term lexicon: lowercase phrases of at most
// four words each, used by the font-size sweeps.
const std::vector<std::string>& ml_term_lexicon();

// Bundled prose corpus as a flat word list; word-count sweeps take
// contiguous runs from it.
const std::vector<std::string>& prose_corpus();

// One phrase or word per line; blank lines ignored.
std::vector<std::string> load_phrase_file(const std::string& path);

} // namespace readkit
