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

#include "readkit/page.hpp"

namespace readkit {

// Per-file ingestion summary. Skips never abort a page: batch pipelines
// must not fail on one bad detection.
struct IngestWarnings {
    int skipped_empty_text = 0;
    int skipped_degenerate = 0;
    int skipped_invalid = 0; // newline in text, bad confidence, malformed record shape
    int clamped_boxes = 0;   // coordinates pulled back inside image bounds

    int total_skipped() const {
        return skipped_empty_text + skipped_degenerate + skipped_invalid;
    }
    bool any() const { return total_skipped() > 0 || clamped_boxes > 0; }
    std::string summary() const;
};

// Ingests the bare OCR-JSON array form:
//   [ [ [[x,y],[x,y],[x,y],[x,y]], ["text", confidence] ], ... ]
// Detection order is preserved. Out-of-bounds coordinates are clamped to
// the image bounds; detections that are empty, degenerate (zero-area
// after clamping), or malformed are skipped and counted in `warnings`.
// Malformed JSON throws parse_error carrying a line number.
Page ingest_ocr(const std::string& path, const std::string& image_id, int width_px,
                int height_px, IngestWarnings* warnings = nullptr);

// Same, from an in-memory JSON string (the `source_name` appears in parse
// errors).
Page ingest_ocr_text(const std::string& json_text, const std::string& image_id, int width_px,
                     int height_px, IngestWarnings* warnings = nullptr,
                     const std::string& source_name = "<string>");

// Ingests the self-contained sidecar form the CLI prefers:
//   {"image_id": ..., "width": ..., "height": ..., "detections": [ ... ]}
Page ingest_ocr_sidecar(const std::string& path, IngestWarnings* warnings = nullptr);

Page ingest_ocr_sidecar_text(const std::string& json_text, IngestWarnings* warnings = nullptr,
                             const std::string& source_name = "<string>");

// Reads either form: the sidecar is detected by its object root. The bare
// array form requires image_id/width/height to be supplied.
Page ingest_ocr_any(const std::string& path, const std::string& image_id, int width_px,
                    int height_px, IngestWarnings* warnings = nullptr);

// Serializes a Page to sidecar OCR-JSON. Ingestion is lossless for valid
// records: re-ingesting the output yields an identical Page.
std::string page_to_ocr_json(const Page& page);

} // namespace readkit
