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

#include "readkit/ocr_json.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "readkit/errors.hpp"

namespace readkit {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open file: " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw io_error("read failure: " + path);
    }
    return ss.str();
}

// nlohmann reports byte offsets; callers want line numbers.
std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    byte = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

ordered_json parse_json(const std::string& text, const std::string& source_name) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(source_name + ":" + std::to_string(line_of_byte(text, e.byte)) +
                          ": " + e.what());
    }
}

double clamp_to(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

// One `[ [[x,y]x4], [text, confidence] ]` entry -> TextBox, applying the
// clamp-then-validate rule. Returns false when the record is skipped.
bool detection_to_box(const ordered_json& det, int width_px, int height_px,
                      IngestWarnings& warnings, TextBox& out) {
    if (!det.is_array() || det.size() != 2 || !det[0].is_array() || det[0].size() != 4 ||
        !det[1].is_array() || det[1].size() < 1) {
        ++warnings.skipped_invalid;
        return false;
    }
    QuadBox quad;
    for (std::size_t i = 0; i < 4; ++i) {
        const auto& pt = det[0][i];
        if (!pt.is_array() || pt.size() != 2 || !pt[0].is_number() || !pt[1].is_number()) {
            ++warnings.skipped_invalid;
            return false;
        }
        quad.points[i] = Vec2{pt[0].get<double>(), pt[1].get<double>()};
    }
    if (!det[1][0].is_string()) {
        ++warnings.skipped_invalid;
        return false;
    }
    std::string text = det[1][0].get<std::string>();
    double confidence = 1.0;
    if (det[1].size() >= 2) {
        if (!det[1][1].is_number()) {
            ++warnings.skipped_invalid;
            return false;
        }
        confidence = det[1][1].get<double>();
    }

    if (text.empty()) {
        ++warnings.skipped_empty_text;
        return false;
    }

    bool clamped = false;
    for (auto& p : quad.points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            ++warnings.skipped_invalid;
            return false;
        }
        double cx = clamp_to(p.x, 0.0, static_cast<double>(width_px));
        double cy = clamp_to(p.y, 0.0, static_cast<double>(height_px));
        if (cx != p.x || cy != p.y) {
            clamped = true;
        }
        p = Vec2{cx, cy};
    }

    try {
        out = TextBox::from_quad(std::move(text), quad, confidence);
    } catch (const validation_error& e) {
        std::string what = e.what();
        if (what.find("degenerate") != std::string::npos) {
            ++warnings.skipped_degenerate;
        } else {
            ++warnings.skipped_invalid;
        }
        return false;
    }
    if (clamped) {
        ++warnings.clamped_boxes;
    }
    return true;
}

Page page_from_detections(const ordered_json& detections, const std::string& image_id,
                          int width_px, int height_px, IngestWarnings& warnings,
                          const std::string& source_name) {
    if (width_px <= 0 || height_px <= 0) {
        throw validation_error(source_name + ": page dimensions must be positive");
    }
    if (!detections.is_array()) {
        throw parse_error(source_name + ": detections must be a JSON array");
    }
    Page page{image_id, width_px, height_px, {}};
    page.boxes.reserve(detections.size());
    for (const auto& det : detections) {
        TextBox box;
        if (detection_to_box(det, width_px, height_px, warnings, box)) {
            page.boxes.push_back(std::move(box));
        }
    }
    return page;
}

} // namespace

std::string IngestWarnings::summary() const {
    std::ostringstream ss;
    ss << total_skipped() << " detection(s) skipped (" << skipped_empty_text << " empty text, "
       << skipped_degenerate << " degenerate, " << skipped_invalid << " malformed), "
       << clamped_boxes << " box(es) clamped to image bounds";
    return ss.str();
}

Page ingest_ocr_text(const std::string& json_text, const std::string& image_id, int width_px,
                     int height_px, IngestWarnings* warnings, const std::string& source_name) {
    IngestWarnings local;
    IngestWarnings& w = warnings ? *warnings : local;
    ordered_json root = parse_json(json_text, source_name);
    if (!root.is_array()) {
        throw parse_error(source_name + ": expected a JSON array of detections");
    }
    return page_from_detections(root, image_id, width_px, height_px, w, source_name);
}

Page ingest_ocr(const std::string& path, const std::string& image_id, int width_px,
                int height_px, IngestWarnings* warnings) {
    return ingest_ocr_text(read_file(path), image_id, width_px, height_px, warnings, path);
}

Page ingest_ocr_sidecar_text(const std::string& json_text, IngestWarnings* warnings,
                             const std::string& source_name) {
    IngestWarnings local;
    IngestWarnings& w = warnings ? *warnings : local;
    ordered_json root = parse_json(json_text, source_name);
    if (!root.is_object()) {
        throw parse_error(source_name + ": expected a sidecar JSON object");
    }
    for (const char* key : {"image_id", "width", "height", "detections"}) {
        if (!root.contains(key)) {
            throw parse_error(source_name + ": sidecar missing \"" + key + "\"");
        }
    }
    if (!root["image_id"].is_string() || !root["width"].is_number_integer() ||
        !root["height"].is_number_integer()) {
        throw parse_error(source_name + ": sidecar field types are wrong");
    }
    return page_from_detections(root["detections"], root["image_id"].get<std::string>(),
                                root["width"].get<int>(), root["height"].get<int>(), w,
                                source_name);
}

Page ingest_ocr_sidecar(const std::string& path, IngestWarnings* warnings) {
    return ingest_ocr_sidecar_text(read_file(path), warnings, path);
}

Page ingest_ocr_any(const std::string& path, const std::string& image_id, int width_px,
                    int height_px, IngestWarnings* warnings) {
    std::string text = read_file(path);
    // Cheap root sniff: first non-whitespace byte decides the form.
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') {
        return ingest_ocr_sidecar_text(text, warnings, path);
    }
    return ingest_ocr_text(text, image_id, width_px, height_px, warnings, path);
}

std::string page_to_ocr_json(const Page& page) {
    ordered_json root;
    root["image_id"] = page.image_id;
    root["width"] = page.width_px;
    root["height"] = page.height_px;
    ordered_json detections = ordered_json::array();
    for (const auto& box : page.boxes) {
        ordered_json pts = ordered_json::array();
        for (const auto& p : box.quad.points) {
            pts.push_back(ordered_json::array({p.x, p.y}));
        }
        detections.push_back(
            ordered_json::array({pts, ordered_json::array({box.text, box.confidence})}));
    }
    root["detections"] = std::move(detections);
    return root.dump(2) + "\n";
}

} // namespace readkit
