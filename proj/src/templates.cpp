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

#include "readkit/templates.hpp"

#include "readkit/errors.hpp"

namespace readkit {

namespace {

// Repository-authored pool; the other pools are fixed upstream text and
// must not be edited (tests pin their hashes).
const TemplatePool kTextRecognitionPool = {
    "Please read out all the text that appears in this image.",
    "What text can you find in the image? List everything you see.",
    "Identify all the text in the image and write it out.",
    "Transcribe every piece of text visible in the image.",
    "Could you recognize and list all words shown in the image?",
    "Extract all textual content from the image.",
    "Read the image and report all the text it contains.",
    "What does the text in this image say? Provide all of it.",
    "List every word that appears in the image.",
    "Please provide a transcription of all text present in the image.",
};

const TemplatePool kTextLocalizationPool = {
    "Could you locate the text in the image and furnish the coordinates [xmin, ymin, xmax, "
    "ymax] for each text block?",
    "Please recognize all the text within the image and supply the coordinates [xmin, ymin, "
    "xmax, ymax] for each text element.",
    "Can you identify and extract all the text from the image, and include the coordinates "
    "[xmin, ymin, xmax, ymax] for each text block?",
    "I would like you to recognize the text within the image and provide the bounding box "
    "[xmin, ymin, xmax, ymax] for each piece of text.",
    "Kindly identify and extract text from the image, and supply the coordinates [xmin, ymin, "
    "xmax, ymax] for each text portion.",
    "Can you recognize all the text present in the image and provide the corresponding "
    "bounding boxes or coordinates [xmin, ymin, xmax, ymax]?",
    "I\xe2\x80\x99"
    "m looking for you to detect and list all text within the image, accompanied by their "
    "bounding box coordinates [xmin, ymin, xmax, ymax].",
    "Please analyze the image for text, and for each text segment, provide the bounding box "
    "coordinates [xmin, ymin, xmax, ymax].",
    "I\xe2\x80\x99"
    "d appreciate it if you could identify and provide the coordinates [xmin, ymin, xmax, "
    "ymax] for all text found in the image.",
    "Kindly pinpoint the text in the image and provide the coordinates [xmin, ymin, xmax, "
    "ymax] for each text block.",
};

const TemplatePool kPageParsingPool = {
    "Could you extract the layout details from the image provided and rearrange the text "
    "accordingly?",
    "Please analyze the image's structure and reformat the text based on its layout.",
    "Can you decipher the layout of the image and restructure the text elements as they "
    "appear?",
    "I need you to interpret the layout information within the image and reposition the texts "
    "to mirror that layout.",
    "Would you be able to delineate the layout from the given image and reorder the text "
    "content accordingly?",
    "I request that you retrieve the spatial arrangement of the image and reconfigure the "
    "text to align with it.",
    "Please deduce the compositional layout of the image and systematically reassemble the "
    "text.",
    "Can you outline the image layout and reconstruct the text placements to correspond with "
    "it?",
    "I'm looking for an analysis of the image's layout so you can reorganize the text "
    "segments based on their original positioning.",
    "Kindly dissect the layout patterns in the image and resequence the text in harmony with "
    "those patterns.",
};

const TemplatePool kLayoutRecoveryPool = {
    "Given the OCR results, could you recover the layout information in the image and "
    "reorganize the texts?",
    "Using the OCR results, can you retrieve the layout information from the image and "
    "rearrange the texts?",
    "Can you utilize the OCR results to extract the image's layout information and "
    "restructure the texts?",
    "Given the OCR results, would you be able to reconstruct the layout of the image and "
    "reorganize the text?",
    "Could you use the OCR results to recover the layout details from the image and then "
    "rearrange the text?",
    "Based on the OCR results, can you restore the layout information in the image and "
    "reposition the texts?",
    "With the OCR results, could you recapture the image's layout information and reorder "
    "the texts?",
    "Using the OCR data, can you regain the layout information from the image and reshuffle "
    "the text?",
    "Can you interpret the OCR results to retrieve the layout information of the image and "
    "reorganize the text accordingly?",
    "Could you use the OCR findings to recover the image's layout information and "
    "restructure the texts?",
};

} // namespace

std::string_view task_name(Task task) {
    switch (task) {
    case Task::TextRecognition:
        return "text_recognition";
    case Task::TextLocalization:
        return "text_localization";
    case Task::PageParsing:
        return "page_parsing";
    case Task::LayoutRecovery:
        return "layout_recovery";
    }
    throw validation_error("unknown task");
}

const TemplatePool& template_pool(Task task) {
    switch (task) {
    case Task::TextRecognition:
        return kTextRecognitionPool;
    case Task::TextLocalization:
        return kTextLocalizationPool;
    case Task::PageParsing:
        return kPageParsingPool;
    case Task::LayoutRecovery:
        return kLayoutRecoveryPool;
    }
    throw validation_error("unknown task");
}

bool in_template_pool(Task task, std::string_view instruction) {
    for (std::string_view t : template_pool(task)) {
        if (t == instruction) {
            return true;
        }
    }
    return false;
}

} // namespace readkit
