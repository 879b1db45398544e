#pragma once

#include <string>

#include "grantha/classifier.hpp"

namespace grantha {

// Model file layout (JSON):
//   {"version": 1,
//    "feature_config": {"neighborhood": 2, "resample_step": 0},
//    "dtw_config": {"window_fraction": 0.1, "auto_widen": true},
//    "classes": [{"id": "ka", "codepoints": ["U+11315"],
//                 "prototypes": [[[x, y, pen, aspect, cos, sin, cos, sin], ...], ...]}]}
// Doubles are written in shortest round-trip form, so save/load is lossless.

std::string model_to_json(const RecognitionModel& model);
/// Throws ModelFormatError on unknown versions or schema violations.
RecognitionModel model_from_json(const std::string& text);

void save_model(const RecognitionModel& model, const std::string& path);
RecognitionModel load_model(const std::string& path);

}  // namespace grantha
