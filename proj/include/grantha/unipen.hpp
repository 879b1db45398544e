#pragma once

// Reader and writer for the UNIPEN subset used by the training and test
// corpora:
//
//   .VERSION 1.0
//   .HIERARCHY CHARACTER
//   .COORD X Y T
//   .X_DIM 640            (optional)
//   .Y_DIM 480            (optional)
//   .SEGMENT CHARACTER "label"
//   .PEN_DOWN
//   x y [t]
//   .PEN_UP
//
// Any other keyword is kept verbatim as an opaque comment line. A
// .SEGMENT CHARACTER block becomes one InkSample and every PEN_DOWN/PEN_UP
// run inside it becomes a Stroke. Coordinate lines without a timestamp get
// t = running point index within the sample.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grantha/ink.hpp"

namespace grantha {

struct UnipenDocument {
    std::string version = "1.0";
    std::string hierarchy = "CHARACTER";
    std::optional<double> x_dim;
    std::optional<double> y_dim;
    std::vector<std::string> comments;
    std::vector<InkSample> samples;

    friend bool operator==(const UnipenDocument&, const UnipenDocument&) = default;
};

/// Throws ParseError for malformed lines and StructuralError for
/// pen-state violations; both carry the 1-based line number.
UnipenDocument parse_unipen_document(std::string_view text);

std::vector<InkSample> parse_unipen(std::string_view text);

std::string write_unipen(const UnipenDocument& doc);
std::string write_unipen(std::span<const InkSample> samples);

/// Reads every *.unipen / *.upn file under `path` (or `path` itself when it
/// is a file), in lexicographic path order.
std::vector<InkSample> load_unipen_path(const std::string& path);

}  // namespace grantha
