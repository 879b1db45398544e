#pragma once

#include <optional>
#include <string>
#include <vector>

namespace grantha {

/// A pen-down sample in device units. `t` is milliseconds since the start of
/// the recording, or the running point index when the source had no clock.
struct Point {
    double x = 0.0;
    double y = 0.0;
    double t = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Stroke {
    std::vector<Point> points;

    friend bool operator==(const Stroke&, const Stroke&) = default;
};

/// One handwritten symbol: a time-ordered list of pen-down runs.
struct InkSample {
    std::vector<Stroke> strokes;
    std::optional<std::string> label;

    std::size_t point_count() const noexcept;

    friend bool operator==(const InkSample&, const InkSample&) = default;
};

/// A recognizable class and the code points it emits when recognized.
struct SymbolClass {
    std::string id;
    std::u32string codepoints;

    friend bool operator==(const SymbolClass&, const SymbolClass&) = default;
};

/// Lists every broken invariant of `sample`; empty iff it is well formed.
std::vector<std::string> validate(const InkSample& sample);

/// Class code points for a label: "U+XXXX U+YYYY" notation is parsed,
/// anything else is taken as literal UTF-8 text.
std::u32string codepoints_for_label(const std::string& label);

}  // namespace grantha
