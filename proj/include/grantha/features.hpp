#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "grantha/ink.hpp"
#include "grantha/series.hpp"

namespace grantha {

inline constexpr std::size_t kFeatureChannels = 8;

struct FeatureConfig {
    /// Points on each side of the current one in the aspect-ratio window.
    int neighborhood = 2;
    /// Equidistant resampling step in normalized units; 0 disables it.
    double resample_step = 0.0;

    friend bool operator==(const FeatureConfig&, const FeatureConfig&) = default;
};

/// A unit vector stored as (cos, sin).
struct Heading {
    double cos = 1.0;
    double sin = 0.0;

    friend bool operator==(const Heading&, const Heading&) = default;
};

/// Per-point features, in DTW channel order.
struct FeatureVector {
    double x_norm = 0.0;
    double y_norm = 0.0;
    double pen = 1.0;
    double aspect = 0.0;
    double cos_dir = 1.0;
    double sin_dir = 0.0;
    double cos_curv = 1.0;
    double sin_curv = 0.0;

    std::array<double, kFeatureChannels> to_array() const {
        return {x_norm, y_norm, pen, aspect, cos_dir, sin_dir, cos_curv, sin_curv};
    }
    static FeatureVector from_array(std::span<const double> row);

    friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

class FeatureSequence {
public:
    FeatureSequence() = default;
    explicit FeatureSequence(Series series, std::vector<std::size_t> stroke_starts = {});

    std::size_t size() const noexcept { return values_.size() / kFeatureChannels; }
    bool empty() const noexcept { return values_.empty(); }
    FeatureVector operator[](std::size_t i) const;
    void push_back(const FeatureVector& v);

    /// Index of the first vector of each stroke.
    const std::vector<std::size_t>& stroke_starts() const noexcept { return stroke_starts_; }
    void mark_stroke_start() { stroke_starts_.push_back(size()); }

    SeriesView view() const { return SeriesView(values_, kFeatureChannels); }
    Series to_series() const { return Series{values_, kFeatureChannels}; }

    friend bool operator==(const FeatureSequence&, const FeatureSequence&) = default;

private:
    std::vector<double> values_;
    std::vector<std::size_t> stroke_starts_;
};

/// Collapses consecutive identical (x, y) points within each stroke.
InkSample dedupe(const InkSample& sample);

/// Isotropic min-max scaling into the unit square; the shorter side is
/// centred. Throws DegenerateInputError when every point coincides.
InkSample normalize(const InkSample& sample);

/// Equidistant resampling along each stroke's arc; keeps both endpoints.
InkSample resample(const InkSample& sample, double step);

/// Pen state for each output position: 1 for recorded points, 0 for the
/// transition vector inserted between consecutive strokes.
std::vector<int> pen_states(const InkSample& sample);

/// 2*dy/(dx+dy) - 1 over the bounding box of points [n-h, n+h] of `stroke`
/// (truncated at the ends); 0 for an empty box.
double aspect_ratio(std::span<const Point> stroke, std::size_t n, int half_width);

/// Direction of travel from `prev` to `cur`. The points must differ.
Heading writing_direction(const Point& prev, const Point& cur);

/// Turning angle from `before` to `after`, i.e. the angle after - before.
Heading curvature(const Heading& before, const Heading& after);

/// dedupe -> normalize -> [resample] -> per-point vectors, with one pen-up
/// transition vector between strokes.
FeatureSequence extract_features(const InkSample& sample, const FeatureConfig& config = {});

}  // namespace grantha
