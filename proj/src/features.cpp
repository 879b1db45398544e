#include "grantha/features.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "grantha/error.hpp"

namespace grantha {

FeatureVector FeatureVector::from_array(std::span<const double> row) {
    if (row.size() != kFeatureChannels) throw ArgumentError("feature row must have 8 channels");
    return {row[0], row[1], row[2], row[3], row[4], row[5], row[6], row[7]};
}

FeatureSequence::FeatureSequence(Series series, std::vector<std::size_t> stroke_starts)
    : values_(std::move(series.values)), stroke_starts_(std::move(stroke_starts)) {
    if (series.channels != kFeatureChannels || values_.size() % kFeatureChannels != 0) {
        throw ArgumentError("feature sequence requires 8-channel rows");
    }
}

FeatureVector FeatureSequence::operator[](std::size_t i) const {
    return FeatureVector::from_array(std::span<const double>(values_).subspan(i * kFeatureChannels, kFeatureChannels));
}

void FeatureSequence::push_back(const FeatureVector& v) {
    const auto a = v.to_array();
    values_.insert(values_.end(), a.begin(), a.end());
}

InkSample dedupe(const InkSample& sample) {
    InkSample out;
    out.label = sample.label;
    out.strokes.reserve(sample.strokes.size());
    for (const auto& stroke : sample.strokes) {
        Stroke s;
        for (const auto& p : stroke.points) {
            if (!s.points.empty() && s.points.back().x == p.x && s.points.back().y == p.y) continue;
            s.points.push_back(p);
        }
        out.strokes.push_back(std::move(s));
    }
    return out;
}

InkSample normalize(const InkSample& sample) {
    double min_x = std::numeric_limits<double>::infinity();
    double min_y = min_x;
    double max_x = -min_x;
    double max_y = -min_x;
    for (const auto& stroke : sample.strokes) {
        for (const auto& p : stroke.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    if (!(max_x >= min_x)) throw DegenerateInputError("sample has no points");
    const double width = max_x - min_x;
    const double height = max_y - min_y;
    const double side = std::max(width, height);
    if (!(side > 0.0)) throw DegenerateInputError("all points coincide; bounding box is empty");

    const double offset_x = (1.0 - width / side) / 2.0;
    const double offset_y = (1.0 - height / side) / 2.0;
    InkSample out = sample;
    for (auto& stroke : out.strokes) {
        for (auto& p : stroke.points) {
            p.x = std::clamp((p.x - min_x) / side + offset_x, 0.0, 1.0);
            p.y = std::clamp((p.y - min_y) / side + offset_y, 0.0, 1.0);
        }
    }
    return out;
}

InkSample resample(const InkSample& sample, double step) {
    if (!(step > 0.0)) throw ConfigError("resample step must be positive");
    InkSample out;
    out.label = sample.label;
    for (const auto& stroke : sample.strokes) {
        const auto& pts = stroke.points;
        Stroke s;
        if (pts.size() < 2) {
            s = stroke;
            out.strokes.push_back(std::move(s));
            continue;
        }
        s.points.push_back(pts.front());
        // Distance still to travel before the next emitted point.
        double remaining = step;
        Point from = pts.front();
        std::size_t i = 1;
        while (i < pts.size()) {
            const Point& to = pts[i];
            const double seg = std::hypot(to.x - from.x, to.y - from.y);
            if (seg >= remaining && seg > 0.0) {
                const double f = remaining / seg;
                Point p{from.x + f * (to.x - from.x), from.y + f * (to.y - from.y), from.t + f * (to.t - from.t)};
                s.points.push_back(p);
                from = p;
                remaining = step;
            } else {
                remaining -= seg;
                from = to;
                ++i;
            }
        }
        // A point emitted within rounding error of the end is the end.
        const Point& last = pts.back();
        if (s.points.size() > 1 && std::hypot(s.points.back().x - last.x, s.points.back().y - last.y) <= 1e-9 * step)
            s.points.pop_back();
        if (s.points.back().x != last.x || s.points.back().y != last.y) s.points.push_back(last);
        out.strokes.push_back(std::move(s));
    }
    return out;
}

std::vector<int> pen_states(const InkSample& sample) {
    std::vector<int> states;
    for (std::size_t s = 0; s < sample.strokes.size(); ++s) {
        if (s > 0) states.push_back(0);
        states.insert(states.end(), sample.strokes[s].points.size(), 1);
    }
    return states;
}

double aspect_ratio(std::span<const Point> stroke, std::size_t n, int half_width) {
    const auto h = static_cast<std::size_t>(std::max(half_width, 0));
    const std::size_t lo = n >= h ? n - h : 0;
    const std::size_t hi = std::min(stroke.size() - 1, n + h);
    double min_x = stroke[lo].x, max_x = stroke[lo].x;
    double min_y = stroke[lo].y, max_y = stroke[lo].y;
    for (std::size_t i = lo + 1; i <= hi; ++i) {
        min_x = std::min(min_x, stroke[i].x);
        max_x = std::max(max_x, stroke[i].x);
        min_y = std::min(min_y, stroke[i].y);
        max_y = std::max(max_y, stroke[i].y);
    }
    const double dx = max_x - min_x;
    const double dy = max_y - min_y;
    if (dx + dy == 0.0) return 0.0;
    return std::clamp(2.0 * dy / (dx + dy) - 1.0, -1.0, 1.0);
}

Heading writing_direction(const Point& prev, const Point& cur) {
    const double dx = cur.x - prev.x;
    const double dy = cur.y - prev.y;
    const double d = std::hypot(dx, dy);
    if (!(d > 0.0)) throw DegenerateInputError("writing direction between coincident points");
    return {dx / d, dy / d};
}

Heading curvature(const Heading& before, const Heading& after) {
    return {before.cos * after.cos + before.sin * after.sin, before.cos * after.sin - before.sin * after.cos};
}

namespace {

void append_stroke_features(std::span<const Point> pts, int neighborhood, FeatureSequence& out) {
    const std::size_t n = pts.size();
    std::vector<Heading> dir(n);
    for (std::size_t i = 1; i < n; ++i) dir[i] = writing_direction(pts[i - 1], pts[i]);
    if (n >= 2) dir[0] = dir[1];

    for (std::size_t i = 0; i < n; ++i) {
        Heading curv;
        if (n >= 2) {
            if (i == 0) {
                curv = curvature(dir[0], dir[1]);
            } else if (i + 1 == n) {
                curv = curvature(dir[i - 1], dir[i]);
            } else {
                curv = curvature(dir[i - 1], dir[i + 1]);
            }
        }
        FeatureVector v;
        v.x_norm = pts[i].x;
        v.y_norm = pts[i].y;
        v.pen = 1.0;
        v.aspect = aspect_ratio(pts, i, neighborhood);
        v.cos_dir = dir[i].cos;
        v.sin_dir = dir[i].sin;
        v.cos_curv = curv.cos;
        v.sin_curv = curv.sin;
        out.push_back(v);
    }
}

}  // namespace

FeatureSequence extract_features(const InkSample& sample, const FeatureConfig& config) {
    if (sample.strokes.empty()) throw DegenerateInputError("sample has no strokes");
    for (const auto& s : sample.strokes) {
        if (s.points.empty()) throw DegenerateInputError("sample contains an empty stroke");
    }
    InkSample prepared = dedupe(normalize(dedupe(sample)));
    if (config.resample_step > 0.0) prepared = resample(prepared, config.resample_step);

    FeatureSequence seq;
    for (std::size_t s = 0; s < prepared.strokes.size(); ++s) {
        const auto& pts = prepared.strokes[s].points;
        if (s > 0) {
            FeatureVector transition;
            transition.x_norm = pts.front().x;
            transition.y_norm = pts.front().y;
            transition.pen = 0.0;
            seq.push_back(transition);
        }
        seq.mark_stroke_start();
        append_stroke_features(pts, config.neighborhood, seq);
    }
    return seq;
}

}  // namespace grantha
