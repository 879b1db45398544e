#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "grantha/error.hpp"

namespace grantha {

/// Read-only view of a multichannel sequence stored row-major.
class SeriesView {
public:
    SeriesView() = default;
    SeriesView(std::span<const double> values, std::size_t channels) : values_(values), channels_(channels) {
        if (channels_ == 0 || values_.size() % channels_ != 0) {
            throw ArgumentError("series storage is not a whole number of rows");
        }
    }

    std::size_t size() const noexcept { return channels_ ? values_.size() / channels_ : 0; }
    std::size_t channels() const noexcept { return channels_; }
    bool empty() const noexcept { return values_.empty(); }
    std::span<const double> row(std::size_t i) const { return values_.subspan(i * channels_, channels_); }
    std::span<const double> values() const noexcept { return values_; }

private:
    std::span<const double> values_;
    std::size_t channels_ = 0;
};

/// Owning row-major multichannel sequence.
struct Series {
    std::vector<double> values;
    std::size_t channels = 1;

    std::size_t size() const noexcept { return channels ? values.size() / channels : 0; }
    SeriesView view() const { return SeriesView(values, channels); }

    friend bool operator==(const Series&, const Series&) = default;
};

}  // namespace grantha
