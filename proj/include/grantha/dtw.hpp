#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "grantha/series.hpp"

namespace grantha {

struct DtwConfig {
    /// Sakoe-Chiba half-width as a fraction of max(n, m), in (0, 1].
    double window_fraction = 0.1;
    /// Widen the band to |n - m| when it would not connect the corners;
    /// otherwise such a pair is a ConfigError.
    bool auto_widen = true;

    friend bool operator==(const DtwConfig&, const DtwConfig&) = default;
};

/// Cells (i, j), 0-based, from (0, 0) to (n-1, m-1).
struct WarpingPath {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;

    std::size_t size() const noexcept { return pairs.size(); }
    friend bool operator==(const WarpingPath&, const WarpingPath&) = default;
};

struct DtwAlignment {
    double distance = 0.0;
    WarpingPath path;
};

/// Effective band half-width |i - j| <= w for sequences of length n and m.
std::size_t band_width(std::size_t n, std::size_t m, const DtwConfig& config);

double squared_euclidean(std::span<const double> a, std::span<const double> b);

/// min over admissible paths W of sqrt(sum_k w_k) / K, where w_k is the
/// squared Euclidean cost of the k-th matched pair and K = |W|. Steps are
/// (1,0), (0,1) and (1,1). Because K differs between paths, the table keeps
/// the best cumulative cost per (cell, path length).
double dtw_distance(SeriesView query, SeriesView candidate, const DtwConfig& config = {});

/// The distance together with a path realizing it. Backtracking prefers the
/// diagonal predecessor, then (i-1, j), then (i, j-1).
DtwAlignment dtw_align(SeriesView query, SeriesView candidate, const DtwConfig& config = {});

WarpingPath warping_path(SeriesView query, SeriesView candidate, const DtwConfig& config = {});

/// sqrt(sum of squared costs along `path`) / |path|.
double path_cost(SeriesView query, SeriesView candidate, const WarpingPath& path);

/// Boundary, continuity, monotonicity and band checks.
bool is_admissible(const WarpingPath& path, std::size_t n, std::size_t m, std::size_t band);

}  // namespace grantha
