#include "grantha/dtw.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "grantha/error.hpp"

namespace grantha {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// One row of the (cell, path length) table. Cell (i, j) holds the cheapest
// cumulative cost for every path length K in [max(i,j)+1, i+j+1].
struct Row {
    std::size_t i = 0;
    std::size_t jlo = 1;
    std::size_t jhi = 0;
    std::vector<std::size_t> offset;
    std::vector<double> data;

    static std::size_t kmin(std::size_t i, std::size_t j) { return std::max(i, j) + 1; }

    double get(std::size_t j, std::size_t k) const {
        if (jlo > jhi || j < jlo || j > jhi) return kInf;
        if (k < kmin(i, j) || k > i + j + 1) return kInf;
        return data[offset[j - jlo] + (k - kmin(i, j))];
    }
};

void check_inputs(SeriesView q, SeriesView c) {
    if (q.empty() || c.empty()) throw ArgumentError("DTW requires non-empty sequences");
    if (q.channels() != c.channels()) throw ArgumentError("DTW sequences differ in channel count");
}

Row make_row(std::size_t i, std::size_t m, std::size_t band) {
    Row row;
    row.i = i;
    row.jlo = i > band ? i - band : 0;
    row.jhi = std::min(m - 1, i + band);
    if (row.jlo > row.jhi) return row;
    row.offset.resize(row.jhi - row.jlo + 1);
    std::size_t total = 0;
    for (std::size_t j = row.jlo; j <= row.jhi; ++j) {
        row.offset[j - row.jlo] = total;
        total += std::min(i, j) + 1;
    }
    row.data.assign(total, kInf);
    return row;
}

void fill_row(Row& cur, const Row* prev, SeriesView q, SeriesView c) {
    const std::size_t i = cur.i;
    if (cur.jlo > cur.jhi) return;
    for (std::size_t j = cur.jlo; j <= cur.jhi; ++j) {
        const double cost = squared_euclidean(q.row(i), c.row(j));
        double* slot = cur.data.data() + cur.offset[j - cur.jlo];
        const std::size_t k0 = Row::kmin(i, j);
        for (std::size_t k = k0; k <= i + j + 1; ++k) {
            double best;
            if (i == 0 && j == 0) {
                best = 0.0;
            } else {
                const double diag = (prev && j > 0) ? prev->get(j - 1, k - 1) : kInf;
                const double up = prev ? prev->get(j, k - 1) : kInf;
                const double left = j > 0 ? cur.get(j - 1, k - 1) : kInf;
                best = std::min({diag, up, left});
            }
            slot[k - k0] = best == kInf ? kInf : best + cost;
        }
    }
}

// Picks the path length minimizing sqrt(S)/K at the final cell.
std::pair<double, std::size_t> finish(const Row& last, std::size_t m) {
    double best = kInf;
    std::size_t best_k = 0;
    const std::size_t j = m - 1;
    for (std::size_t k = Row::kmin(last.i, j); k <= last.i + j + 1; ++k) {
        const double s = last.get(j, k);
        if (s == kInf) continue;
        const double d = std::sqrt(s) / static_cast<double>(k);
        if (d < best) {
            best = d;
            best_k = k;
        }
    }
    return {best, best_k};
}

}  // namespace

std::size_t band_width(std::size_t n, std::size_t m, const DtwConfig& config) {
    if (!(config.window_fraction > 0.0 && config.window_fraction <= 1.0)) {
        throw ConfigError("window_fraction must lie in (0, 1]");
    }
    const std::size_t longest = std::max(n, m);
    auto band = static_cast<std::size_t>(std::ceil(config.window_fraction * static_cast<double>(longest)));
    const std::size_t gap = n > m ? n - m : m - n;
    if (band < gap) {
        if (!config.auto_widen) {
            throw ConfigError("DTW band " + std::to_string(band) + " cannot connect sequences of length " +
                              std::to_string(n) + " and " + std::to_string(m));
        }
        band = gap;
    }
    return band;
}

double squared_euclidean(std::span<const double> a, std::span<const double> b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        sum += d * d;
    }
    return sum;
}

double dtw_distance(SeriesView query, SeriesView candidate, const DtwConfig& config) {
    check_inputs(query, candidate);
    const std::size_t n = query.size();
    const std::size_t m = candidate.size();
    const std::size_t band = band_width(n, m, config);
    Row prev;
    bool have_prev = false;
    for (std::size_t i = 0; i < n; ++i) {
        Row cur = make_row(i, m, band);
        fill_row(cur, have_prev ? &prev : nullptr, query, candidate);
        prev = std::move(cur);
        have_prev = true;
    }
    return finish(prev, m).first;
}

DtwAlignment dtw_align(SeriesView query, SeriesView candidate, const DtwConfig& config) {
    check_inputs(query, candidate);
    const std::size_t n = query.size();
    const std::size_t m = candidate.size();
    const std::size_t band = band_width(n, m, config);
    std::vector<Row> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(make_row(i, m, band));
        fill_row(rows.back(), i > 0 ? &rows[i - 1] : nullptr, query, candidate);
    }
    const auto [distance, length] = finish(rows.back(), m);

    DtwAlignment result;
    result.distance = distance;
    auto& pairs = result.path.pairs;
    pairs.reserve(length);
    std::size_t i = n - 1;
    std::size_t j = m - 1;
    std::size_t k = length;
    pairs.emplace_back(i, j);
    while (i > 0 || j > 0) {
        const double diag = (i > 0 && j > 0) ? rows[i - 1].get(j - 1, k - 1) : kInf;
        const double up = i > 0 ? rows[i - 1].get(j, k - 1) : kInf;
        const double left = j > 0 ? rows[i].get(j - 1, k - 1) : kInf;
        const double best = std::min({diag, up, left});
        if (diag == best) {
            --i;
            --j;
        } else if (up == best) {
            --i;
        } else {
            --j;
        }
        --k;
        pairs.emplace_back(i, j);
    }
    std::reverse(pairs.begin(), pairs.end());
    return result;
}

WarpingPath warping_path(SeriesView query, SeriesView candidate, const DtwConfig& config) {
    return dtw_align(query, candidate, config).path;
}

double path_cost(SeriesView query, SeriesView candidate, const WarpingPath& path) {
    if (path.pairs.empty()) throw ArgumentError("empty warping path");
    double sum = 0.0;
    for (const auto& [i, j] : path.pairs) sum += squared_euclidean(query.row(i), candidate.row(j));
    return std::sqrt(sum) / static_cast<double>(path.pairs.size());
}

bool is_admissible(const WarpingPath& path, std::size_t n, std::size_t m, std::size_t band) {
    const auto& p = path.pairs;
    if (p.empty() || p.front() != std::pair<std::size_t, std::size_t>{0, 0} ||
        p.back() != std::pair<std::size_t, std::size_t>{n - 1, m - 1}) {
        return false;
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
        const auto [i, j] = p[k];
        if ((i > j ? i - j : j - i) > band) return false;
        if (k == 0) continue;
        const auto [pi, pj] = p[k - 1];
        if (i < pi || j < pj) return false;
        const std::size_t di = i - pi;
        const std::size_t dj = j - pj;
        if (di > 1 || dj > 1 || (di == 0 && dj == 0)) return false;
    }
    return true;
}

}  // namespace grantha
