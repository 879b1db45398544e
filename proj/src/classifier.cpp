#include "grantha/classifier.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "grantha/error.hpp"
#include "parallel.hpp"

namespace grantha {

std::size_t RecognitionModel::prototype_count() const noexcept {
    std::size_t n = 0;
    for (const auto& p : prototypes) n += p.size();
    return n;
}

std::size_t RecognitionModel::class_index(const std::string& id) const noexcept {
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].id == id) return i;
    }
    return classes.size();
}

std::vector<std::vector<std::size_t>> average_linkage(std::span<const double> distances, std::size_t n,
                                                      std::size_t clusters) {
    if (distances.size() != n * n) throw ArgumentError("distance matrix must be n*n");
    if (clusters == 0 && n > 0) throw ArgumentError("cluster count must be positive");
    std::vector<std::vector<std::size_t>> groups(n);
    for (std::size_t i = 0; i < n; ++i) groups[i] = {i};

    // Linkage sums between live groups; average = sum / (|a| * |b|).
    std::vector<double> link(distances.begin(), distances.end());
    std::vector<bool> alive(n, true);
    std::size_t live = n;
    while (live > clusters) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t ba = 0, bb = 0;
        for (std::size_t a = 0; a < n; ++a) {
            if (!alive[a]) continue;
            for (std::size_t b = a + 1; b < n; ++b) {
                if (!alive[b]) continue;
                const double avg = link[a * n + b] / static_cast<double>(groups[a].size() * groups[b].size());
                if (avg < best) {
                    best = avg;
                    ba = a;
                    bb = b;
                }
            }
        }
        for (std::size_t c = 0; c < n; ++c) {
            if (!alive[c] || c == ba || c == bb) continue;
            link[ba * n + c] += link[bb * n + c];
            link[c * n + ba] = link[ba * n + c];
        }
        groups[ba].insert(groups[ba].end(), groups[bb].begin(), groups[bb].end());
        groups[bb].clear();
        alive[bb] = false;
        --live;
    }

    std::vector<std::vector<std::size_t>> out;
    for (std::size_t a = 0; a < n; ++a) {
        if (!alive[a]) continue;
        std::sort(groups[a].begin(), groups[a].end());
        out.push_back(std::move(groups[a]));
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return out;
}

std::size_t medoid(std::span<const double> distances, std::size_t n, std::span<const std::size_t> cluster) {
    if (cluster.empty()) throw ArgumentError("medoid of an empty cluster");
    std::size_t best = cluster.front();
    double best_sum = std::numeric_limits<double>::infinity();
    for (std::size_t a : cluster) {
        double sum = 0.0;
        for (std::size_t b : cluster) sum += distances[a * n + b];
        if (sum < best_sum || (sum == best_sum && a < best)) {
            best_sum = sum;
            best = a;
        }
    }
    return best;
}

RecognitionModel train(std::span<const InkSample> data, const TrainOptions& options) {
    if (options.prototypes_per_class == 0) throw ConfigError("prototypes_per_class must be positive");
    band_width(1, 1, options.dtw);  // validates window_fraction

    RecognitionModel model;
    model.feature_config = options.features;
    model.dtw_config = options.dtw;

    std::vector<std::string> ids = options.declared_classes;
    if (ids.empty()) {
        std::set<std::string> seen;
        for (const auto& s : data) {
            if (s.label) seen.insert(*s.label);
        }
        ids.assign(seen.begin(), seen.end());
    }
    if (ids.empty()) throw TrainingError("no labeled training samples");

    std::vector<std::vector<const InkSample*>> members(ids.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        if (!data[i].label) throw TrainingError("training sample " + std::to_string(i) + " has no label");
        const auto it = std::find(ids.begin(), ids.end(), *data[i].label);
        if (it == ids.end()) throw TrainingError("sample label '" + *data[i].label + "' is not a declared class");
        members[static_cast<std::size_t>(it - ids.begin())].push_back(&data[i]);
    }
    for (std::size_t c = 0; c < ids.size(); ++c) {
        if (members[c].empty()) throw TrainingError("class '" + ids[c] + "' has no training samples");
    }

    model.classes.resize(ids.size());
    model.prototypes.resize(ids.size());
    for (std::size_t c = 0; c < ids.size(); ++c) {
        const auto cp = options.codepoints.find(ids[c]);
        model.classes[c] = {ids[c], cp != options.codepoints.end() ? cp->second : codepoints_for_label(ids[c])};
        if (model.classes[c].codepoints.empty()) throw TrainingError("class '" + ids[c] + "' has no code points");
    }

    for (std::size_t c = 0; c < ids.size(); ++c) {
        const auto& samples = members[c];
        const std::size_t n = samples.size();
        std::vector<Series> features(n);
        detail::parallel_for(n, [&](std::size_t i) {
            try {
                features[i] = extract_features(*samples[i], options.features).to_series();
            } catch (const DegenerateInputError& e) {
                throw TrainingError("class '" + ids[c] + "' sample " + std::to_string(i) + ": " + e.what());
            }
        });

        const std::size_t wanted = std::min(options.prototypes_per_class, n);
        if (wanted == n) {
            model.prototypes[c] = std::move(features);
            continue;
        }
        std::vector<double> dist(n * n, 0.0);
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
        }
        detail::parallel_for(pairs.size(), [&](std::size_t p) {
            const auto [a, b] = pairs[p];
            const double d = dtw_distance(features[a].view(), features[b].view(), options.dtw);
            dist[a * n + b] = d;
            dist[b * n + a] = d;
        });
        for (const auto& group : average_linkage(dist, n, wanted)) {
            model.prototypes[c].push_back(features[medoid(dist, n, group)]);
        }
    }
    return model;
}

std::vector<Candidate> rank_classes(const RecognitionModel& model, std::span<const double> prototype_distances,
                                    std::size_t top_n, std::size_t k) {
    if (top_n == 0 || k == 0) throw ArgumentError("top_n and k must be positive");
    if (prototype_distances.size() != model.prototype_count()) {
        throw ArgumentError("one distance per prototype required");
    }
    struct Hit {
        double distance;
        std::size_t cls;
        std::size_t index;
    };
    std::vector<Hit> hits;
    hits.reserve(prototype_distances.size());
    const std::size_t nclasses = model.classes.size();
    std::vector<double> class_min(nclasses, std::numeric_limits<double>::infinity());
    std::size_t flat = 0;
    for (std::size_t c = 0; c < nclasses; ++c) {
        for (std::size_t p = 0; p < model.prototypes[c].size(); ++p, ++flat) {
            hits.push_back({prototype_distances[flat], c, flat});
            class_min[c] = std::min(class_min[c], prototype_distances[flat]);
        }
    }
    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        return a.distance != b.distance ? a.distance < b.distance : a.index < b.index;
    });

    std::vector<std::size_t> votes(nclasses, 0);
    std::vector<double> vote_sum(nclasses, 0.0);
    for (std::size_t h = 0; h < std::min(k, hits.size()); ++h) {
        ++votes[hits[h].cls];
        vote_sum[hits[h].cls] += hits[h].distance;
    }
    std::vector<double> rank_distance(nclasses);
    for (std::size_t c = 0; c < nclasses; ++c) {
        rank_distance[c] = votes[c] ? vote_sum[c] / static_cast<double>(votes[c]) : class_min[c];
    }
    std::vector<std::size_t> order(nclasses);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (votes[a] != votes[b]) return votes[a] > votes[b];
        if (rank_distance[a] != rank_distance[b]) return rank_distance[a] < rank_distance[b];
        return a < b;
    });
    order.resize(std::min(top_n, nclasses));

    constexpr double kEps = 1e-9;
    std::vector<Candidate> out;
    double norm = 0.0;
    for (std::size_t c : order) {
        out.push_back({model.classes[c].id, model.classes[c].codepoints, class_min[c], 0.0, votes[c]});
        norm += 1.0 / (class_min[c] + kEps);
    }
    for (auto& cand : out) cand.confidence = (1.0 / (cand.distance + kEps)) / norm;
    return out;
}

std::vector<Candidate> recognize_features(const RecognitionModel& model, const FeatureSequence& query,
                                          std::size_t top_n, std::size_t k) {
    if (model.classes.empty() || model.prototype_count() == 0) throw RecognitionError("model has no prototypes");
    std::vector<SeriesView> protos;
    protos.reserve(model.prototype_count());
    for (const auto& cls : model.prototypes) {
        for (const auto& p : cls) protos.push_back(p.view());
    }
    std::vector<double> distances(protos.size());
    const auto q = query.view();
    detail::parallel_for(protos.size(),
                         [&](std::size_t i) { distances[i] = dtw_distance(q, protos[i], model.dtw_config); });
    return rank_classes(model, distances, top_n, k);
}

std::vector<Candidate> recognize(const RecognitionModel& model, const InkSample& sample, std::size_t top_n,
                                 std::size_t k) {
    FeatureSequence features;
    try {
        features = extract_features(sample, model.feature_config);
    } catch (const DegenerateInputError& e) {
        throw RecognitionError(std::string("cannot recognize sample: ") + e.what());
    }
    return recognize_features(model, features, top_n, k);
}

}  // namespace grantha
