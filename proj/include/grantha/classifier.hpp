#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "grantha/dtw.hpp"
#include "grantha/features.hpp"
#include "grantha/ink.hpp"
#include "grantha/series.hpp"

namespace grantha {

struct RecognitionModel {
    static constexpr int kFormatVersion = 1;

    int version = kFormatVersion;
    FeatureConfig feature_config;
    DtwConfig dtw_config;
    std::vector<SymbolClass> classes;
    /// prototypes[c] holds the 8-channel prototype sequences of classes[c].
    std::vector<std::vector<Series>> prototypes;

    std::size_t prototype_count() const noexcept;
    /// Index of the class with `id`, or classes.size() if absent.
    std::size_t class_index(const std::string& id) const noexcept;

    friend bool operator==(const RecognitionModel&, const RecognitionModel&) = default;
};

struct TrainOptions {
    std::size_t prototypes_per_class = 4;
    FeatureConfig features;
    DtwConfig dtw;
    /// When non-empty, fixes the class list and its order; every declared
    /// class needs at least one sample. Otherwise classes are the sorted
    /// distinct labels.
    std::vector<std::string> declared_classes;
    /// Overrides codepoints_for_label() for specific ids.
    std::map<std::string, std::u32string> codepoints;
};

struct Candidate {
    std::string class_id;
    std::u32string codepoints;
    /// Minimum distance from the query to any prototype of the class.
    double distance = 0.0;
    double confidence = 0.0;
    /// Number of the k nearest prototypes that belong to the class.
    std::size_t votes = 0;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Average-linkage agglomerative clustering over a dense symmetric distance
/// matrix (row-major, size n*n), merged down to `clusters` groups. Groups are
/// returned ordered by their smallest member; members ascend.
std::vector<std::vector<std::size_t>> average_linkage(std::span<const double> distances, std::size_t n,
                                                      std::size_t clusters);

/// Member of `cluster` with the smallest summed distance to the others;
/// ties go to the smaller index.
std::size_t medoid(std::span<const double> distances, std::size_t n, std::span<const std::size_t> cluster);

/// Per class: extract features, cluster under DTW with average linkage into
/// min(prototypes_per_class, samples) groups and keep each group's medoid.
RecognitionModel train(std::span<const InkSample> data, const TrainOptions& options = {});

/// Ranks classes from per-prototype distances (aligned with the model's
/// prototype order, class by class): the k nearest prototypes vote, classes
/// sort by votes then mean voting distance (class minimum when unvoted), and
/// the top_n are returned with inverse-distance confidences.
std::vector<Candidate> rank_classes(const RecognitionModel& model, std::span<const double> prototype_distances,
                                    std::size_t top_n, std::size_t k);

std::vector<Candidate> recognize_features(const RecognitionModel& model, const FeatureSequence& query,
                                          std::size_t top_n = 5, std::size_t k = 3);

/// Throws RecognitionError for samples that cannot be featurized.
std::vector<Candidate> recognize(const RecognitionModel& model, const InkSample& sample, std::size_t top_n = 5,
                                 std::size_t k = 3);

}  // namespace grantha
