#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "grantha/classifier.hpp"
#include "grantha/lexicon.hpp"
#include "grantha/script.hpp"

namespace grantha {

enum class MetricVariant {
    /// k-NN under the DTW distance of the model.
    dtw,
    /// k-NN under summed per-row Euclidean distance after resampling both
    /// feature sequences to a fixed length by sample index (no warping).
    euclidean_resampled,
};

std::string_view to_string(MetricVariant v);
/// Accepts "dtw" and "euclidean" / "euclidean_resampled".
MetricVariant parse_metric_variant(std::string_view s);

/// Rows are the true class, columns the predicted class.
struct ConfusionMatrix {
    std::vector<std::string> classes;
    std::vector<std::size_t> counts;

    explicit ConfusionMatrix(std::vector<std::string> class_ids = {});

    std::size_t size() const noexcept { return classes.size(); }
    std::size_t& at(std::size_t truth, std::size_t predicted) { return counts[truth * size() + predicted]; }
    std::size_t at(std::size_t truth, std::size_t predicted) const { return counts[truth * size() + predicted]; }
    std::size_t row_sum(std::size_t truth) const;
    std::size_t column_sum(std::size_t predicted) const;
    std::size_t trace() const;
    std::size_t total() const;
    /// Percentage in [0, 100].
    double accuracy() const;

    std::string to_csv() const;
};

struct ConfusedPair {
    std::string truth;
    std::string predicted;
    std::size_t count = 0;

    friend bool operator==(const ConfusedPair&, const ConfusedPair&) = default;
};

/// Off-diagonal cells with a non-zero count, largest first; ties keep
/// row-major class order.
std::vector<ConfusedPair> most_confused(const ConfusionMatrix& matrix, std::size_t top);

struct ClassMetrics {
    std::string id;
    std::size_t support = 0;
    double precision = 0.0;
    double recall = 0.0;
};

struct EvalReport {
    MetricVariant variant = MetricVariant::dtw;
    std::size_t samples = 0;
    double accuracy = 0.0;
    std::vector<ClassMetrics> per_class;
    std::vector<ConfusedPair> confused;

    std::string to_text() const;
    std::string to_json() const;
};

struct EvalOptions {
    std::size_t k = 3;
    MetricVariant variant = MetricVariant::dtw;
    std::size_t resample_length = 64;
    std::size_t top_confused = 5;
};

struct Evaluation {
    ConfusionMatrix matrix;
    EvalReport report;
};

/// Top-1 recognition of every labeled test sample. Throws EvaluationError
/// for an empty test set or a label the model does not know.
Evaluation evaluate(const RecognitionModel& model, std::span<const InkSample> test, const EvalOptions& options = {});

/// Linear interpolation of `series` onto `length` rows evenly spaced in
/// sample index.
Series resample_by_index(SeriesView series, std::size_t length);

/// Sum over rows of the Euclidean distance between equal-length series.
double summed_euclidean(SeriesView a, SeriesView b);

/// k-NN candidates under the Euclidean baseline.
std::vector<Candidate> recognize_euclidean(const RecognitionModel& model, const FeatureSequence& query,
                                           std::size_t resample_length, std::size_t top_n, std::size_t k);

/// A written line: symbol samples (labeled with the true class) and the
/// number of symbols in each true word, in order.
struct WordLine {
    std::vector<InkSample> symbols;
    std::vector<std::size_t> word_lengths;
};

/// Word recognition rates in percent. A word counts for `grantha` when the
/// segmentation of the predicted symbol stream reproduces its span and all of
/// its symbols are top-1 correct; for `old_script` when it also converts
/// without warnings; for `new_script` when the new script additionally
/// needed no unresolved intellisense fallback.
struct WordRates {
    std::size_t words = 0;
    double grantha = 0.0;
    double old_script = 0.0;
    double new_script = 0.0;
};

/// Code points mapped one-for-one into Malayalam; unmapped ones are kept.
std::u32string direct_map(std::u32string_view grantha, const ScriptTables& tables = ScriptTables::builtin());

/// Predicted symbols are direct-mapped and segmented with
/// `segmentation_lexicon`; whole words are converted with
/// `conversion_lexicon`.
WordRates evaluate_words(const RecognitionModel& model, std::span<const WordLine> lines,
                         const Lexicon& segmentation_lexicon, const Lexicon& conversion_lexicon, std::size_t k = 3,
                         const ScriptTables& tables = ScriptTables::builtin());

}  // namespace grantha
