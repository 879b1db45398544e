#include "grantha/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "grantha/conversion.hpp"
#include "grantha/error.hpp"
#include "parallel.hpp"

namespace grantha {

std::string_view to_string(MetricVariant v) {
    return v == MetricVariant::dtw ? "dtw" : "euclidean_resampled";
}

MetricVariant parse_metric_variant(std::string_view s) {
    if (s == "dtw") return MetricVariant::dtw;
    if (s == "euclidean" || s == "euclidean_resampled") return MetricVariant::euclidean_resampled;
    throw ArgumentError("unknown metric variant '" + std::string(s) + "'");
}

ConfusionMatrix::ConfusionMatrix(std::vector<std::string> class_ids)
    : classes(std::move(class_ids)), counts(classes.size() * classes.size(), 0) {}

std::size_t ConfusionMatrix::row_sum(std::size_t truth) const {
    std::size_t s = 0;
    for (std::size_t p = 0; p < size(); ++p) s += at(truth, p);
    return s;
}

std::size_t ConfusionMatrix::column_sum(std::size_t predicted) const {
    std::size_t s = 0;
    for (std::size_t t = 0; t < size(); ++t) s += at(t, predicted);
    return s;
}

std::size_t ConfusionMatrix::trace() const {
    std::size_t s = 0;
    for (std::size_t i = 0; i < size(); ++i) s += at(i, i);
    return s;
}

std::size_t ConfusionMatrix::total() const {
    std::size_t s = 0;
    for (auto c : counts) s += c;
    return s;
}

double ConfusionMatrix::accuracy() const {
    const auto n = total();
    return n == 0 ? 0.0 : 100.0 * static_cast<double>(trace()) / static_cast<double>(n);
}

std::string ConfusionMatrix::to_csv() const {
    auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            if (c == '"') q += '"';
            q += c;
        }
        return q + "\"";
    };
    std::ostringstream out;
    out << "truth\\predicted";
    for (const auto& c : classes) out << ',' << quote(c);
    out << '\n';
    for (std::size_t t = 0; t < size(); ++t) {
        out << quote(classes[t]);
        for (std::size_t p = 0; p < size(); ++p) out << ',' << at(t, p);
        out << '\n';
    }
    return out.str();
}

std::vector<ConfusedPair> most_confused(const ConfusionMatrix& matrix, std::size_t top) {
    std::vector<ConfusedPair> pairs;
    for (std::size_t t = 0; t < matrix.size(); ++t) {
        for (std::size_t p = 0; p < matrix.size(); ++p) {
            if (t != p && matrix.at(t, p) > 0) pairs.push_back({matrix.classes[t], matrix.classes[p], matrix.at(t, p)});
        }
    }
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.count > b.count; });
    if (pairs.size() > top) pairs.resize(top);
    return pairs;
}

std::string EvalReport::to_text() const {
    std::ostringstream out;
    out << "variant  " << to_string(variant) << '\n';
    out << "samples  " << samples << '\n';
    out << "accuracy " << std::fixed << std::setprecision(2) << accuracy << "%\n\n";
    std::size_t width = 5;
    for (const auto& c : per_class) width = std::max(width, c.id.size());
    out << std::left << std::setw(static_cast<int>(width)) << "class" << "  support  precision  recall\n";
    for (const auto& c : per_class) {
        out << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << std::right << std::setw(7)
            << c.support << "  " << std::setw(9) << std::setprecision(4) << c.precision << "  " << std::setw(6)
            << c.recall << '\n';
    }
    if (!confused.empty()) {
        out << "\nmost confused (truth -> predicted: count)\n";
        for (const auto& p : confused) out << "  " << p.truth << " -> " << p.predicted << ": " << p.count << '\n';
    }
    return out.str();
}

std::string EvalReport::to_json() const {
    nlohmann::json doc;
    doc["variant"] = std::string(to_string(variant));
    doc["samples"] = samples;
    doc["accuracy"] = accuracy;
    auto& classes = doc["per_class"] = nlohmann::json::array();
    for (const auto& c : per_class) {
        classes.push_back({{"id", c.id}, {"support", c.support}, {"precision", c.precision}, {"recall", c.recall}});
    }
    auto& conf = doc["most_confused"] = nlohmann::json::array();
    for (const auto& p : confused) conf.push_back({{"truth", p.truth}, {"predicted", p.predicted}, {"count", p.count}});
    return doc.dump(2) + "\n";
}

Series resample_by_index(SeriesView series, std::size_t length) {
    if (series.empty() || length == 0) throw ArgumentError("resampling needs a non-empty series and length");
    const std::size_t n = series.size();
    const std::size_t ch = series.channels();
    Series out{std::vector<double>(length * ch), ch};
    for (std::size_t r = 0; r < length; ++r) {
        const double pos = length == 1 ? 0.0 : static_cast<double>(r) * static_cast<double>(n - 1) /
                                                   static_cast<double>(length - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const std::size_t hi = std::min(lo + 1, n - 1);
        const double f = pos - static_cast<double>(lo);
        const auto a = series.row(lo);
        const auto b = series.row(hi);
        for (std::size_t k = 0; k < ch; ++k) out.values[r * ch + k] = a[k] + f * (b[k] - a[k]);
    }
    return out;
}

double summed_euclidean(SeriesView a, SeriesView b) {
    if (a.size() != b.size() || a.channels() != b.channels()) {
        throw ArgumentError("summed Euclidean distance needs equal-shape series");
    }
    double sum = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) sum += std::sqrt(squared_euclidean(a.row(r), b.row(r)));
    return sum;
}

namespace {

std::vector<Series> resampled_prototypes(const RecognitionModel& model, std::size_t length) {
    std::vector<Series> out;
    for (const auto& cls : model.prototypes) {
        for (const auto& p : cls) out.push_back(resample_by_index(p.view(), length));
    }
    return out;
}

std::vector<Candidate> rank_euclidean(const RecognitionModel& model, const std::vector<Series>& protos,
                                      const FeatureSequence& query, std::size_t length, std::size_t top_n,
                                      std::size_t k) {
    const Series q = resample_by_index(query.view(), length);
    std::vector<double> distances(protos.size());
    for (std::size_t i = 0; i < protos.size(); ++i) distances[i] = summed_euclidean(q.view(), protos[i].view());
    return rank_classes(model, distances, top_n, k);
}

std::string top1(const RecognitionModel& model, const InkSample& sample, const EvalOptions& options,
                 const std::vector<Series>& euclidean_protos) {
    if (options.variant == MetricVariant::dtw) return recognize(model, sample, 1, options.k).front().class_id;
    FeatureSequence features;
    try {
        features = extract_features(sample, model.feature_config);
    } catch (const DegenerateInputError& e) {
        throw RecognitionError(std::string("cannot recognize sample: ") + e.what());
    }
    return rank_euclidean(model, euclidean_protos, features, options.resample_length, 1, options.k)
        .front()
        .class_id;
}

}  // namespace

std::vector<Candidate> recognize_euclidean(const RecognitionModel& model, const FeatureSequence& query,
                                           std::size_t resample_length, std::size_t top_n, std::size_t k) {
    return rank_euclidean(model, resampled_prototypes(model, resample_length), query, resample_length, top_n, k);
}

Evaluation evaluate(const RecognitionModel& model, std::span<const InkSample> test, const EvalOptions& options) {
    if (test.empty()) throw EvaluationError("empty test set");
    std::vector<std::size_t> truth(test.size());
    for (std::size_t i = 0; i < test.size(); ++i) {
        if (!test[i].label) throw EvaluationError("test sample " + std::to_string(i) + " has no label");
        truth[i] = model.class_index(*test[i].label);
        if (truth[i] == model.classes.size()) {
            throw EvaluationError("test label '" + *test[i].label + "' is not a model class");
        }
    }
    std::vector<Series> euclidean_protos;
    if (options.variant == MetricVariant::euclidean_resampled) {
        euclidean_protos = resampled_prototypes(model, options.resample_length);
    }

    std::vector<std::size_t> predicted(test.size());
    detail::parallel_for(test.size(), [&](std::size_t i) {
        predicted[i] = model.class_index(top1(model, test[i], options, euclidean_protos));
    });

    std::vector<std::string> ids;
    for (const auto& c : model.classes) ids.push_back(c.id);
    Evaluation result{ConfusionMatrix(ids), {}};
    for (std::size_t i = 0; i < test.size(); ++i) ++result.matrix.at(truth[i], predicted[i]);

    auto& report = result.report;
    report.variant = options.variant;
    report.samples = test.size();
    report.accuracy = result.matrix.accuracy();
    for (std::size_t c = 0; c < ids.size(); ++c) {
        ClassMetrics m;
        m.id = ids[c];
        m.support = result.matrix.row_sum(c);
        const auto predicted_c = result.matrix.column_sum(c);
        const auto hit = result.matrix.at(c, c);
        m.precision = predicted_c ? static_cast<double>(hit) / static_cast<double>(predicted_c) : 0.0;
        m.recall = m.support ? static_cast<double>(hit) / static_cast<double>(m.support) : 0.0;
        report.per_class.push_back(m);
    }
    report.confused = most_confused(result.matrix, options.top_confused);
    return result;
}

std::u32string direct_map(std::u32string_view grantha, const ScriptTables& tables) {
    std::u32string out;
    for (char32_t c : grantha) out.push_back(tables.to_malayalam(c).value_or(c));
    return out;
}

WordRates evaluate_words(const RecognitionModel& model, std::span<const WordLine> lines,
                         const Lexicon& segmentation_lexicon, const Lexicon& conversion_lexicon, std::size_t k,
                         const ScriptTables& tables) {
    WordRates rates;
    std::size_t ok_grantha = 0, ok_old = 0, ok_new = 0;
    for (const auto& line : lines) {
        std::size_t total = 0;
        for (auto n : line.word_lengths) total += n;
        if (total != line.symbols.size()) throw EvaluationError("word lengths do not cover the line's symbols");

        std::vector<std::size_t> predicted(line.symbols.size());
        std::vector<std::u32string> pieces(line.symbols.size());
        for (std::size_t s = 0; s < line.symbols.size(); ++s) {
            const auto& sym = line.symbols[s];
            if (!sym.label || model.class_index(*sym.label) == model.classes.size()) {
                throw EvaluationError("word symbol " + std::to_string(s) + " lacks a known label");
            }
            predicted[s] = model.class_index(recognize(model, sym, 1, k).front().class_id);
            pieces[s] = direct_map(model.classes[predicted[s]].codepoints, tables);
        }
        const auto spans = segment_spans(pieces, segmentation_lexicon);

        std::size_t begin = 0;
        for (auto len : line.word_lengths) {
            const std::size_t end = begin + len;
            ++rates.words;
            const bool segmented = std::any_of(spans.begin(), spans.end(),
                                               [&](const WordSpan& w) { return w.begin == begin && w.end == end; });
            bool correct = segmented;
            std::u32string word;
            for (std::size_t s = begin; s < end && correct; ++s) {
                correct = model.classes[predicted[s]].id == *line.symbols[s].label;
                word += model.classes[predicted[s]].codepoints;
            }
            if (correct) {
                ++ok_grantha;
                try {
                    const auto conv = convert_word(word, conversion_lexicon, tables);
                    const bool unmapped = std::any_of(conv.notes.begin(), conv.notes.end(),
                                                      [](const auto& n) { return n.code == "unmapped"; });
                    const bool missed = std::any_of(conv.notes.begin(), conv.notes.end(),
                                                    [](const auto& n) { return n.code == "intellisense_miss"; });
                    if (!unmapped) {
                        ++ok_old;
                        if (!missed) ++ok_new;
                    }
                } catch (const Error&) {
                }
            }
            begin = end;
        }
    }
    if (rates.words > 0) {
        const double n = static_cast<double>(rates.words);
        rates.grantha = 100.0 * static_cast<double>(ok_grantha) / n;
        rates.old_script = 100.0 * static_cast<double>(ok_old) / n;
        rates.new_script = 100.0 * static_cast<double>(ok_new) / n;
    }
    return rates;
}

}  // namespace grantha
