#include "grantha/model_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "grantha/error.hpp"
#include "grantha/utf8.hpp"

namespace grantha {

using nlohmann::json;

std::string model_to_json(const RecognitionModel& model) {
    json doc;
    doc["version"] = model.version;
    doc["feature_config"] = {{"neighborhood", model.feature_config.neighborhood},
                             {"resample_step", model.feature_config.resample_step}};
    doc["dtw_config"] = {{"window_fraction", model.dtw_config.window_fraction},
                         {"auto_widen", model.dtw_config.auto_widen}};
    json classes = json::array();
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        json cls;
        cls["id"] = model.classes[c].id;
        json cps = json::array();
        for (char32_t cp : model.classes[c].codepoints) cps.push_back(utf8::to_uplus(cp));
        cls["codepoints"] = cps;
        json protos = json::array();
        for (const auto& p : model.prototypes[c]) {
            json rows = json::array();
            for (std::size_t r = 0; r < p.size(); ++r) {
                json row = json::array();
                for (std::size_t k = 0; k < p.channels; ++k) row.push_back(p.values[r * p.channels + k]);
                rows.push_back(std::move(row));
            }
            protos.push_back(std::move(rows));
        }
        cls["prototypes"] = std::move(protos);
        classes.push_back(std::move(cls));
    }
    doc["classes"] = std::move(classes);
    return doc.dump(1) + "\n";
}

RecognitionModel model_from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ModelFormatError(std::string("model is not valid JSON: ") + e.what());
    }
    try {
        RecognitionModel model;
        const int version = doc.at("version").get<int>();
        if (version != RecognitionModel::kFormatVersion) {
            throw ModelFormatError("unsupported model version " + std::to_string(version));
        }
        model.version = version;
        const auto& fc = doc.at("feature_config");
        model.feature_config.neighborhood = fc.at("neighborhood").get<int>();
        model.feature_config.resample_step = fc.at("resample_step").get<double>();
        const auto& dc = doc.at("dtw_config");
        model.dtw_config.window_fraction = dc.at("window_fraction").get<double>();
        model.dtw_config.auto_widen = dc.at("auto_widen").get<bool>();
        band_width(1, 1, model.dtw_config);

        for (const auto& cls : doc.at("classes")) {
            SymbolClass sc;
            sc.id = cls.at("id").get<std::string>();
            for (const auto& cp : cls.at("codepoints")) {
                char32_t value = 0;
                if (!utf8::parse_uplus(cp.get<std::string>(), value)) {
                    throw ModelFormatError("class '" + sc.id + "' has a malformed code point");
                }
                sc.codepoints.push_back(value);
            }
            if (sc.codepoints.empty()) throw ModelFormatError("class '" + sc.id + "' has no code points");
            if (model.class_index(sc.id) != model.classes.size()) {
                throw ModelFormatError("duplicate class id '" + sc.id + "'");
            }
            std::vector<Series> protos;
            for (const auto& rows : cls.at("prototypes")) {
                Series s{{}, kFeatureChannels};
                for (const auto& row : rows) {
                    if (row.size() != kFeatureChannels) {
                        throw ModelFormatError("class '" + sc.id + "' prototype row is not 8 channels");
                    }
                    for (const auto& v : row) {
                        const double d = v.get<double>();
                        if (!std::isfinite(d)) throw ModelFormatError("non-finite prototype value");
                        s.values.push_back(d);
                    }
                }
                if (s.values.empty()) throw ModelFormatError("class '" + sc.id + "' has an empty prototype");
                protos.push_back(std::move(s));
            }
            if (protos.empty()) throw ModelFormatError("class '" + sc.id + "' has no prototypes");
            model.classes.push_back(std::move(sc));
            model.prototypes.push_back(std::move(protos));
        }
        if (model.classes.empty()) throw ModelFormatError("model has no classes");
        return model;
    } catch (const json::exception& e) {
        throw ModelFormatError(std::string("model schema violation: ") + e.what());
    } catch (const ConfigError& e) {
        throw ModelFormatError(std::string("model configuration invalid: ") + e.what());
    }
}

void save_model(const RecognitionModel& model, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ArgumentError("cannot write model file " + path);
    out << model_to_json(model);
    if (!out) throw ArgumentError("failed writing model file " + path);
}

RecognitionModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ModelFormatError("cannot open model file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return model_from_json(buf.str());
}

}  // namespace grantha
