// grantha: train, recognize, convert, evaluate and serve.
//
// Exit status: 0 success, 1 usage error, 2 data or model error.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "grantha/classifier.hpp"
#include "grantha/conversion.hpp"
#include "grantha/error.hpp"
#include "grantha/evaluation.hpp"
#include "grantha/model_io.hpp"
#include "grantha/service.hpp"
#include "grantha/unipen.hpp"
#include "grantha/utf8.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

std::string shortest(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw grantha::ArgumentError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

grantha::Lexicon lexicon_or_empty(const std::string& path) {
    return path.empty() ? grantha::Lexicon() : grantha::Lexicon::load(path);
}

std::string default_model() {
    const char* env = std::getenv("GRANTHA_INK_MODEL");
    return env ? env : "";
}

void require_model(const std::string& path) {
    if (path.empty()) throw CLI::RequiredError("--model (or GRANTHA_INK_MODEL)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Online Grantha handwriting recognition and Grantha to Malayalam conversion"};
    app.require_subcommand(1);

    std::string model_path = default_model();
    std::string data_path, out_path, input_path, lexicon_path, text, variant = "dtw", bind = "127.0.0.1:8080";
    std::size_t top = 5, k = 3, prototypes = 4;
    double window = 0.1, resample_step = 0.0;
    bool as_json = false, as_csv = false;

    auto* train = app.add_subcommand("train", "Train a model from UNIPEN files");
    train->add_option("--data", data_path, "UNIPEN file or directory")->required();
    train->add_option("--out", out_path, "Model file to write")->required();
    train->add_option("--prototypes", prototypes, "Prototypes per class")->check(CLI::PositiveNumber);
    train->add_option("--window", window, "Sakoe-Chiba band as a fraction of the longer sequence")
        ->check(CLI::Range(0.0, 1.0));
    train->add_option("--resample-step", resample_step, "Arc-length resampling step, 0 disables")
        ->check(CLI::NonNegativeNumber);

    auto* recognize = app.add_subcommand("recognize", "Recognize the samples of a UNIPEN file");
    recognize->add_option("--model", model_path, "Model file (default: $GRANTHA_INK_MODEL)");
    recognize->add_option("--input", input_path, "UNIPEN file")->required();
    recognize->add_option("--top", top, "Candidates to print")->check(CLI::PositiveNumber);
    recognize->add_option("--k", k, "Nearest prototypes that vote")->check(CLI::PositiveNumber);
    recognize->add_flag("--json", as_json, "Print the /recognize response shape, one line per sample");

    auto* convert = app.add_subcommand("convert", "Convert Grantha text to old and new Malayalam script");
    auto* text_opt = convert->add_option("--text", text, "Grantha text");
    auto* input_opt = convert->add_option("--input", input_path, "UTF-8 file with Grantha text");
    text_opt->excludes(input_opt);
    convert->add_option("--lexicon", lexicon_path, "Word list for intellisense");

    auto* eval = app.add_subcommand("eval", "Evaluate a model on labeled UNIPEN data");
    eval->add_option("--model", model_path, "Model file (default: $GRANTHA_INK_MODEL)");
    eval->add_option("--data", data_path, "UNIPEN file or directory")->required();
    eval->add_option("--k", k, "Nearest prototypes that vote")->check(CLI::PositiveNumber);
    eval->add_option("--variant", variant, "dtw or euclidean")->check(CLI::IsMember({"dtw", "euclidean", "euclidean_resampled"}));
    auto* json_flag = eval->add_flag("--json", as_json, "Print the report as JSON");
    eval->add_flag("--csv", as_csv, "Print the confusion matrix as CSV")->excludes(json_flag);

    auto* serve = app.add_subcommand("serve", "Run the HTTP recognition service");
    serve->add_option("--model", model_path, "Model file (default: $GRANTHA_INK_MODEL)");
    serve->add_option("--lexicon", lexicon_path, "Word list for intellisense and suggestions");
    serve->add_option("--bind", bind, "host:port to listen on");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*train) {
            grantha::TrainOptions options;
            options.prototypes_per_class = prototypes;
            options.dtw.window_fraction = window;
            options.features.resample_step = resample_step;
            const auto data = grantha::load_unipen_path(data_path);
            const auto model = grantha::train(data, options);
            grantha::save_model(model, out_path);
            std::cout << "trained " << model.classes.size() << " classes, " << model.prototype_count()
                      << " prototypes from " << data.size() << " samples -> " << out_path << '\n';
        } else if (*recognize) {
            require_model(model_path);
            const auto model = grantha::load_model(model_path);
            const auto samples = grantha::parse_unipen(read_file(input_path));
            for (std::size_t s = 0; s < samples.size(); ++s) {
                const auto candidates = grantha::recognize(model, samples[s], top, k);
                if (as_json) {
                    std::cout << "{\"id\":" << s << ",\"candidates\":" << grantha::candidates_to_json(candidates)
                              << "}\n";
                    continue;
                }
                if (samples.size() > 1) std::cout << "# sample " << s << '\n';
                for (std::size_t r = 0; r < candidates.size(); ++r) {
                    std::cout << r + 1 << ' ' << candidates[r].class_id << ' ' << shortest(candidates[r].distance)
                              << ' ' << shortest(candidates[r].confidence) << '\n';
                }
            }
        } else if (*convert) {
            if (text.empty() && input_path.empty()) throw CLI::RequiredError("--text or --input");
            const std::string source = input_path.empty() ? text : read_file(input_path);
            const auto result =
                grantha::convert_text(grantha::utf8::decode(source), lexicon_or_empty(lexicon_path));
            std::cout << grantha::utf8::encode(result.old_script) << '\n'
                      << grantha::utf8::encode(result.new_script) << '\n';
            for (const auto& n : result.notes) {
                std::cout << (n.severity == grantha::ConversionNote::Severity::warning ? "warning" : "note") << " ["
                          << n.code << "] " << n.message << '\n';
            }
        } else if (*eval) {
            require_model(model_path);
            const auto model = grantha::load_model(model_path);
            const auto test = grantha::load_unipen_path(data_path);
            grantha::EvalOptions options;
            options.k = k;
            options.variant = grantha::parse_metric_variant(variant);
            const auto result = grantha::evaluate(model, test, options);
            if (as_csv) {
                std::cout << result.matrix.to_csv();
            } else if (as_json) {
                std::cout << result.report.to_json();
            } else {
                std::cout << result.report.to_text();
            }
        } else if (*serve) {
            require_model(model_path);
            const auto colon = bind.rfind(':');
            int port = -1;
            if (colon != std::string::npos) {
                const auto* b = bind.data() + colon + 1;
                const auto r = std::from_chars(b, bind.data() + bind.size(), port);
                if (r.ec != std::errc() || r.ptr != bind.data() + bind.size()) port = -1;
            }
            if (port < 0 || port > 65535) throw CLI::ValidationError("--bind", "expected host:port");
            const grantha::Service service(grantha::load_model(model_path), lexicon_or_empty(lexicon_path));
            std::cerr << "serving on " << bind << '\n';
            grantha::serve(service, bind.substr(0, colon), port);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return 0;
}
