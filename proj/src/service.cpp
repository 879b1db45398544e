#include "grantha/service.hpp"

#include <cmath>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "grantha/conversion.hpp"
#include "grantha/error.hpp"
#include "grantha/utf8.hpp"

namespace grantha {

namespace {

using nlohmann::json;

struct RequestError : Error {
    RequestError(int status, std::string code, const std::string& message)
        : Error(std::move(code), message), status(status) {}
    int status;
};

ServiceResponse reply(int status, const json& body) { return {status, body.dump()}; }

ServiceResponse fail(int status, const json& id, const std::string& code, const std::string& message) {
    return reply(status, {{"id", id}, {"error", {{"code", code}, {"message", message}}}});
}

json parse_body(std::string_view body) {
    json doc = json::parse(body, nullptr, false);
    if (doc.is_discarded()) throw RequestError(400, "malformed_json", "request body is not valid JSON");
    if (!doc.is_object()) throw RequestError(400, "malformed_request", "request body must be a JSON object");
    return doc;
}

json request_id(const json& doc) {
    const auto it = doc.find("id");
    return it == doc.end() ? json() : *it;
}

std::size_t positive_count(const json& doc, const char* key, std::size_t fallback) {
    const auto it = doc.find(key);
    if (it == doc.end()) return fallback;
    if (!it->is_number_integer() || it->get<long long>() < 1) {
        throw RequestError(400, "malformed_request", std::string("'") + key + "' must be a positive integer");
    }
    return it->get<std::size_t>();
}

double number(const json& v) {
    if (!v.is_number()) throw RequestError(400, "malformed_request", "ink coordinates must be numbers");
    return v.get<double>();
}

InkSample ink_from_json(const json& doc) {
    const auto it = doc.find("strokes");
    if (it == doc.end() || !it->is_array()) {
        throw RequestError(400, "malformed_request", "'strokes' must be an array of strokes");
    }
    std::size_t total = 0;
    for (const auto& s : *it) total += s.is_array() ? s.size() : 0;
    if (total > kMaxRequestPoints) {
        throw RequestError(413, "ink_too_large",
                           std::to_string(total) + " points exceed the limit of " + std::to_string(kMaxRequestPoints));
    }
    InkSample sample;
    std::size_t index = 0;
    for (const auto& s : *it) {
        if (!s.is_array()) throw RequestError(400, "malformed_request", "each stroke must be an array of points");
        Stroke stroke;
        for (const auto& p : s) {
            if (!p.is_array() || p.size() < 2 || p.size() > 3) {
                throw RequestError(400, "malformed_request", "each point must be [x, y] or [x, y, t]");
            }
            const double t = p.size() == 3 ? number(p[2]) : static_cast<double>(index);
            stroke.points.push_back({number(p[0]), number(p[1]), t});
            ++index;
        }
        sample.strokes.push_back(std::move(stroke));
    }
    if (const auto problems = validate(sample); !problems.empty()) {
        throw RequestError(400, "invalid_ink", problems.front());
    }
    return sample;
}

json candidates_json(const std::vector<Candidate>& candidates) {
    json list = json::array();
    for (const auto& c : candidates) {
        json cps = json::array();
        for (char32_t cp : c.codepoints) cps.push_back(utf8::to_uplus(cp));
        list.push_back({{"class_id", c.class_id},
                        {"codepoints", cps},
                        {"text", utf8::encode(c.codepoints)},
                        {"distance", c.distance},
                        {"confidence", c.confidence}});
    }
    return list;
}

// Runs `body` and maps library errors onto HTTP statuses.
template <class Fn>
ServiceResponse guarded(const json& id, Fn&& body) {
    try {
        return body();
    } catch (const RequestError& e) {
        return fail(e.status, id, e.code(), e.what());
    } catch (const Error& e) {
        const bool client = e.code() == "invalid_argument" || e.code() == "malformed_word" ||
                            e.code() == "unknown_conjunct" || e.code() == "recognition_error" ||
                            e.code() == "degenerate_input";
        return fail(client ? 422 : 500, id, e.code(), e.what());
    } catch (const std::exception& e) {
        return fail(500, id, "internal_error", e.what());
    }
}

}  // namespace

std::string candidates_to_json(const std::vector<Candidate>& candidates) { return candidates_json(candidates).dump(); }

Service::Service(RecognitionModel model, Lexicon lexicon, const ScriptTables& tables)
    : model_(std::move(model)), lexicon_(std::move(lexicon)), tables_(tables) {}

ServiceResponse Service::recognize(std::string_view body) const {
    json id;
    return guarded(id, [&] {
        const json doc = parse_body(body);
        id = request_id(doc);
        const auto top_n = positive_count(doc, "top_n", 5);
        const auto k = positive_count(doc, "k", 3);
        const InkSample sample = ink_from_json(doc);
        const auto candidates = grantha::recognize(model_, sample, top_n, k);
        return reply(200, {{"id", id}, {"candidates", candidates_json(candidates)}});
    });
}

ServiceResponse Service::convert(std::string_view body) const {
    json id;
    return guarded(id, [&] {
        const json doc = parse_body(body);
        id = request_id(doc);
        const auto it = doc.find("grantha");
        if (it == doc.end() || !it->is_string()) {
            throw RequestError(400, "malformed_request", "'grantha' must be a string");
        }
        const auto result = convert_text(utf8::decode(it->get<std::string>()), lexicon_, tables_);
        json notes = json::array();
        for (const auto& n : result.notes) {
            notes.push_back({{"severity", n.severity == ConversionNote::Severity::warning ? "warning" : "info"},
                             {"code", n.code},
                             {"message", n.message}});
        }
        return reply(200, {{"id", id},
                           {"old_script", utf8::encode(result.old_script)},
                           {"new_script", utf8::encode(result.new_script)},
                           {"notes", notes}});
    });
}

ServiceResponse Service::suggest(std::optional<std::string> fragment, std::optional<std::string> limit,
                                 std::optional<std::string> id) const {
    const json jid = id ? json(*id) : json();
    return guarded(jid, [&] {
        if (!fragment) throw RequestError(400, "malformed_request", "missing 'fragment' parameter");
        std::size_t n = 10;
        if (limit) {
            std::size_t used = 0;
            long long v = 0;
            try {
                v = std::stoll(*limit, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != limit->size() || v < 1) {
                throw RequestError(400, "malformed_request", "'limit' must be a positive integer");
            }
            n = static_cast<std::size_t>(v);
        }
        json words = json::array();
        for (const auto& w : lexicon_.suggest(utf8::decode(*fragment), n)) words.push_back(utf8::encode(w));
        return reply(200, {{"id", jid}, {"words", words}});
    });
}

namespace {

void mount(httplib::Server& server, const Service& service) {
    auto send = [](httplib::Response& res, const ServiceResponse& r) {
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    server.Post("/recognize", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.recognize(req.body));
    });
    server.Post("/convert", [&service, send](const httplib::Request& req, httplib::Response& res) {
        send(res, service.convert(req.body));
    });
    server.Get("/suggest", [&service, send](const httplib::Request& req, httplib::Response& res) {
        auto param = [&](const char* key) -> std::optional<std::string> {
            if (!req.has_param(key)) return std::nullopt;
            return req.get_param_value(key);
        };
        send(res, service.suggest(param("fragment"), param("limit"), param("id")));
    });
    // The scribe UI may be served from another origin.
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    server.Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
    server.set_payload_max_length(64u << 20);
}

}  // namespace

struct HttpServer::Impl {
    httplib::Server server;
    int port = 0;
    std::thread thread;
};

HttpServer::HttpServer(const Service& service, const std::string& host, int port) : impl_(std::make_unique<Impl>()) {
    mount(impl_->server, service);
    impl_->port = port == 0 ? impl_->server.bind_to_any_port(host) : impl_->server.bind_to_port(host, port) ? port : -1;
    if (impl_->port < 0) throw ArgumentError("cannot bind " + host + ":" + std::to_string(port));
    impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
    impl_->server.wait_until_ready();
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::port() const noexcept { return impl_->port; }

void HttpServer::stop() {
    if (impl_->thread.joinable()) {
        impl_->server.stop();
        impl_->thread.join();
    }
}

void serve(const Service& service, const std::string& host, int port) {
    httplib::Server server;
    mount(server, service);
    if (!server.bind_to_port(host, port)) throw ArgumentError("cannot bind " + host + ":" + std::to_string(port));
    server.listen_after_bind();
}

}  // namespace grantha
