#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "grantha/classifier.hpp"
#include "grantha/lexicon.hpp"
#include "grantha/script.hpp"

namespace grantha {

/// Points accepted per /recognize request; larger ink is rejected with 413.
inline constexpr std::size_t kMaxRequestPoints = 100000;

struct ServiceResponse {
    int status = 200;
    std::string body;
};

/// Request handlers of the recognition service. Every handler is a pure
/// function of (model, lexicon, request) and safe to call concurrently.
///
///   POST /recognize {"id", "strokes": [[[x, y, t], ...], ...], "top_n", "k"}
///     -> {"id", "candidates": [{"class_id", "codepoints", "text", "distance", "confidence"}]}
///   POST /convert {"id", "grantha"} -> {"id", "old_script", "new_script", "notes"}
///   GET /suggest?fragment=&limit=&id= -> {"id", "words"}
///
/// Failures answer {"id", "error": {"code", "message"}}.
class Service {
public:
    Service(RecognitionModel model, Lexicon lexicon, const ScriptTables& tables = ScriptTables::builtin());

    ServiceResponse recognize(std::string_view body) const;
    ServiceResponse convert(std::string_view body) const;
    ServiceResponse suggest(std::optional<std::string> fragment, std::optional<std::string> limit,
                            std::optional<std::string> id) const;

    const RecognitionModel& model() const noexcept { return model_; }

private:
    RecognitionModel model_;
    Lexicon lexicon_;
    const ScriptTables& tables_;
};

/// Candidate list in the /recognize wire shape (without the id).
std::string candidates_to_json(const std::vector<Candidate>& candidates);

/// HTTP front end for a Service. The server runs on a background thread
/// until stop() or destruction.
class HttpServer {
public:
    /// Binds `host:port`; port 0 picks a free port. Throws ArgumentError when
    /// the address cannot be bound.
    HttpServer(const Service& service, const std::string& host, int port);
    ~HttpServer();
    HttpServer(const HttpServer&) = delete;
    HttpServer& operator=(const HttpServer&) = delete;

    int port() const noexcept;
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

/// Binds and serves on the calling thread until the process is stopped.
void serve(const Service& service, const std::string& host, int port);

}  // namespace grantha
