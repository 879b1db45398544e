#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace grantha {

/// Base of every error raised by the library. `code()` is a stable,
/// machine-readable identifier used by the CLI and the HTTP service.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error("parse_error", "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class StructuralError : public Error {
public:
    StructuralError(std::size_t line, const std::string& message)
        : Error("structural_error", "line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DegenerateInputError : public Error {
public:
    explicit DegenerateInputError(const std::string& message) : Error("degenerate_input", message) {}
};

class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& message) : Error("invalid_argument", message) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& message) : Error("invalid_config", message) {}
};

class TrainingError : public Error {
public:
    explicit TrainingError(const std::string& message) : Error("training_error", message) {}
};

class RecognitionError : public Error {
public:
    explicit RecognitionError(const std::string& message) : Error("recognition_error", message) {}
};

class ModelFormatError : public Error {
public:
    explicit ModelFormatError(const std::string& message) : Error("model_format", message) {}
};

class EvaluationError : public Error {
public:
    explicit EvaluationError(const std::string& message) : Error("evaluation_error", message) {}
};

class TableError : public Error {
public:
    TableError(const std::string& source, std::size_t line, const std::string& message)
        : Error("table_error", source + ":" + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class MalformedWordError : public Error {
public:
    explicit MalformedWordError(const std::string& message) : Error("malformed_word", message) {}
};

class UnknownConjunctError : public Error {
public:
    explicit UnknownConjunctError(const std::string& id)
        : Error("unknown_conjunct", "unknown conjunct: " + id), id_(id) {}

    const std::string& id() const noexcept { return id_; }

private:
    std::string id_;
};

}  // namespace grantha
