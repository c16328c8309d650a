#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ttpx {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid or inconsistent configuration (bad weights, tau out of range, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Errors raised while loading or querying a technique corpus.
class CorpusError : public Error {
public:
    enum class Kind {
        file_not_found,
        malformed_line,
        duplicate_id,
        sub_technique,
        unknown_id,
    };

    CorpusError(Kind kind, std::string message, std::size_t line_no = 0, std::string ttp_id = {})
        : Error(std::move(message)), kind(kind), line_no(line_no), ttp_id(std::move(ttp_id)) {}

    Kind kind;
    std::size_t line_no;  // 1-based, 0 when not line-scoped
    std::string ttp_id;
};

/// A technique ID string that is neither TXXXX nor TXXXX.YYY.
class InvalidIdFormat : public Error {
public:
    explicit InvalidIdFormat(std::string raw)
        : Error("invalid technique id format: \"" + raw + "\""), raw_id(std::move(raw)) {}

    std::string raw_id;
};

class EmptyDocument : public Error {
public:
    EmptyDocument() : Error("document contains no non-whitespace text") {}
    using Error::Error;
};

class EmptyBehavior : public Error {
public:
    EmptyBehavior() : Error("behavior text normalizes to zero tokens") {}
    using Error::Error;
};

/// Transport-level failures talking to a chat backend.
class BackendError : public Error {
public:
    enum class Kind { timeout, http_error, unavailable };

    BackendError(Kind kind, std::string message, int status = 0)
        : Error(std::move(message)), kind(kind), status(status) {}

    Kind kind;
    int status;  // HTTP status for Kind::http_error, otherwise 0
};

/// A backend response that is not the strict JSON a stage demands.
class ParseError : public Error {
public:
    enum class Kind { not_json, schema_violation };

    ParseError(Kind kind, std::string field, std::string reason)
        : Error(kind == Kind::not_json ? "not JSON: " + reason
                                       : "schema violation at " + field + ": " + reason),
          kind(kind),
          field(std::move(field)),
          reason(std::move(reason)) {}

    Kind kind;
    std::string field;
    std::string reason;
};

/// All completion attempts for one stage call failed to parse.
class StageParseFailure : public Error {
public:
    StageParseFailure(int attempt_count, std::string last_error, std::vector<std::string> raw_attempts)
        : Error("stage output unparseable after " + std::to_string(attempt_count) +
                " attempt(s): " + last_error),
          attempt_count(attempt_count),
          last_error(std::move(last_error)),
          raw_attempts(std::move(raw_attempts)) {}

    int attempt_count;
    std::string last_error;
    std::vector<std::string> raw_attempts;
};

/// Errors raised by the evaluation module.
class EvalError : public Error {
public:
    enum class Kind { empty_dataset, missing_scores, sub_technique_in_input, malformed_line };

    EvalError(Kind kind, std::string message, std::size_t line_no = 0)
        : Error(std::move(message)), kind(kind), line_no(line_no) {}

    Kind kind;
    std::size_t line_no;
};

}  // namespace ttpx
