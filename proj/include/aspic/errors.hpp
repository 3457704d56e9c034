#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace aspic {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text. Line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, std::string token, const std::string& message)
        : Error(format(line, column, token, message)), line_(line), column_(column), token_(std::move(token)) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& token() const { return token_; }

private:
    static std::string format(std::size_t line, std::size_t column, const std::string& token,
                              const std::string& message) {
        std::string out = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        if (!token.empty())
            out += " (at '" + token + "')";
        return out;
    }

    std::size_t line_;
    std::size_t column_;
    std::string token_;
};

/// Well-formed syntax that violates an argumentation-system invariant.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& message) : Error(message) {}
    ValidationError(std::size_t line, std::size_t column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          position_(std::pair{line, column}) {}

    std::optional<std::pair<std::size_t, std::size_t>> position() const { return position_; }

private:
    std::optional<std::pair<std::size_t, std::size_t>> position_;
};

/// A configured size bound was hit. `limit()` names the bound, `value()` its setting.
class LimitExceeded : public Error {
public:
    LimitExceeded(std::string limit, std::size_t value, const std::string& message)
        : Error(message), limit_(std::move(limit)), value_(value) {}

    const std::string& limit() const { return limit_; }
    std::size_t value() const { return value_; }

private:
    std::string limit_;
    std::size_t value_;
};

class SearchLimitExceeded : public LimitExceeded {
public:
    using LimitExceeded::LimitExceeded;
};

class InconsistentSystem : public Error {
public:
    using Error::Error;
};

class GenerationFailed : public Error {
public:
    using Error::Error;
};

} // namespace aspic
