#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace entryrisk {

/// Input outside the domain of an operation (bad factor range, CS <= 0, lg of a non-positive value, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed text input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& reason, const std::string& source = {})
        : std::runtime_error(compose(line, reason, source))
        , line_(line)
        , reason_(reason)
        , source_(source) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] const std::string& reason() const noexcept { return reason_; }
    [[nodiscard]] const std::string& source() const noexcept { return source_; }

private:
    static std::string compose(std::size_t line, const std::string& reason, const std::string& source) {
        if (!source.empty()) {
            return source + ":" + (line > 0 ? std::to_string(line) + ":" : std::string{}) + " " + reason;
        }
        return line > 0 ? "line " + std::to_string(line) + ": " + reason : reason;
    }

    std::size_t line_;
    std::string reason_;
    std::string source_;
};

class DuplicateDate : public ParseError {
public:
    using ParseError::ParseError;
};

/// Scenario configuration that fails structural validation.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingQuote : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ScheduleGap : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CoverageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientData : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace entryrisk
