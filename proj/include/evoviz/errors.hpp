#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evoviz {

// Caller broke a precondition (sizes, ranges, empty input).
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A decision variable outside the [0,1] box.
class DomainError : public std::domain_error {
public:
    DomainError(const std::string& what, std::size_t index)
        : std::domain_error(what), index_(index) {}

    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Invalid user-supplied configuration (unknown names, infeasible settings).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact hypervolume requested for more objectives than supported.
class UnsupportedDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Base for errors raised while parsing a data file; carries the 1-based line.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::size_t line)
        : std::runtime_error(what), line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class VersionMismatch : public FormatError {
public:
    using FormatError::FormatError;
};

class MalformedLine : public FormatError {
public:
    using FormatError::FormatError;
};

class InvariantViolation : public FormatError {
public:
    using FormatError::FormatError;
};

}  // namespace evoviz
