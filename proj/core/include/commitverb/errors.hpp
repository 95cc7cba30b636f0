#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commitverb {

/// Caller violated an operation's precondition (bad argument, out-of-range count).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A file could not be opened, read, or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed record in a line-oriented corpus file.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number of the offending record.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Model file is corrupt, incomplete, or written by an incompatible format version.
class ModelFormatError : public std::runtime_error {
public:
    ModelFormatError(std::string field, const std::string& what)
        : std::runtime_error(what), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

class ModelVersionError : public ModelFormatError {
public:
    using ModelFormatError::ModelFormatError;
};

/// Repository could not be read.
class IngestError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Required external tool (git) is not available.
class EnvironmentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace commitverb
