#pragma once

#include <stdexcept>
#include <string>

namespace sqleq {

/// Syntax failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int col)
        : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + message),
          line_(line), col_(col), detail_(std::move(message)) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& detail() const { return detail_; }

private:
    int line_;
    int col_;
    std::string detail_;
};

/// A construct outside the supported dialect subset. Never a silent misparse.
class UnsupportedConstructError : public std::runtime_error {
public:
    UnsupportedConstructError(std::string construct, int line, int col)
        : std::runtime_error("unsupported construct: " + construct + " (at " +
                             std::to_string(line) + ":" + std::to_string(col) + ")"),
          construct_(std::move(construct)), line_(line), col_(col) {}

    const std::string& construct() const { return construct_; }
    int line() const { return line_; }
    int col() const { return col_; }

private:
    std::string construct_;
    int line_;
    int col_;
};

enum class SchemaErrorKind {
    DanglingReference,  // FK names a missing table or column
    DuplicateName,
    BadPrimaryKey,
    BadValue,  // instance value does not conform to the column type
    ConstraintViolation,
};

class SchemaError : public std::runtime_error {
public:
    SchemaError(SchemaErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    SchemaErrorKind kind() const { return kind_; }

private:
    SchemaErrorKind kind_;
};

/// Thrown by normalize() when the query does not bind cleanly.
class BindError : public std::runtime_error {
public:
    explicit BindError(std::string message) : std::runtime_error(std::move(message)) {}
};

enum class EngineErrorKind {
    TypeMismatch,
    ResourceLimit,
    BadQuery,  // query shape the engine cannot evaluate (should be caught by the binder)
};

class EngineError : public std::runtime_error {
public:
    EngineError(EngineErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    EngineErrorKind kind() const { return kind_; }

private:
    EngineErrorKind kind_;
};

enum class SearchErrorKind {
    InfeasibleSchema,  // FK cycle prevents consistent seeding within bounds
    Exhausted,         // no legal mutation remains
    BoundsTooLarge,    // enumeration estimate exceeds the instance budget
};

class SearchError : public std::runtime_error {
public:
    SearchError(SearchErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    SearchErrorKind kind() const { return kind_; }

private:
    SearchErrorKind kind_;
};

enum class BackendErrorKind {
    Auth,
    RateLimited,
    Transport,
    BadResponse,
};

class BackendError : public std::runtime_error {
public:
    BackendError(BackendErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    BackendErrorKind kind() const { return kind_; }

private:
    BackendErrorKind kind_;
};

/// Dataset entry that cannot be loaded; carries the offending entry index.
class FormatError : public std::runtime_error {
public:
    FormatError(std::string message, long entry_index = -1)
        : std::runtime_error(entry_index >= 0
                                 ? "entry " + std::to_string(entry_index) + ": " + message
                                 : message),
          entry_index_(entry_index) {}

    long entry_index() const { return entry_index_; }

private:
    long entry_index_;
};

class IoError : public std::runtime_error {
public:
    explicit IoError(std::string message) : std::runtime_error(std::move(message)) {}
};

}  // namespace sqleq
