#ifndef REPCA_ERRORS_HPP
#define REPCA_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace repca {

// Base class for all errors raised by the library. `kind` is a stable
// machine-readable tag used by the CLI error JSON.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& detail)
        : std::runtime_error(detail), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

// Structurally malformed input: bad JSON, schema violation, bad flag value.
// Maps to CLI exit code 2.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& detail)
        : Error("validation", detail) {}
};

// Mathematically invalid request on well-formed data: singular matrix,
// relation violation, quiver mismatch, ... Maps to CLI exit code 3.
class PreconditionError : public Error {
public:
    PreconditionError(std::string kind, const std::string& detail)
        : Error(std::move(kind), detail) {}
};

class RelationViolated : public PreconditionError {
public:
    RelationViolated(std::size_t index, const std::string& detail)
        : PreconditionError("relation_violated", detail), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

} // namespace repca

#endif
