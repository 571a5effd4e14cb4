#pragma once

#include <stdexcept>
#include <string>

namespace mmbs {

/// Base class for every error raised by the library. `kind()` is a stable
/// machine-readable tag that the CLI copies into its error object.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& m) : Error("dimension-mismatch", m) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& m) : Error("invalid-argument", m) {}
};

/// Input lies outside the family the exact pipeline handles.
struct UnsupportedInput : Error {
    explicit UnsupportedInput(const std::string& m) : Error("unsupported-input", m) {}
};

struct CertificateError : Error {
    explicit CertificateError(const std::string& m) : Error("certificate-error", m) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& m) : Error("parse-error", m) {}
};

/// An internal cross-check between two computation routes disagreed.
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& m) : Error("consistency-error", m) {}
};

}  // namespace mmbs
