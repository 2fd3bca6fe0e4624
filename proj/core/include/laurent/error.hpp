#pragma once

#include <stdexcept>
#include <string>

namespace laurent {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;

    /// Short stable identifier, used by the CLI's machine-readable error prefix.
    [[nodiscard]] virtual const char* code() const noexcept { return "error"; }
};

class InvalidInput : public Error {
public:
    using Error::Error;
    [[nodiscard]] const char* code() const noexcept override { return "invalid-input"; }
};

/// Raised when a plan is requested for a blocklength outside N ≡ 0 (mod 4).
class UnsupportedLength : public Error {
public:
    explicit UnsupportedLength(long long n);
    [[nodiscard]] const char* code() const noexcept override { return "unsupported-length"; }
    [[nodiscard]] long long length() const noexcept { return length_; }

private:
    long long length_;
};

/// Throws UnsupportedLength unless n >= 4 and n ≡ 0 (mod 4).
void require_plan_length(long long n);

}  // namespace laurent
