#ifndef DIELFET_ERRORS_HPP
#define DIELFET_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dielfet {

/// Base class for all library errors. `category()` is the machine-parsable
/// prefix used by the CLI error stream (`<category>: <message>`).
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* category() const noexcept { return "error"; }
};

/// Rejected input: precondition or invariant violation (CLI exit code 2).
class validation_error : public error {
public:
    using error::error;
    const char* category() const noexcept override { return "validation"; }
};

/// Input is formally valid but outside the regime where the effective
/// theory holds, e.g. energies at or beyond the cutoff (CLI exit code 2).
class validity_error : public error {
public:
    using error::error;
    const char* category() const noexcept override { return "validity"; }
};

/// An iterative scheme failed to converge (CLI exit code 3).
class numerical_error : public error {
public:
    using error::error;
    const char* category() const noexcept override { return "numerical"; }
};

/// Malformed input file; message names the offending row/line.
class parse_error : public validation_error {
public:
    using validation_error::validation_error;
};

} // namespace dielfet

#endif
