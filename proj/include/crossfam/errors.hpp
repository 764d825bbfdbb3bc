#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crossfam {

// Bad arguments: out-of-range parameters, elements outside the ground set,
// malformed inputs. Maps to the usage exit code in the CLI.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation's documented precondition does not hold for the given input
// (family not compressed, families not cross-intersecting, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The requested enumeration would exceed the node budget or a hard size cap.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A checked mathematical claim failed on a concrete instance. This never
// happens for correct inputs; it signals an implementation bug.
class VerificationFailure : public std::runtime_error {
public:
    enum class Kind { BoundViolation, UniquenessViolation, IdentityViolation };

    VerificationFailure(Kind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

// Family text parse failure; line is 1-based, 0 when not tied to a line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace crossfam
