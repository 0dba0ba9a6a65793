#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primelab {

/// Input outside the supported numeric range (sieve caps, factorization bounds).
class RangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Argument outside the mathematical domain of a function (li(x) for x < 2, sigma <= 1, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Structurally invalid argument: composite where a prime is needed, gcd(a, q) > 1, ...
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A documented precondition relating several arguments failed (e.g. x <= N^2).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A search ran past the configured sieve bound without finding its target.
class ResourceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Well-formed input whose contents break an ordering or structural rule.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A mathematical invariant the code relies on was observed to fail. Never expected.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace primelab
