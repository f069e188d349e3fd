#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbn {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
    Syntax,
    ConstantUpdate,
    IndexOutOfRange,
    DuplicateDefinition,
    MissingDefinition,
    MixedOperators,
    Empty,
};

const char* to_string(ParseErrorKind kind);

/// Malformed network description. `line()` is 1-based, 0 when the error is not tied to a line.
class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, std::size_t line, const std::string& what);

    ParseErrorKind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    ParseErrorKind kind_;
    std::size_t line_;
};

class MalformedGraph : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class UnknownNode : public Error {
public:
    using Error::Error;
};

class NotControllable : public Error {
public:
    using Error::Error;
};

class NotDag : public Error {
public:
    using Error::Error;
};

/// A size guard (oracle state bits, dominating-set vertices, exact-search candidates) was hit.
class TooLarge : public Error {
public:
    using Error::Error;
};

class LayeringViolation : public Error {
public:
    using Error::Error;
};

/// The exact minimal-control search ran out of its test budget. Carries the
/// best feasible control set known at that point (0-based variable indices).
class SearchBudgetExceeded : public Error {
public:
    SearchBudgetExceeded(const std::string& what, std::vector<std::uint32_t> best_known)
        : Error(what), best_known_(std::move(best_known)) {}

    const std::vector<std::uint32_t>& best_known() const { return best_known_; }

private:
    std::vector<std::uint32_t> best_known_;
};

} // namespace cbn
