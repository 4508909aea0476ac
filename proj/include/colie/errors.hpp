#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colie {

/// Arithmetic between values attached to different fields (or jet orders).
class FieldMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// A caller violated a documented precondition (as opposed to a verified
/// property being falsified; verification suites report the two differently).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Text input rejected by a parser; `offset` is the byte position of the
/// first offending character.
class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace colie
