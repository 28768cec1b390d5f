#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braid3 {

/// Raised by the word parsers; carries the byte offset of the offending token.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::string what, std::size_t offset)
        : std::runtime_error(std::move(what)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class EmptyWordError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ZeroInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotApplicableError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class PoleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NewtonDivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnsupportedCombinationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class BlockUnavailableError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GridDegenerateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace braid3
