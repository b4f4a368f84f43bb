#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omega {

// Bad input or a violated precondition: the caller can fix it. CLI exit 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t position)
        : ValidationError(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// The library itself gave up (guard tripped, broken invariant). CLI exit 2.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

class SnfOverflowError : public InternalError {
public:
    explicit SnfOverflowError(const std::string& what) : InternalError(what) {}
};

}  // namespace omega
