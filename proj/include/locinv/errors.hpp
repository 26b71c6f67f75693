#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace locinv {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed arguments: bad vertex ids, coloring of the wrong length, ...
class InputError : public Error {
public:
    using Error::Error;
};

// An operation was called outside its domain (e.g. a tree that is not odd).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// The requested color change cannot be realized by any word, e.g. an
// isolated vertex would have to change color.
class UnsatisfiableError : public Error {
public:
    using Error::Error;
};

// State space or size cap exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace locinv
