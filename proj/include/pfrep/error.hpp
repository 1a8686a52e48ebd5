#ifndef PFREP_ERROR_HPP
#define PFREP_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pfrep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidRing : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class DegreeError : public Error {
public:
    using Error::Error;
};

class UnsupportedDegree : public Error {
public:
    using Error::Error;
};

class AmbiguousDegree : public Error {
public:
    using Error::Error;
};

class RequiresSymbolicRing : public Error {
public:
    using Error::Error;
};

/// Malformed document (JSON structure, missing fields).
class FormatError : public Error {
public:
    using Error::Error;
};

/// Syntax error in element or polynomial text. `offset` is the 0-based byte
/// position where parsing failed.
class ParseError : public Error {
public:
    ParseError(std::string msg, std::size_t offset)
        : Error(msg + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace pfrep

#endif
