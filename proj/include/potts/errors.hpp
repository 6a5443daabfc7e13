#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace potts {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An edge id or ground element that does not belong to the host object.
class InvalidSubset : public Error {
public:
    using Error::Error;
};

/// Malformed multigraph (endpoint out of range, duplicate edge id, ...).
class InvalidGraph : public Error {
public:
    using Error::Error;
};

class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// A weight with zero coefficient where a division by it is required.
class DegenerateWeight : public Error {
public:
    using Error::Error;
};

/// A weight assignment that does not cover every edge / ground element.
class IncompleteAssignment : public Error {
public:
    using Error::Error;
};

/// Exponential work refused because the input exceeds a configured cap.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// A rank function that is not a matroid rank function.
class AxiomViolation : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace potts
