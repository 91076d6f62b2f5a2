#ifndef TROPCONE_ERRORS_HPP
#define TROPCONE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tropcone {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Dimension or shape mismatch between operands.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& what) : Error(what) {}
};

// Value outside the domain of an operation (e.g. negating -inf).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A documented operation precondition does not hold (non-finite entries
// where finiteness is required, non-canonical half-space, ...).
class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

// Degenerate geometric input (e.g. dehomogenizing a cone with no point part).
class DegenerateError : public Error {
public:
    explicit DegenerateError(const std::string& what) : Error(what) {}
};

// An enumeration exceeded its candidate budget.
class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(what) {}
};

// Malformed input document.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace tropcone

#endif
