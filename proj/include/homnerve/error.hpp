#ifndef HOMNERVE_ERROR_HPP
#define HOMNERVE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace homnerve {

/// Input violates an operation's precondition (bad facet, unknown vertex,
/// non-prime field order, cover whose union is not the ambient, ...).
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// A file or stream could not be decoded into one of the JSON formats.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed (e.g. boundary of a boundary is nonzero).
/// Always a bug in this library, never a property of the input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace homnerve

#endif
