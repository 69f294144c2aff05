#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qset {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A rank cap was exceeded (serial materialization, enumeration, lifting).
class RankGuard : public Error {
public:
    using Error::Error;
};

// Operands live over different seed spaces or incompatible bases.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A label was expected to be a member of the seed basis.
class NotInSeed : public Error {
public:
    using Error::Error;
};

// A generator or basis index is out of range.
class IndexError : public Error {
public:
    using Error::Error;
};

// A bivector commutator left the bivector span. Must never fire.
class ClosureViolation : public Error {
public:
    using Error::Error;
};

// A desk-scale size cap was exceeded.
class SizeGuard : public Error {
public:
    using Error::Error;
};

// Malformed expression or interchange text; offset is the byte position.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace qset
