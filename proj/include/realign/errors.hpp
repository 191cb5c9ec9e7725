#ifndef REALIGN_ERRORS_HPP
#define REALIGN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace realignment {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Matrix has the wrong shape for the requested operation.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Dimension parameter out of range or dimension product overflow.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Matrix fails a symmetry requirement (Hermiticity beyond tolerance).
class HermiticityError : public Error {
public:
    using Error::Error;
};

// Family parameter outside its admissible domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Invalid call arguments (bad index, shots = 0, inverted bracket, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Operation not defined for the given signature / criterion combination.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

// Internal numerical-consistency contract failed (should not happen on
// valid inputs).
class ContractError : public Error {
public:
    using Error::Error;
};

// State file could not be parsed.
class ParseError : public Error {
public:
    using Error::Error;
};

// Density-matrix validation failure; the kind distinguishes which
// invariant was violated.
class ValidationError : public Error {
public:
    enum class Kind { Shape, Hermiticity, Trace, Positivity };

    ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

} // namespace realignment

#endif
