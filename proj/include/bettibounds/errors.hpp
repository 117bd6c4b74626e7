#ifndef BETTIBOUNDS_ERRORS_HPP
#define BETTIBOUNDS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bb {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operands live over different variable counts.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

/// A parameter is outside its documented range.
struct ArgumentError : Error {
    explicit ArgumentError(const std::string& msg) : Error(msg) {}
};

/// A documented precondition does not hold for the given input.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

/// The operation is undefined on this input (unit monomial, zero table, ...).
struct UndefinedInputError : Error {
    explicit UndefinedInputError(const std::string& msg) : Error(msg) {}
};

/// A configured resource cap was exceeded.
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

/// A caller-supplied callback violated its contract.
struct ContractError : Error {
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

} // namespace bb

#endif
