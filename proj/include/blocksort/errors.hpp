#pragma once

#include <stdexcept>
#include <string>

namespace blocksort {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input (permutation text, flags, files).
class InputError : public Error {
public:
    using Error::Error;
};

/// A block move that does not fit the permutation it is applied to.
class InvalidMoveError : public Error {
public:
    using Error::Error;
};

/// Requested computation exceeds a configured size cap.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

/// An internal precondition was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

}  // namespace blocksort
