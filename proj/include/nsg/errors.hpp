#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gcd of the generators is not 1, so the complement is infinite.
struct NotNumerical : Error {
    using Error::Error;
};

struct EmptyGenerators : Error {
    using Error::Error;
};

struct InvalidArgument : Error {
    using Error::Error;
};

// The operation is only defined for S != N_0 (embedding dimension >= 2).
struct RequiresProperSemigroup : Error {
    using Error::Error;
};

// The given integer is not a nonzero element of the semigroup.
struct NotAMember : Error {
    using Error::Error;
};

// The brute-force search ran past its proven cap; indicates a bug.
struct CapExceeded : Error {
    using Error::Error;
};

struct UnknownProperty : Error {
    using Error::Error;
};

struct InvalidSpec : Error {
    using Error::Error;
};

// A table would exceed the configured bound (see NSG_TABLE_LIMIT).
struct TableLimitExceeded : Error {
    using Error::Error;
};

// An internal cross-check failed; always a bug, never a user error.
struct AssertionFailed : Error {
    using Error::Error;
};

} // namespace nsg
