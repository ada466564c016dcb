#pragma once

#include <stdexcept>
#include <string>

namespace cliffdef {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Precondition violation on an operation argument.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// gcd(generators) != 1: the complement would be infinite.
class NotNumerical : public Error {
public:
    using Error::Error;
};

// derived_semigroup() called on a semigroup with e(S) < m(S).
class NotMaxEmbedding : public Error {
public:
    using Error::Error;
};

// The block decomposition does not satisfy the monotonicity hypothesis.
class NotMonotoneBlocks : public Error {
public:
    using Error::Error;
};

// Family parameters outside the regimes the closed forms cover.
class UnsupportedParameters : public Error {
public:
    using Error::Error;
};

// 64-bit arithmetic overflowed; results would be wrong, so we stop.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace cliffdef
