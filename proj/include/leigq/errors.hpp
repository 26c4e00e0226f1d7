#pragma once

#include <stdexcept>
#include <string>

namespace leigq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operation undefined for its argument (inverse of zero, zero vector, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

/// The gauge pivot entry is numerically zero.
class PivotDegenerateError : public Error {
public:
    using Error::Error;
};

/// Kernel dimension of the real embedding is not a multiple of 4; the rank
/// tolerance sits inside a singular-value gap.
class EmbeddingInconsistencyError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace leigq
