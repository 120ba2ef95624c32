#pragma once

#include <stdexcept>
#include <string>

namespace geoplan {

// Base of everything the library throws on bad input or impossible requests.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Input outside the domain an operation is defined on (charts, coordinate ranges).
class DomainError : public Error {
public:
    using Error::Error;
};

// Raised when a continuation step cannot tell two candidates apart.
class AmbiguityError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace geoplan
