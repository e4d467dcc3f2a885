#pragma once

#include <stdexcept>
#include <string>

namespace graycube {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Ill-formed input: unknown ids, degree mismatches, missing assignments.
class StructuralError : public Error {
public:
    using Error::Error;
};

class CompositionError : public Error {
public:
    using Error::Error;
};

/// A pushout quotient that does not carry a positive basis.
class PushoutError : public Error {
public:
    using Error::Error;
};

/// Two cocone legs disagree on the apex of a span.
class CoconeError : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

/// A configured size or search guard was exceeded.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// A constructed map failed its own verification.
class ConstructionError : public Error {
public:
    using Error::Error;
};

/// Malformed documents: bad syntax, wrong shape, unknown refs.
class FormatError : public Error {
public:
    using Error::Error;
};

} // namespace graycube
