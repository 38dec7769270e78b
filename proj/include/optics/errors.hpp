#pragma once

#include <stdexcept>
#include <string>

namespace optics {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on a numeric argument does not hold.
class DomainError : public Error {
public:
    using Error::Error;
};

// Denominator C*q + D of a Moebius transform vanished.
class SingularTransform : public Error {
public:
    using Error::Error;
};

class InvalidComponent : public Error {
public:
    using Error::Error;
};

class InvalidSystem : public Error {
public:
    using Error::Error;
};

class InvalidResonator : public Error {
public:
    using Error::Error;
};

// Round-trip determinant is not 1, so the half-trace criterion does not apply.
class NonUnimodular : public Error {
public:
    using Error::Error;
};

// Im(q) <= 0: the spot size would not be a positive real number.
class UnphysicalBeam : public Error {
public:
    using Error::Error;
};

class OffPlanePoint : public Error {
public:
    using Error::Error;
};

class TotalInternalReflection : public Error {
public:
    using Error::Error;
};

class NotNormalized : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

}  // namespace optics
