#pragma once

#include <stdexcept>

namespace carousel {

// Base class for every domain error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A trajectory reached the boundary of the admissible angle region.
struct StateLeftRegion : Error {
    using Error::Error;
};

// Conserved-quantity drift exceeded the configured ceiling.
struct StepTooLarge : Error {
    using Error::Error;
};

// Energy outside the open window where two simple turning points exist.
struct OutOfEnergyRange : Error {
    using Error::Error;
};

struct QuadratureNotConverged : Error {
    using Error::Error;
};

// Inconsistent (H, u) pair fed to the radius formula.
struct NegativeRadicand : Error {
    using Error::Error;
};

struct AngleSumInvalid : Error {
    using Error::Error;
};

// Angle set passed the sum check but the equilateral walk fails to close.
struct NonClosure : Error {
    using Error::Error;
};

struct SumConstraintViolated : Error {
    using Error::Error;
};

struct OutOfRegion : Error {
    using Error::Error;
};

struct InconsistentAngles : Error {
    using Error::Error;
};

// Angle state failed to recur within the allotted duration.
struct NoReturn : Error {
    using Error::Error;
};

struct DegenerateCurve : Error {
    using Error::Error;
};

struct IOFailure : Error {
    using Error::Error;
};

}  // namespace carousel
