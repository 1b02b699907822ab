#pragma once

#include <stdexcept>
#include <string>

namespace ellh {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Domain errors: the request itself is invalid.
struct SingularCurveError : Error {
    using Error::Error;
};
struct PointNotOnCurveError : Error {
    using Error::Error;
};
struct PointAtInfinityError : Error {
    using Error::Error;
};
struct TwoTorsionError : Error {
    using Error::Error;
};
struct NonIntegralModelError : Error {
    using Error::Error;
};
struct TorsionCollapseError : Error {
    using Error::Error;
};
struct NotPrimeError : Error {
    using Error::Error;
};
struct DivisionByZeroError : Error {
    using Error::Error;
};
struct InadmissibleShiftError : Error {
    using Error::Error;
};

// Resource errors: the computation could not be carried out within limits.
struct ZVanishedError : Error {
    using Error::Error;
};
struct RootIsolationError : Error {
    using Error::Error;
};
struct PrecisionExhaustedError : Error {
    using Error::Error;
};
struct NoAdmissibleShiftError : Error {
    using Error::Error;
};
struct FactorizationOverflowError : Error {
    using Error::Error;
};

} // namespace ellh
