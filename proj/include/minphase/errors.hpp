#pragma once

#include <stdexcept>
#include <string>

namespace minphase {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The field touches (numerical) zero somewhere on the sampling grid.
struct ZeroCrossingError : Error {
    using Error::Error;
};

/// The trajectory cannot be resolved at the achievable grid refinement.
struct UndersampledError : Error {
    using Error::Error;
};

/// Negative-frequency content exceeds the single-sideband tolerance.
struct NotSSBError : Error {
    using Error::Error;
};

struct NotMinimumPhaseError : Error {
    using Error::Error;
};

struct NonPositiveIntensityError : Error {
    using Error::Error;
};

/// Polynomial oracle: all coefficients vanish or the degree collapses.
struct DegenerateCoefficientsError : Error {
    using Error::Error;
};

struct PeakCountMismatchError : Error {
    using Error::Error;
};

struct FitDivergedError : Error {
    using Error::Error;
};

struct GridMismatchError : Error {
    using Error::Error;
};

}  // namespace minphase
