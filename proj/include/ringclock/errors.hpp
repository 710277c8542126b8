#pragma once

#include <stdexcept>
#include <string>

namespace ringclock {

/// Base class for all domain errors raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadDimension : Error {
    using Error::Error;
};

/// Ansatz produced a coupling <= 0; the profile is rejected, not clamped.
struct NonPositiveCoupling : Error {
    using Error::Error;
};

/// Requested dense matrix exceeds the configured dimension cap.
struct DimensionOverflow : Error {
    using Error::Error;
};

/// Eigendecomposition residual too large and the fallback also failed.
struct IllConditioned : Error {
    using Error::Error;
};

/// |lambda_m + conj(lambda_n)| underflow in the diagonalized Lyapunov solver.
struct ResonantDenominator : Error {
    using Error::Error;
};

/// Integrated tick density at the end of the grid is too far below 1.
struct HorizonTooShort : Error {
    using Error::Error;
};

/// Two eigenvalues within tolerance of the maximal real part.
struct DegenerateDominant : Error {
    using Error::Error;
};

/// Zero eigenvalue of the generator has multiplicity > 1.
struct NonUniqueSteadyState : Error {
    using Error::Error;
};

/// Finite-difference step produced inconsistent derivative estimates.
struct StepUnderflow : Error {
    using Error::Error;
};

struct SolveFailure : Error {
    using Error::Error;
};

/// Global optimization requested above the configured site cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// Log-log fit input has zero variance in the abscissa.
struct DegenerateFit : Error {
    using Error::Error;
};

}  // namespace ringclock
