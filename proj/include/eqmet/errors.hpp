#pragma once

#include <stdexcept>
#include <string>

namespace eqmet {

/// Base class for all toolkit errors. Validation failures (bad configs,
/// malformed inputs) and numeric failures (non-adiabatic ramps, impossible
/// branches) both derive from this.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// -- spectrum --------------------------------------------------------------

struct SpectrumAsymmetric : Error {
    using Error::Error;
};
struct DegenerateSpectrum : Error {
    using Error::Error;
};
struct InvalidN : Error {
    using Error::Error;
};

// -- states ----------------------------------------------------------------

struct NotNormalized : Error {
    using Error::Error;
};
struct CoherenceBound : Error {
    using Error::Error;
};
struct NotPSD : Error {
    using Error::Error;
};
struct NotDensityMatrix : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};

// -- measurement -----------------------------------------------------------

struct BranchImpossible : Error {
    using Error::Error;
};

// -- estimation ------------------------------------------------------------

struct EmptySector : Error {
    using Error::Error;
};
struct AllZero : Error {
    using Error::Error;
};
struct IndexMismatch : Error {
    using Error::Error;
};
struct DegenerateTheta : Error {
    using Error::Error;
};

// -- interferometer --------------------------------------------------------

struct NotAdiabatic : Error {
    using Error::Error;
};
struct DegenerateCrossing : Error {
    using Error::Error;
};

// -- decoupling ------------------------------------------------------------

struct InvalidInterval : Error {
    using Error::Error;
};

// -- ancilla ---------------------------------------------------------------

struct ConstructionMismatch : Error {
    using Error::Error;
};

// -- io / cli --------------------------------------------------------------

struct ConfigError : Error {
    using Error::Error;
};

}  // namespace eqmet
