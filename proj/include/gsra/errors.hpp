#ifndef GSRA_ERRORS_HPP
#define GSRA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gsra {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A column submatrix is numerically rank-deficient.
struct RankDeficient : Error {
    using Error::Error;
};

/// Requested support has more indices than measurement rows.
struct SupportTooLarge : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

/// Fewer eligible indices than requested in a selection.
struct NotEnoughCandidates : Error {
    using Error::Error;
};

/// Every candidate path of a tree search failed.
struct AllPathsDegenerate : Error {
    using Error::Error;
};

/// Driver iteration made no progress even after the tie-broken restart.
struct DriverStalled : Error {
    using Error::Error;
};

/// Noise generation was asked for a signal with no nonzero entries.
struct ZeroSignal : Error {
    using Error::Error;
};

/// Oracle enumeration guard tripped.
struct InstanceTooLarge : Error {
    using Error::Error;
};

/// Invalid configuration value or experiment file.
struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace gsra

#endif
