#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace linedamp {

/// Invalid numeric value or violated type invariant in caller-supplied data.
class InvalidParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Load node index outside 1..n.
class PositionOutOfRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Iterative eigensolver failed to reduce the matrix.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Newton refinement of analytic roots diverged for one or more seeds.
class SeedDivergenceError : public ConvergenceError {
public:
    SeedDivergenceError(const std::string& msg, std::vector<int> unconverged)
        : ConvergenceError(msg), unconverged_modes(std::move(unconverged)) {}

    std::vector<int> unconverged_modes;
};

/// Two spectra of different cardinality cannot be matched.
class CardinalityMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Damping factor of lambda = 0 is undefined.
class ZeroEigenvalueError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Trajectory too short for spectral analysis.
class InsufficientSamplesError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Requested an approximation that only exists for the first resonance.
class UnsupportedModeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace linedamp
