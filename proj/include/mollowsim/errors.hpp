#pragma once

#include <stdexcept>
#include <string>

namespace mollowsim {

/// Constructor or operation input outside its admissible domain.
class InvalidParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A Bloch vector that maps to collective populations outside [0, 1].
class UnphysicalStateError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Query outside the support of a tabulated reservoir profile.
class TabulatedRangeError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Stationary equations have no unique solution (e.g. all decay rates zero).
class DegenerateSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Second-order correlation evaluated at a dark fringe of fully coherent
/// light: zero coincidence rate over zero singles rate.
class SingularCorrelationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Non-finite values encountered while integrating the equations of motion.
class NumericalBlowupError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Fringe visibility requested for a band with a vanishing denominator that
/// is not the removable dark-band case.
class UndefinedVisibilityError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent scenario configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mollowsim
