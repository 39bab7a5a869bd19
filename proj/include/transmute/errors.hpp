#pragma once

#include <stdexcept>
#include <string>

namespace transmute {

/// Root of every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The requested quantity is infinite for this regulator (the unregulated
/// contact interaction has a logarithmically divergent resolvent).
class DivergenceError : public Error {
public:
    using Error::Error;
};

/// Input sits exactly on a logarithmic singularity of a closed form.
class SingularInputError : public Error {
public:
    using Error::Error;
};

class UnsupportedRegulatorError : public Error {
public:
    using Error::Error;
};

/// Amplitude evaluated on (or numerically indistinguishable from) its pole.
/// Carries the pole energy so callers can report it instead of a blowup.
class PoleSingularity : public Error {
public:
    PoleSingularity(const std::string& what, double pole_energy)
        : Error(what), pole_energy_(pole_energy) {}

    double pole_energy() const noexcept { return pole_energy_; }

private:
    double pole_energy_;
};

class NoBoundStateError : public Error {
public:
    using Error::Error;
};

/// Amplitude violates elastic unitarity on the continuum.
class UnitarityViolation : public Error {
public:
    using Error::Error;
};

/// Root isolation or iteration failed where it should not.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// Quadrature did not reach the requested tolerance. The best available
/// estimate is kept for diagnostics.
class PrecisionFailure : public NumericalFailure {
public:
    PrecisionFailure(const std::string& what, double best_re, double best_im, double error_estimate)
        : NumericalFailure(what), best_re_(best_re), best_im_(best_im), error_(error_estimate) {}

    double best_re() const noexcept { return best_re_; }
    double best_im() const noexcept { return best_im_; }
    double error_estimate() const noexcept { return error_; }

private:
    double best_re_;
    double best_im_;
    double error_;
};

}  // namespace transmute
