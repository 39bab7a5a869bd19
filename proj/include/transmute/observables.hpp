#pragma once

#include "transmute/amplitude.hpp"
#include "transmute/energy_plane.hpp"
#include "transmute/tolerances.hpp"

namespace transmute {

/// Continuum scattering observables at one energy.
///
/// The phase of f is fixed by requiring both target-length formulas to be
/// non-negative, which forces Im tau <= 0 and the s-wave form
/// tau = -4 exp(i delta0) sin(delta0).
struct ScatteringObservables {
    complex f;           // sqrt(length)
    double dL_dtheta;    // |f|^2, length
    double L_total;      // -Im(tau) / k, length
    double L_optical;    // sqrt(8 pi / k) Im f, length
    double delta0;       // radians, (-pi/2, pi/2]
    double unitarity_defect;  // Im(1/tau) - 1/4, zero for tau == 0
};

/// f = -sqrt(1 / (8 pi k)) tau.
complex f_from_tau(const Amplitude& tau, Wavenumber k);

/// L = -Im(tau) / k. Throws UnitarityViolation when Im tau > tol.unitarity_sign.
double total_target_length(const Amplitude& tau, Wavenumber k, const Tolerances& tol = {});

/// L = sqrt(8 pi / k) Im f, the two-dimensional optical theorem.
double optical_target_length(const Amplitude& tau, Wavenumber k);

/// delta0 in (-pi/2, pi/2] with tau = -4 exp(i delta0) sin(delta0).
///
/// tau == 0 maps to 0. Throws UnitarityViolation when |Im(1/tau) - 1/4|
/// exceeds tol.phase_unitarity.
double phase_shift_from_tau(const Amplitude& tau, const Tolerances& tol = {});

/// -4 exp(i delta0) sin(delta0).
complex tau_from_phase_shift(double delta0);

/// 2 pi |f|^2 - sqrt(8 pi / k) Im f; vanishes for elastic unitary amplitudes.
double optical_theorem_defect(const Amplitude& tau, Wavenumber k);

/// All observables at a continuum point z = E + i0. Throws DomainError for
/// interior or negative-energy points.
ScatteringObservables scattering_observables(const Amplitude& tau, const ComplexEnergy& z,
                                             const PhysicalScales& scales = {}, const Tolerances& tol = {});

}  // namespace transmute
