#pragma once

#include <functional>

#include "transmute/energy_plane.hpp"
#include "transmute/regulators.hpp"

namespace transmute::oracle {

struct QuadratureSpec {
    double abs_tol = 1e-300;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    /// Allow boundary points E + i0 by principal value plus -i pi Q(E).
    bool singularity_subtraction = true;
};

struct QuadratureResult {
    complex value;
    double error;
    int subdivisions;
};

using ComplexIntegrand = std::function<complex(double)>;

/// Globally adaptive 10/21-point Gauss-Kronrod on [a, b]. Throws
/// PrecisionFailure (with the best estimate) when the tolerance is not met.
QuadratureResult integrate(const ComplexIntegrand& f, double a, double b, const QuadratureSpec& spec = {});

/// Integral over [a, inf) through x = a + scale * t / (1 - t).
QuadratureResult integrate_to_infinity(const ComplexIntegrand& f, double a, double scale,
                                       const QuadratureSpec& spec = {});

/// Q(E) from the two-dimensional momentum integral with the energy delta
/// resolved on the radial variable; the angular integral runs over the
/// Cartesian form factor.
double shell_spectral_weight(const Regulator& reg, double energy, const PhysicalScales& scales = {});

/// g(z) = int Q(E) / (z - E) dE by quadrature of shell_spectral_weight.
/// Boundary points use the Sokhotski split PV - i pi Q(E).
QuadratureResult quadrature_g(const Regulator& reg, const ComplexEnergy& z, const QuadratureSpec& spec = {},
                              const PhysicalScales& scales = {});

/// kinetic_constant * quadrature_g.
QuadratureResult quadrature_i(const Regulator& reg, const ComplexEnergy& z, const QuadratureSpec& spec = {},
                              const PhysicalScales& scales = {});

/// G(z, z0) = int Q(E) [1/(z - E) - 1/(z0 - E)] dE. Converges for the pure
/// delta as well. Interior points integrate the combined kernel; boundary
/// points need a finite regulator and fall back to quadrature_g differences.
QuadratureResult quadrature_slide_kernel(const Regulator& reg, const ComplexEnergy& z, const ComplexEnergy& z0,
                                         const QuadratureSpec& spec = {}, const PhysicalScales& scales = {});

/// q(t) = int Q(E) exp(-i E t) dE.
QuadratureResult quadrature_decay_amplitude(const Regulator& reg, double t, const QuadratureSpec& spec = {},
                                            const PhysicalScales& scales = {});

/// Residue of a function with a simple pole on the negative real axis,
/// from the mean of f(z) (z - pole) over a circle of the given radius.
/// Only the upper half circle is sampled; the lower half follows from
/// f(conj z) = conj f(z).
double contour_residue(const std::function<complex(const ComplexEnergy&)>& upper, double pole, double radius,
                       int points = 64);

/// Richardson combination of contour residues at two radii, assuming a
/// leading error linear in the radius.
double richardson_residue(const std::function<complex(const ComplexEnergy&)>& upper, double pole, double r1,
                          double r2, int points = 64);

}  // namespace transmute::oracle
