#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "transmute/energy_plane.hpp"

namespace transmute {

/// The bare contact interaction, <k|v> = 1 for every k.
struct PureDelta {
    friend bool operator==(const PureDelta&, const PureDelta&) = default;
};

/// |<k|v>|^2 = 1 for kinetic energy <= lambda, 0 above. The cutoff acts on
/// energy, not on |k|.
struct SharpCutoff {
    double lambda;
    friend bool operator==(const SharpCutoff&, const SharpCutoff&) = default;
};

/// |<k|v>|^2 = exp(-k^2 a^2).
struct GaussianFormFactor {
    double width;
    friend bool operator==(const GaussianFormFactor&, const GaussianFormFactor&) = default;
};

/// Finite-range well of radius a. Not separable; only the oracle solves it.
struct CircularWell {
    double radius;
    friend bool operator==(const CircularWell&, const CircularWell&) = default;
};

using Regulator = std::variant<PureDelta, SharpCutoff, GaussianFormFactor, CircularWell>;

/// Throws DomainError on non-positive parameters.
Regulator make_sharp_cutoff(double lambda);
Regulator make_gaussian(double width);
Regulator make_circular_well(double radius);

/// CLI name: pure-delta, sharp-cutoff, gaussian, circular-well.
std::string_view regulator_name(const Regulator& reg) noexcept;

/// Energy scale the regulator introduces: lambda for the sharp cutoff,
/// kinetic_constant / a^2 for the length regulators. DivergenceError for
/// the pure delta, which has none.
double characteristic_energy(const Regulator& reg, const PhysicalScales& scales = {});

/// |<k|v>|^2 evaluated on the shell kinetic_constant * k^2 = E.
double form_factor_squared(const Regulator& reg, double energy, const PhysicalScales& scales = {});

/// Q(E) = <v| delta(E - H) |v>.
double spectral_weight(const Regulator& reg, double energy, const PhysicalScales& scales = {});

/// q(t) = int_0^inf Q(E) exp(-i E t) dE, with hbar = 1.
complex decay_amplitude(const Regulator& reg, double t, const PhysicalScales& scales = {});

/// g(z) = int_0^inf Q(E) / (z - E) dE in closed form.
///
/// Throws DivergenceError for PureDelta and SingularInputError on the
/// logarithmic endpoints of the sharp cutoff (z = Lambda + i0).
complex g_function(const Regulator& reg, const ComplexEnergy& z, const PhysicalScales& scales = {});

/// I(z) = kinetic_constant * g(z); dimensionless.
complex i_function(const Regulator& reg, const ComplexEnergy& z, const PhysicalScales& scales = {});

/// G(z, z0) = g(z) - g(z0). Finite for PureDelta, where the divergence
/// cancels and the kernel is ln(z/z0) / (4 pi kinetic_constant).
complex slide_kernel(const Regulator& reg, const ComplexEnergy& z, const ComplexEnergy& z0,
                     const PhysicalScales& scales = {});

/// exp(w) E1(w) on the principal branch, w off the negative real axis.
complex scaled_exp_integral_e1(complex w);

/// exp(-x) * E1(-x - i0) = exp(-x) * (-Ei(x) + i pi) for x > 0, i.e. the
/// boundary value approached from below the cut.
complex scaled_exp_integral_e1_below_cut(double x);

}  // namespace transmute
