#include "transmute/regulators.hpp"

#include <cmath>

#include "transmute/errors.hpp"

namespace transmute {
namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void unsupported_well(const char* op) {
    throw UnsupportedRegulatorError(std::string(op) +
                                    ": circular-well is a finite-range potential; use the oracle solver");
}

// a^2 / kinetic_constant, the Gaussian decay rate in energy.
double gaussian_rate(const GaussianFormFactor& g, const PhysicalScales& scales) {
    return g.width * g.width / scales.kinetic_constant();
}

complex g_sharp(const SharpCutoff& s, const ComplexEnergy& z, const PhysicalScales& scales) {
    if (z.boundary() && z.re() == s.lambda) {
        throw SingularInputError("g(z) is logarithmically singular at z = Lambda + i0");
    }
    return scales.free_density() * principal_log_ratio(z, z.shifted(-s.lambda));
}

complex g_gaussian(const GaussianFormFactor& gff, const ComplexEnergy& z, const PhysicalScales& scales) {
    // int_0^inf exp(-b E) / (z - E) dE = -exp(-b z) E1(-b z)
    const double b = gaussian_rate(gff, scales);
    complex scaled;
    if (z.boundary() && z.re() > 0.0) {
        // -b(E + i0) lies just below the negative real axis.
        scaled = scaled_exp_integral_e1_below_cut(b * z.re());
    } else {
        scaled = scaled_exp_integral_e1(complex(-b * z.re(), -b * z.im()));
    }
    return -scales.free_density() * scaled;
}

}  // namespace

Regulator make_sharp_cutoff(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw DomainError("sharp cutoff requires Lambda > 0");
    }
    return SharpCutoff{lambda};
}

Regulator make_gaussian(double width) {
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw DomainError("gaussian form factor requires a > 0");
    }
    return GaussianFormFactor{width};
}

Regulator make_circular_well(double radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("circular well requires a > 0");
    }
    return CircularWell{radius};
}

std::string_view regulator_name(const Regulator& reg) noexcept {
    return std::visit(overloaded{
                          [](const PureDelta&) { return std::string_view("pure-delta"); },
                          [](const SharpCutoff&) { return std::string_view("sharp-cutoff"); },
                          [](const GaussianFormFactor&) { return std::string_view("gaussian"); },
                          [](const CircularWell&) { return std::string_view("circular-well"); },
                      },
                      reg);
}

double characteristic_energy(const Regulator& reg, const PhysicalScales& scales) {
    return std::visit(overloaded{
                          [](const PureDelta&) -> double {
                              throw DivergenceError("the pure delta interaction has no energy scale");
                          },
                          [](const SharpCutoff& s) { return s.lambda; },
                          [&](const GaussianFormFactor& g) {
                              return scales.kinetic_constant() / (g.width * g.width);
                          },
                          [&](const CircularWell& w) {
                              return scales.kinetic_constant() / (w.radius * w.radius);
                          },
                      },
                      reg);
}

double form_factor_squared(const Regulator& reg, double energy, const PhysicalScales& scales) {
    if (!(energy >= 0.0)) {
        throw DomainError("form factor requires E >= 0");
    }
    return std::visit(overloaded{
                          [](const PureDelta&) { return 1.0; },
                          [&](const SharpCutoff& s) { return energy <= s.lambda ? 1.0 : 0.0; },
                          [&](const GaussianFormFactor& g) {
                              return std::exp(-gaussian_rate(g, scales) * energy);
                          },
                          [](const CircularWell&) -> double { unsupported_well("form_factor_squared"); },
                      },
                      reg);
}

double spectral_weight(const Regulator& reg, double energy, const PhysicalScales& scales) {
    if (std::holds_alternative<CircularWell>(reg)) {
        unsupported_well("spectral_weight");
    }
    return scales.free_density() * form_factor_squared(reg, energy, scales);
}

complex decay_amplitude(const Regulator& reg, double t, const PhysicalScales& scales) {
    if (!(t > 0.0)) {
        throw DomainError("decay amplitude requires t > 0");
    }
    const double c = scales.kinetic_constant();
    return std::visit(overloaded{
                          [&](const PureDelta&) {
                              // mu / (2 pi i t hbar)
                              return complex(0.0, -1.0 / (kFourPi * c * t));
                          },
                          [&](const SharpCutoff& s) {
                              // (1 - exp(-i theta)) / (i theta), theta = Lambda t
                              const double theta = s.lambda * t;
                              const double half = std::sin(0.5 * theta);
                              const complex shape(std::sin(theta) / theta, -2.0 * half * half / theta);
                              return scales.free_density() * s.lambda * shape;
                          },
                          [&](const GaussianFormFactor& g) {
                              return 1.0 / (kFourPi * complex(g.width * g.width, c * t));
                          },
                          [](const CircularWell&) -> complex { unsupported_well("decay_amplitude"); },
                      },
                      reg);
}

complex g_function(const Regulator& reg, const ComplexEnergy& z, const PhysicalScales& scales) {
    return std::visit(overloaded{
                          [](const PureDelta&) -> complex {
                              throw DivergenceError(
                                  "g(z) diverges logarithmically for the unregulated contact interaction");
                          },
                          [&](const SharpCutoff& s) { return g_sharp(s, z, scales); },
                          [&](const GaussianFormFactor& g) { return g_gaussian(g, z, scales); },
                          [](const CircularWell&) -> complex { unsupported_well("g_function"); },
                      },
                      reg);
}

complex i_function(const Regulator& reg, const ComplexEnergy& z, const PhysicalScales& scales) {
    return scales.kinetic_constant() * g_function(reg, z, scales);
}

complex slide_kernel(const Regulator& reg, const ComplexEnergy& z, const ComplexEnergy& z0,
                     const PhysicalScales& scales) {
    if (std::holds_alternative<PureDelta>(reg)) {
        return scales.free_density() * principal_log_ratio(z, z0);
    }
    if (z == z0) {
        // Still validate the point.
        (void)g_function(reg, z, scales);
        return 0.0;
    }
    return g_function(reg, z, scales) - g_function(reg, z0, scales);
}

}  // namespace transmute
