#include "transmute/observables.hpp"

#include <cmath>

#include "transmute/errors.hpp"

namespace transmute {
namespace {

void require_positive(Wavenumber k) {
    if (!(k.k > 0.0)) {
        throw DomainError("observables require k > 0");
    }
}

}  // namespace

complex f_from_tau(const Amplitude& tau, Wavenumber k) {
    require_positive(k);
    return -std::sqrt(1.0 / (8.0 * kPi * k.k)) * tau.tau;
}

double total_target_length(const Amplitude& tau, Wavenumber k, const Tolerances& tol) {
    require_positive(k);
    if (tau.tau.imag() > tol.unitarity_sign) {
        throw UnitarityViolation("Im tau > 0 on the continuum gives a negative target length");
    }
    return -tau.tau.imag() / k.k;
}

double optical_target_length(const Amplitude& tau, Wavenumber k) {
    return std::sqrt(8.0 * kPi / k.k) * f_from_tau(tau, k).imag();
}

double phase_shift_from_tau(const Amplitude& tau, const Tolerances& tol) {
    if (tau.tau == complex(0.0, 0.0)) {
        return 0.0;
    }
    const complex inv = 1.0 / tau.tau;
    if (std::abs(inv.imag() - 0.25) > tol.phase_unitarity) {
        throw UnitarityViolation("Im(1/tau) != 1/4: amplitude is not elastic-unitary");
    }
    // 1/tau = -cot(delta)/4 + i/4
    const double cot = -4.0 * inv.real();
    double delta = std::atan2(1.0, cot);
    if (delta > 0.5 * kPi) {
        delta -= kPi;
    }
    return delta;
}

complex tau_from_phase_shift(double delta0) {
    return -4.0 * std::sin(delta0) * std::polar(1.0, delta0);
}

double optical_theorem_defect(const Amplitude& tau, Wavenumber k) {
    const complex f = f_from_tau(tau, k);
    return 2.0 * kPi * std::norm(f) - std::sqrt(8.0 * kPi / k.k) * f.imag();
}

ScatteringObservables scattering_observables(const Amplitude& tau, const ComplexEnergy& z,
                                             const PhysicalScales& scales, const Tolerances& tol) {
    if (!z.boundary() || !(z.re() > 0.0)) {
        throw DomainError("observables exist only on the continuum E + i0 with E > 0");
    }
    const Wavenumber k = wavenumber(z.re(), scales);
    ScatteringObservables out{};
    out.f = f_from_tau(tau, k);
    out.dL_dtheta = std::norm(out.f);
    out.L_total = total_target_length(tau, k, tol);
    out.L_optical = optical_target_length(tau, k);
    out.unitarity_defect = tau.tau == complex(0.0, 0.0) ? 0.0 : (1.0 / tau.tau).imag() - 0.25;
    out.delta0 = phase_shift_from_tau(tau, tol);
    return out;
}

}  // namespace transmute
