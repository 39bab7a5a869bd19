#include "transmute/energy_plane.hpp"

#include <cmath>
#include <string>

#include "transmute/errors.hpp"

namespace transmute {

PhysicalScales::PhysicalScales(double kinetic_constant) : kinetic_constant_(kinetic_constant) {
    if (!(kinetic_constant > 0.0) || !std::isfinite(kinetic_constant)) {
        throw DomainError("kinetic_constant must be positive and finite");
    }
}

ComplexEnergy ComplexEnergy::interior(double re, double im) {
    if (!std::isfinite(re) || !std::isfinite(im)) {
        throw DomainError("complex energy must be finite");
    }
    if (!(im > 0.0)) {
        throw DomainError("interior energy requires Im z > 0, got Im z = " + std::to_string(im));
    }
    return {re, im, false};
}

ComplexEnergy ComplexEnergy::above(double re) {
    if (!std::isfinite(re)) {
        throw DomainError("boundary energy must be finite");
    }
    if (re == 0.0) {
        throw DomainError("boundary value at z = 0 is undefined");
    }
    return {re, 0.0, true};
}

ComplexEnergy ComplexEnergy::from_complex(complex z) {
    if (z.imag() == 0.0) {
        return above(z.real());
    }
    return interior(z.real(), z.imag());
}

double ComplexEnergy::arg() const noexcept {
    // im is +0.0 on the boundary, so atan2 yields exactly 0 or pi there.
    return std::atan2(im_, re_);
}

double ComplexEnergy::modulus() const noexcept { return std::hypot(re_, im_); }

ComplexEnergy ComplexEnergy::shifted(double delta) const {
    return boundary_ ? above(re_ + delta) : interior(re_ + delta, im_);
}

ComplexEnergy ComplexEnergy::scaled(double factor) const {
    if (!(factor > 0.0)) {
        throw DomainError("energy scale factor must be positive");
    }
    return boundary_ ? above(re_ * factor) : interior(re_ * factor, im_ * factor);
}

complex principal_log_ratio(const ComplexEnergy& z, const ComplexEnergy& z0) {
    const double r = z.modulus();
    const double r0 = z0.modulus();
    if (!(r > 0.0) || !(r0 > 0.0)) {
        throw DomainError("principal_log_ratio: zero energy");
    }
    if (z.im() < 0.0 || z0.im() < 0.0) {
        throw DomainError("principal_log_ratio: lower half plane input");
    }
    return {std::log(r / r0), z.arg() - z0.arg()};
}

Wavenumber wavenumber(double energy, const PhysicalScales& scales) {
    if (!(energy > 0.0)) {
        throw DomainError("wavenumber requires a positive continuum energy");
    }
    return {std::sqrt(energy / scales.kinetic_constant())};
}

}  // namespace transmute
