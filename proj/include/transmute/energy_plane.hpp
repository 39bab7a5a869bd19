#pragma once

#include <complex>

namespace transmute {

using complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kFourPi = 4.0 * kPi;
inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Unit system. Only the combination hbar^2 / 2mu enters; hbar = 1 for time.
class PhysicalScales {
public:
    PhysicalScales() = default;
    explicit PhysicalScales(double kinetic_constant);

    double kinetic_constant() const noexcept { return kinetic_constant_; }

    /// mu / (2 pi hbar^2) == 1 / (4 pi kinetic_constant).
    double free_density() const noexcept { return 1.0 / (kFourPi * kinetic_constant_); }

private:
    double kinetic_constant_ = 1.0;
};

/// A point of the closed upper half energy plane.
///
/// Interior points carry im > 0. Boundary points represent the limit
/// re + i0+ and store im == +0.0; the argument is then exactly 0 on the
/// positive axis and exactly pi on the negative axis.
class ComplexEnergy {
public:
    /// Interior point; requires im > 0.
    static ComplexEnergy interior(double re, double im);
    /// Boundary value re + i0+; requires re != 0.
    static ComplexEnergy above(double re);
    /// Interior if im > 0, boundary if im == 0.
    static ComplexEnergy from_complex(complex z);

    double re() const noexcept { return re_; }
    double im() const noexcept { return im_; }
    bool boundary() const noexcept { return boundary_; }
    complex value() const noexcept { return {re_, im_}; }

    /// Argument in [0, pi].
    double arg() const noexcept;
    double modulus() const noexcept;

    /// Shift along the real axis, keeping the boundary marker.
    ComplexEnergy shifted(double delta) const;
    /// Multiply by a positive real factor.
    ComplexEnergy scaled(double factor) const;

    friend bool operator==(const ComplexEnergy&, const ComplexEnergy&) = default;

private:
    ComplexEnergy(double re, double im, bool boundary) : re_(re), im_(im), boundary_(boundary) {}

    double re_ = 0.0;
    double im_ = 0.0;
    bool boundary_ = false;
};

struct Wavenumber {
    double k;
};

/// ln|z/z0| + i (arg z - arg z0), both arguments taken in [0, pi].
///
/// This is the single logarithm branch used throughout the library.
complex principal_log_ratio(const ComplexEnergy& z, const ComplexEnergy& z0);

/// k = sqrt(E / kinetic_constant) for a continuum energy E > 0.
Wavenumber wavenumber(double energy, const PhysicalScales& scales = {});

}  // namespace transmute
