#pragma once

#include <string_view>

namespace transmute {

/// Every numerical threshold used by the library and the drivers. Defaults
/// are sized for double precision; the CLI can override individual entries
/// by name (`--tol-override name=value`).
struct Tolerances {
    /// |1 + eps*I(z)| below this is reported as a pole.
    double pole_proximity = 1e-14;
    /// Im tau above this on the continuum is a unitarity violation.
    double unitarity_sign = 1e-12;
    /// Allowed |Im(1/tau) - 1/4| when extracting a phase shift.
    double phase_unitarity = 1e-9;
    /// Flow composition, relative.
    double group_property = 1e-12;
    /// Direct regulated amplitude versus slid amplitude, relative.
    double anchor_independence = 1e-10;
    /// Numerically extracted pole residue, relative.
    double residue = 1e-6;
    /// Agreement of the two target-length formulas, relative.
    double target_length_agreement = 1e-12;
    /// Root solve in ln E, relative.
    double pole_search = 1e-13;
    /// Closed form versus quadrature, relative.
    double quadrature_rel = 1e-10;
    double quadrature_abs = 1e-300;

    /// Returns false when `name` is not a known tolerance.
    bool set(std::string_view name, double value) noexcept;
};

}  // namespace transmute
