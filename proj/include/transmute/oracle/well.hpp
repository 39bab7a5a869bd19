#pragma once

#include "transmute/energy_plane.hpp"

namespace transmute::oracle {

/// Attractive circular well: V(r) = -depth for r < radius, 0 outside.
struct WellParameters {
    double radius;
    double depth;

    /// Well whose spatial integral matches a contact interaction of
    /// strength eps: eps = depth * pi * radius^2 / kinetic_constant.
    static WellParameters from_coupling(double eps, double radius, const PhysicalScales& scales = {});

    double coupling(const PhysicalScales& scales = {}) const;
};

/// Ground-state binding energy E_B in (0, depth) from the s-wave matching
///   k_in J1(k_in a) K0(g a) = g K1(g a) J0(k_in a),
/// k_in = sqrt((depth - E_B) / c), g = sqrt(E_B / c). Any depth > 0 binds.
double well_bound_state(const WellParameters& well, const PhysicalScales& scales = {});

/// s-wave phase shift in (-pi/2, pi/2], exterior solution
/// cos(d) J0(kr) - sin(d) Y0(kr), matched to the interior J0(k_in r).
double well_phase_shift(const WellParameters& well, Wavenumber k, const PhysicalScales& scales = {});

}  // namespace transmute::oracle
