#pragma once

#include <optional>
#include <span>
#include <vector>

#include "transmute/energy_plane.hpp"
#include "transmute/regulators.hpp"
#include "transmute/tolerances.hpp"

namespace transmute {

/// Dimensionless attractive coupling; the potential strength is
/// -kinetic_constant * epsilon.
class Coupling {
public:
    explicit Coupling(double epsilon);
    double epsilon() const noexcept { return epsilon_; }

private:
    double epsilon_;
};

/// How an amplitude value came about.
enum class Provenance {
    Computed,
    /// Exact zero: the unregulated contact interaction neither scatters nor
    /// binds, because its resolvent integral diverges.
    NoScatteringTheorem,
};

/// tau(z) = (2 mu / hbar^2) T(z).
struct Amplitude {
    complex tau{};
    Provenance provenance = Provenance::Computed;

    bool is_theorem_zero() const noexcept { return provenance == Provenance::NoScatteringTheorem; }
};

/// Anchor (z0, tau(z0)) of the sliding-scale relation.
struct FlowPoint {
    ComplexEnergy z0;
    Amplitude tau0;
};

struct BoundState {
    double binding_energy;  // E_B > 0, pole at z = -E_B
    double residue;         // residue of tau at the pole
};

struct BoundStateOutcome {
    std::optional<BoundState> state;
    Provenance provenance = Provenance::Computed;
};

/// tau(z) = -eps / (1 + eps I(z)) for a separable regulator.
///
/// PureDelta yields the exact zero amplitude tagged NoScatteringTheorem.
/// Throws PoleSingularity when |1 + eps I(z)| < tol.pole_proximity.
Amplitude tau_regulated(const Coupling& eps, const Regulator& reg, const ComplexEnergy& z,
                        const PhysicalScales& scales = {}, const Tolerances& tol = {});

/// Transport tau from the anchor to z:
/// tau(z) = tau0 / (1 - tau0 * kinetic_constant * G(z, z0)).
///
/// Zero is a fixed point of the flow. Throws PoleSingularity, carrying the
/// located pole energy, when the denominator vanishes.
Amplitude slide(const FlowPoint& anchor, const Regulator& reg, const ComplexEnergy& z,
                const PhysicalScales& scales = {}, const Tolerances& tol = {});

/// tau(z) = 4 pi / ln(-E_B / z), with -E_B taken as the limit from above.
Amplitude tau_renormalized(double binding_energy, const ComplexEnergy& z, const Tolerances& tol = {});

/// Solve 1 + eps I(-E_B + i0) = 0 for E_B in ln E coordinates.
///
/// PureDelta returns an empty state tagged NoScatteringTheorem. Throws
/// NoBoundStateError when no root lies in (1e-300, 1) times the regulator's
/// characteristic energy.
BoundStateOutcome bound_state_pole(const Coupling& eps, const Regulator& reg, const PhysicalScales& scales = {},
                                   const Tolerances& tol = {});

struct TheoremLimitResult {
    std::vector<double> cutoffs;
    std::vector<Amplitude> amplitudes;
    /// 4 pi / ln(Lambda / |z|) per cutoff.
    std::vector<double> log_bounds;
    /// Cutoff where Re(1/tau) changes sign; |tau| peaks near it.
    double pole_region_cutoff = 0.0;
    bool monotone_full = false;
    bool monotone_beyond_pole = false;
    /// Least-squares slope of 1/|tau| against ln Lambda, all entries.
    double fit_slope_full = 0.0;
    /// Same, restricted to cutoffs beyond the pole region (NaN if < 2 points).
    double fit_slope_beyond_pole = 0.0;
};

/// tau_Lambda(z) at fixed eps for an increasing cutoff schedule.
TheoremLimitResult theorem_limit_demo(const Coupling& eps, const ComplexEnergy& z, std::span<const double> cutoffs,
                                      const PhysicalScales& scales = {});

struct TransmutationStep {
    int n;
    double cutoff;
    double epsilon;
    Amplitude tau;
    /// |tau_n - tau_renormalized| / |tau_renormalized|
    double deviation;
    /// Bound state of the regulated model at this step.
    double pole_energy;
};

/// Sharp-cutoff amplitudes along Lambda_n = E_B 10^n, eps_n = 4 pi / ln(Lambda_n / E_B),
/// n = 1..steps, compared to tau_renormalized(E_B, z).
std::vector<TransmutationStep> transmutation_limit_demo(double binding_energy, const ComplexEnergy& z, int steps,
                                                        const PhysicalScales& scales = {});

}  // namespace transmute
