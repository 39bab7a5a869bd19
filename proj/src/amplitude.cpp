#include "transmute/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "transmute/errors.hpp"
#include "transmute/fit.hpp"

namespace transmute {
namespace {

void require_separable(const Regulator& reg, const char* op) {
    if (std::holds_alternative<CircularWell>(reg)) {
        throw UnsupportedRegulatorError(std::string(op) + ": circular-well is handled by the oracle solver");
    }
}

// dI/dz on the negative real axis, z = -energy + i0.
double i_derivative_below_threshold(const Regulator& reg, double energy, const PhysicalScales& scales) {
    if (const auto* s = std::get_if<SharpCutoff>(&reg)) {
        return (-1.0 / energy + 1.0 / (energy + s->lambda)) / kFourPi;
    }
    const auto& g = std::get<GaussianFormFactor>(reg);
    const double rate = g.width * g.width / scales.kinetic_constant();
    const double w = rate * energy;
    const double f = scaled_exp_integral_e1(complex(w, 0.0)).real();
    return rate * (f - 1.0 / w) / kFourPi;
}

}  // namespace

Coupling::Coupling(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw DomainError("coupling must be attractive, epsilon > 0");
    }
}

Amplitude tau_regulated(const Coupling& eps, const Regulator& reg, const ComplexEnergy& z,
                        const PhysicalScales& scales, const Tolerances& tol) {
    require_separable(reg, "tau_regulated");
    if (std::holds_alternative<PureDelta>(reg)) {
        return {complex(0.0, 0.0), Provenance::NoScatteringTheorem};
    }
    const double e = eps.epsilon();
    const complex denom = 1.0 + e * i_function(reg, z, scales);
    if (std::abs(denom) < tol.pole_proximity) {
        throw PoleSingularity("regulated amplitude evaluated at its bound-state pole", z.re());
    }
    return {-e / denom, Provenance::Computed};
}

Amplitude slide(const FlowPoint& anchor, const Regulator& reg, const ComplexEnergy& z,
                const PhysicalScales& scales, const Tolerances& tol) {
    require_separable(reg, "slide");
    const complex tau0 = anchor.tau0.tau;
    if (tau0 == complex(0.0, 0.0)) {
        return {complex(0.0, 0.0), anchor.tau0.provenance};
    }
    if (z == anchor.z0) {
        return anchor.tau0;
    }
    const complex kernel = scales.kinetic_constant() * slide_kernel(reg, z, anchor.z0, scales);
    const complex denom = 1.0 - tau0 * kernel;
    if (std::abs(denom) < tol.pole_proximity) {
        double pole = z.re();
        if (std::holds_alternative<PureDelta>(reg)) {
            // 1/tau0 = ln(z_p / z0) / 4 pi
            pole = (anchor.z0.value() * std::exp(kFourPi / tau0)).real();
        }
        throw PoleSingularity("sliding relation hit a pole of the amplitude", pole);
    }
    return {tau0 / denom, anchor.tau0.provenance};
}

Amplitude tau_renormalized(double binding_energy, const ComplexEnergy& z, const Tolerances& tol) {
    if (!(binding_energy > 0.0) || !std::isfinite(binding_energy)) {
        throw DomainError("renormalized amplitude requires E_B > 0");
    }
    const complex log_ratio = principal_log_ratio(ComplexEnergy::above(-binding_energy), z);
    if (std::abs(log_ratio) < tol.pole_proximity) {
        throw PoleSingularity("renormalized amplitude evaluated at z = -E_B", -binding_energy);
    }
    return {kFourPi / log_ratio, Provenance::Computed};
}

BoundStateOutcome bound_state_pole(const Coupling& eps, const Regulator& reg, const PhysicalScales& scales,
                                   const Tolerances& tol) {
    require_separable(reg, "bound_state_pole");
    if (std::holds_alternative<PureDelta>(reg)) {
        return {std::nullopt, Provenance::NoScatteringTheorem};
    }
    const double e = eps.epsilon();
    const double scale = characteristic_energy(reg, scales);
    auto h = [&](double u) {
        return 1.0 + e * i_function(reg, ComplexEnergy::above(-std::exp(u)), scales).real();
    };

    // h increases with E: -inf at E -> 0, positive beyond the pole.
    double lo = std::log(scale) + std::log(1e-300);
    double hi = std::log(scale);
    double h_lo = h(lo);
    double h_hi = h(hi);
    if (!(h_lo < 0.0) || !(h_hi > 0.0)) {
        throw NoBoundStateError("no bound-state root bracketed in (1e-300, 1) x characteristic energy");
    }

    while (hi - lo > 1e-3) {
        const double mid = 0.5 * (lo + hi);
        const double h_mid = h(mid);
        if (h_mid == 0.0) {
            lo = hi = mid;
            break;
        }
        (h_mid < 0.0 ? lo : hi) = mid;
        (h_mid < 0.0 ? h_lo : h_hi) = h_mid;
    }

    // Illinois-modified secant inside the bracket.
    double root = 0.5 * (lo + hi);
    double best = std::abs(h(root));
    int side = 0;
    for (int iter = 0; iter < 200 && hi > lo; ++iter) {
        const double width_goal = tol.pole_search * std::max(1.0, std::abs(root)) * 1e-3;
        if (hi - lo <= width_goal) {
            break;
        }
        double next = (lo * h_hi - hi * h_lo) / (h_hi - h_lo);
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        const double h_next = h(next);
        if (std::abs(h_next) <= best) {
            best = std::abs(h_next);
            root = next;
        }
        if (h_next == 0.0) {
            break;
        }
        if (h_next < 0.0) {
            lo = next;
            h_lo = h_next;
            if (side == -1) {
                h_hi *= 0.5;
            }
            side = -1;
        } else {
            hi = next;
            h_hi = h_next;
            if (side == +1) {
                h_lo *= 0.5;
            }
            side = +1;
        }
        if (next == lo && next == hi) {
            break;
        }
        // Stop once the secant step no longer moves in floating point.
        if (std::nextafter(lo, hi) >= hi) {
            break;
        }
    }

    const double energy = std::exp(root);
    const double residue = -1.0 / i_derivative_below_threshold(reg, energy, scales);
    return {BoundState{energy, residue}, Provenance::Computed};
}

TheoremLimitResult theorem_limit_demo(const Coupling& eps, const ComplexEnergy& z, std::span<const double> cutoffs,
                                      const PhysicalScales& scales) {
    TheoremLimitResult out;
    const double zmod = z.modulus();
    double previous = 0.0;
    for (double lambda : cutoffs) {
        if (!(lambda > zmod)) {
            throw DomainError("cutoff schedule entries must exceed |z|");
        }
        if (!(lambda > previous)) {
            throw DomainError("cutoff schedule must be strictly increasing");
        }
        previous = lambda;
        out.cutoffs.push_back(lambda);
        out.amplitudes.push_back(tau_regulated(eps, make_sharp_cutoff(lambda), z, scales));
        out.log_bounds.push_back(kFourPi / std::log(lambda / zmod));
    }

    out.pole_region_cutoff = zmod * std::exp(kFourPi / eps.epsilon());

    std::vector<double> log_all;
    std::vector<double> inv_all;
    std::vector<double> log_tail;
    std::vector<double> inv_tail;
    out.monotone_full = true;
    out.monotone_beyond_pole = true;
    double last_all = std::numeric_limits<double>::infinity();
    double last_tail = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < out.cutoffs.size(); ++i) {
        const double mag = std::abs(out.amplitudes[i].tau);
        const double lnl = std::log(out.cutoffs[i]);
        if (!(mag < last_all)) {
            out.monotone_full = false;
        }
        last_all = mag;
        log_all.push_back(lnl);
        inv_all.push_back(1.0 / mag);
        if (out.cutoffs[i] > out.pole_region_cutoff) {
            if (!(mag < last_tail)) {
                out.monotone_beyond_pole = false;
            }
            last_tail = mag;
            log_tail.push_back(lnl);
            inv_tail.push_back(1.0 / mag);
        }
    }
    out.fit_slope_full = fit_line(log_all, inv_all).slope;
    out.fit_slope_beyond_pole = fit_line(log_tail, inv_tail).slope;
    return out;
}

std::vector<TransmutationStep> transmutation_limit_demo(double binding_energy, const ComplexEnergy& z, int steps,
                                                        const PhysicalScales& scales) {
    if (!(binding_energy > 0.0)) {
        throw DomainError("transmutation limit requires E_B > 0");
    }
    if (steps < 2) {
        throw DomainError("transmutation limit requires at least 2 steps");
    }
    const complex target = tau_renormalized(binding_energy, z).tau;
    std::vector<TransmutationStep> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int n = 1; n <= steps; ++n) {
        const double cutoff = binding_energy * std::pow(10.0, n);
        const Coupling coupling(kFourPi / std::log(cutoff / binding_energy));
        const Regulator reg = make_sharp_cutoff(cutoff);
        const Amplitude tau = tau_regulated(coupling, reg, z, scales);
        const auto pole = bound_state_pole(coupling, reg, scales);
        out.push_back({n, cutoff, coupling.epsilon(), tau, std::abs(tau.tau - target) / std::abs(target),
                       pole.state ? pole.state->binding_energy : std::numeric_limits<double>::quiet_NaN()});
    }
    return out;
}

}  // namespace transmute
