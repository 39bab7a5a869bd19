#include "transmute/oracle/well.hpp"

#include <cmath>

#include "transmute/errors.hpp"
#include "transmute/oracle/bessel.hpp"

namespace transmute::oracle {
namespace {

constexpr double kFirstZeroJ0 = 2.404825557695773;

void validate(const WellParameters& well) {
    if (!(well.radius > 0.0) || !(well.depth > 0.0) || !std::isfinite(well.radius) || !std::isfinite(well.depth)) {
        throw DomainError("circular well needs radius > 0 and depth > 0");
    }
}

}  // namespace

WellParameters WellParameters::from_coupling(double eps, double radius, const PhysicalScales& scales) {
    if (!(eps > 0.0) || !(radius > 0.0)) {
        throw DomainError("circular well needs eps > 0 and radius > 0");
    }
    return {radius, eps * scales.kinetic_constant() / (kPi * radius * radius)};
}

double WellParameters::coupling(const PhysicalScales& scales) const {
    return depth * kPi * radius * radius / scales.kinetic_constant();
}

double well_bound_state(const WellParameters& well, const PhysicalScales& scales) {
    validate(well);
    const double c = scales.kinetic_constant();
    const double a = well.radius;
    // Positive on the weak-binding side, negative on the deep side.
    auto matching = [&](double energy) {
        const double k_in = std::sqrt((well.depth - energy) / c);
        const double g = std::sqrt(energy / c);
        const double x = k_in * a;
        const double y = g * a;
        return k_in * bessel_j1(x) * bessel_k0_scaled(y) - g * bessel_k1_scaled(y) * bessel_j0(x);
    };

    const double x_max = std::sqrt(well.depth * a * a / c);
    double lo;
    double hi = std::log(well.depth * (1.0 - 1e-15));
    if (x_max <= kFirstZeroJ0) {
        lo = std::log(well.depth) + std::log(1e-300);
    } else {
        // The ground state has no interior node: k_in a below the first zero of J0.
        lo = std::log(well.depth - c * kFirstZeroJ0 * kFirstZeroJ0 / (a * a));
    }
    double m_lo = matching(std::exp(lo));
    double m_hi = matching(std::exp(hi));
    if (!(m_lo > 0.0) || !(m_hi < 0.0)) {
        throw NumericalFailure("circular-well matching root is not bracketed");
    }
    for (int iter = 0; iter < 400; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) {
            break;
        }
        const double m_mid = matching(std::exp(mid));
        if (m_mid == 0.0) {
            return std::exp(mid);
        }
        if (m_mid > 0.0) {
            lo = mid;
            m_lo = m_mid;
        } else {
            hi = mid;
            m_hi = m_mid;
        }
    }
    return std::exp(std::abs(m_lo) < std::abs(m_hi) ? lo : hi);
}

double well_phase_shift(const WellParameters& well, Wavenumber k, const PhysicalScales& scales) {
    validate(well);
    if (!(k.k > 0.0)) {
        throw DomainError("phase shift requires k > 0");
    }
    const double c = scales.kinetic_constant();
    const double a = well.radius;
    const double energy = c * k.k * k.k;
    const double k_in = std::sqrt((energy + well.depth) / c);
    const double j0_in = bessel_j0(k_in * a);
    const double dj_in = -k_in * bessel_j1(k_in * a);
    const double ka = k.k * a;
    // Cotangent form of the log-derivative match; no division by J0(k_in a).
    const double num = dj_in * bessel_j0(ka) + k.k * j0_in * bessel_j1(ka);
    const double den = dj_in * bessel_y0(ka) + k.k * j0_in * bessel_y1(ka);
    double delta = std::atan2(num, den);
    if (delta > 0.5 * kPi) {
        delta -= kPi;
    } else if (delta <= -0.5 * kPi) {
        delta += kPi;
    }
    return delta;
}

}  // namespace transmute::oracle
