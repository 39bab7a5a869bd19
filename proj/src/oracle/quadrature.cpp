#include "transmute/oracle/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "transmute/errors.hpp"

namespace transmute::oracle {
namespace {

// QUADPACK qk21 abscissae and weights.
constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077715229896620, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
};
constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
};

struct Panel {
    double a;
    double b;
    complex value;
    double error;
};

Panel gauss_kronrod(const ComplexIntegrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const complex fc = f(center);
    complex kronrod = fc * kWgk[10];
    complex gauss = 0.0;
    double abs_sum = std::abs(fc) * kWgk[10];
    complex fv1[10];
    complex fv2[10];
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const complex pair = fv1[j] + fv2[j];
        kronrod += kWgk[j] * pair;
        abs_sum += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) {
            gauss += kWg[j / 2] * pair;
        }
    }
    const complex mean = kronrod * 0.5;
    double asc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) {
        asc += kWgk[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    }
    const double resabs = abs_sum * std::abs(half);
    const double resasc = asc * std::abs(half);
    double err = std::abs((kronrod - gauss) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        err = std::max(50.0 * eps * resabs, err);
    }
    return {a, b, kronrod * half, err};
}

void validate(const QuadratureSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) {
        throw DomainError("quadrature tolerances must be positive");
    }
    if (spec.max_subdivisions < 64) {
        throw DomainError("quadrature needs max_subdivisions >= 64");
    }
}

QuadratureResult sum(QuadratureResult a, const QuadratureResult& b) {
    a.value += b.value;
    a.error += b.error;
    a.subdivisions += b.subdivisions;
    return a;
}

// Energy where the spectral weight support ends (inf if unbounded).
double support_end(const Regulator& reg) {
    if (const auto* s = std::get_if<SharpCutoff>(&reg)) {
        return s->lambda;
    }
    return std::numeric_limits<double>::infinity();
}

double natural_scale(const Regulator& reg, const PhysicalScales& scales, double fallback) {
    if (std::holds_alternative<GaussianFormFactor>(reg)) {
        return characteristic_energy(reg, scales);
    }
    return fallback;
}

void require_form_factor(const Regulator& reg, const char* op) {
    if (std::holds_alternative<CircularWell>(reg)) {
        throw UnsupportedRegulatorError(std::string(op) + ": circular-well has no separable form factor");
    }
}

// Integral of f over [a, end) splitting at the supplied interior points.
QuadratureResult integrate_piecewise(const ComplexIntegrand& f, double a, double end, std::vector<double> breaks,
                                     double tail_scale, const QuadratureSpec& spec) {
    std::erase_if(breaks, [&](double x) { return !(x > a && x < end); });
    std::sort(breaks.begin(), breaks.end());
    QuadratureResult total{0.0, 0.0, 0};
    double left = a;
    for (double x : breaks) {
        total = sum(total, integrate(f, left, x, spec));
        left = x;
    }
    if (std::isinf(end)) {
        total = sum(total, integrate_to_infinity(f, left, tail_scale, spec));
    } else if (end > left) {
        total = sum(total, integrate(f, left, end, spec));
    }
    return total;
}


struct PoleTerm {
    ComplexEnergy z;
    double sign;
};

// sum_j sign_j * int_0^end w(e) / (z_j - e) de. Boundary poles inside the
// support get a symmetric principal-value window, where the 1/s parts cancel
// pairwise, plus the -i pi w(E) term.
QuadratureResult resolvent_sum(const std::function<double(double)>& weight, const std::vector<PoleTerm>& terms,
                               double end, double tail_scale, const QuadratureSpec& spec) {
    auto term_value = [&](const PoleTerm& t, double e) -> complex { return t.sign * weight(e) / (t.z.value() - e); };
    std::vector<std::size_t> singular;
    for (std::size_t j = 0; j < terms.size(); ++j) {
        const auto& z = terms[j].z;
        if (!z.boundary() || z.re() < 0.0 || z.re() > end) {
            continue;
        }
        if (z.re() == end) {
            throw SingularInputError("g(z) is logarithmically singular at the support edge");
        }
        if (!spec.singularity_subtraction) {
            throw DomainError("boundary energies need singularity subtraction enabled");
        }
        singular.push_back(j);
    }

    struct Window {
        double center;
        double half;
        std::size_t term;
    };
    std::vector<Window> windows;
    for (std::size_t j : singular) {
        const double e = terms[j].z.re();
        double half = std::min(e, end - e);
        for (std::size_t k : singular) {
            if (k != j) {
                half = std::min(half, 0.5 * std::abs(e - terms[k].z.re()));
            }
        }
        if (!(half > 0.0)) {
            throw SingularInputError("coincident boundary poles in the resolvent quadrature");
        }
        windows.push_back({e, half, j});
    }
    std::sort(windows.begin(), windows.end(), [](const Window& l, const Window& r) { return l.center < r.center; });

    QuadratureResult total{0.0, 0.0, 0};
    for (const auto& w : windows) {
        const PoleTerm& pole = terms[w.term];
        auto window = [&](double s) -> complex {
            complex v = pole.sign * (weight(w.center - s) - weight(w.center + s)) / s;
            for (std::size_t k = 0; k < terms.size(); ++k) {
                if (k != w.term) {
                    v += term_value(terms[k], w.center - s) + term_value(terms[k], w.center + s);
                }
            }
            return v;
        };
        total = sum(total, integrate(window, 0.0, w.half, spec));
        total.value -= complex(0.0, pole.sign * kPi * weight(w.center));
    }

    auto regular = [&](double e) -> complex {
        complex v = 0.0;
        for (const auto& t : terms) {
            v += term_value(t, e);
        }
        return v;
    };
    std::vector<double> breaks;
    for (const auto& t : terms) {
        breaks.push_back(t.z.re());
    }
    double left = 0.0;
    for (const auto& w : windows) {
        if (w.center - w.half > left) {
            total = sum(total, integrate_piecewise(regular, left, w.center - w.half, breaks, tail_scale, spec));
        }
        left = w.center + w.half;
    }
    if (end > left) {
        total = sum(total, integrate_piecewise(regular, left, end, breaks, std::max(tail_scale, left), spec));
    }
    return total;
}

}  // namespace

QuadratureResult integrate(const ComplexIntegrand& f, double a, double b, const QuadratureSpec& spec) {
    validate(spec);
    if (a == b) {
        return {0.0, 0.0, 0};
    }
    std::vector<Panel> panels{gauss_kronrod(f, a, b)};
    auto totals = [&] {
        complex value = 0.0;
        double error = 0.0;
        for (const auto& p : panels) {
            value += p.value;
            error += p.error;
        }
        return std::pair{value, error};
    };
    for (;;) {
        const auto [value, error] = totals();
        if (!std::isfinite(value.real()) || !std::isfinite(value.imag()) || !std::isfinite(error)) {
            throw PrecisionFailure("integrand is not finite on the quadrature nodes", value.real(), value.imag(), error);
        }
        if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
            return {value, error, static_cast<int>(panels.size())};
        }
        if (static_cast<int>(panels.size()) >= spec.max_subdivisions) {
            throw PrecisionFailure("adaptive quadrature did not reach the requested tolerance", value.real(),
                                   value.imag(), error);
        }
        auto worst = std::max_element(panels.begin(), panels.end(),
                                      [](const Panel& l, const Panel& r) { return l.error < r.error; });
        const double mid = 0.5 * (worst->a + worst->b);
        if (!(mid > std::min(worst->a, worst->b) && mid < std::max(worst->a, worst->b))) {
            throw PrecisionFailure("adaptive quadrature exhausted floating-point resolution", value.real(),
                                   value.imag(), error);
        }
        const Panel left = gauss_kronrod(f, worst->a, mid);
        const Panel right = gauss_kronrod(f, mid, worst->b);
        *worst = left;
        panels.push_back(right);
    }
}

QuadratureResult integrate_to_infinity(const ComplexIntegrand& f, double a, double scale,
                                       const QuadratureSpec& spec) {
    if (!(scale > 0.0)) {
        throw DomainError("integrate_to_infinity requires a positive scale");
    }
    auto mapped = [&](double t) -> complex {
        const double one_minus = 1.0 - t;
        const double x = a + scale * t / one_minus;
        if (std::isinf(x)) {
            return 0.0;
        }
        return f(x) * (scale / (one_minus * one_minus));
    };
    return integrate(mapped, 0.0, 1.0, spec);
}

double shell_spectral_weight(const Regulator& reg, double energy, const PhysicalScales& scales) {
    require_form_factor(reg, "shell_spectral_weight");
    if (!(energy >= 0.0)) {
        throw DomainError("spectral weight requires E >= 0");
    }
    const double c = scales.kinetic_constant();
    const double k_shell = std::sqrt(energy / c);
    // |<k|v>|^2 as a function of the Cartesian momentum.
    auto form_factor = [&](double kx, double ky) -> double {
        const double k2 = kx * kx + ky * ky;
        if (const auto* s = std::get_if<SharpCutoff>(&reg)) {
            return c * k2 <= s->lambda * (1.0 + 1e-15) ? 1.0 : 0.0;
        }
        if (const auto* g = std::get_if<GaussianFormFactor>(&reg)) {
            return std::exp(-g->width * g->width * k2);
        }
        return 1.0;
    };
    // int d^2k/(2pi)^2 delta(E - c k^2) F = (1/(2pi)^2) int dtheta F(k_E, theta) / (2c)
    auto angular = [&](double theta) -> complex {
        return form_factor(k_shell * std::cos(theta), k_shell * std::sin(theta));
    };
    QuadratureSpec spec;
    spec.rel_tol = 1e-13;
    const double ring = integrate(angular, 0.0, 2.0 * kPi, spec).value.real();
    return ring / (4.0 * kPi * kPi * 2.0 * c);
}

QuadratureResult quadrature_g(const Regulator& reg, const ComplexEnergy& z, const QuadratureSpec& spec,
                              const PhysicalScales& scales) {
    require_form_factor(reg, "quadrature_g");
    if (std::holds_alternative<PureDelta>(reg)) {
        throw DivergenceError("g(z) diverges for the unregulated contact interaction");
    }
    auto weight = [&](double e) { return shell_spectral_weight(reg, e, scales); };
    return resolvent_sum(weight, {{z, 1.0}}, support_end(reg), natural_scale(reg, scales, 1.0), spec);
}

QuadratureResult quadrature_i(const Regulator& reg, const ComplexEnergy& z, const QuadratureSpec& spec,
                              const PhysicalScales& scales) {
    QuadratureResult r = quadrature_g(reg, z, spec, scales);
    r.value *= scales.kinetic_constant();
    r.error *= scales.kinetic_constant();
    return r;
}

QuadratureResult quadrature_slide_kernel(const Regulator& reg, const ComplexEnergy& z, const ComplexEnergy& z0,
                                         const QuadratureSpec& spec, const PhysicalScales& scales) {
    require_form_factor(reg, "quadrature_slide_kernel");
    if (z == z0) {
        return {0.0, 0.0, 0};
    }
    auto weight = [&](double e) { return shell_spectral_weight(reg, e, scales); };
    const double tail = natural_scale(reg, scales, std::max(z.modulus(), z0.modulus()));
    return resolvent_sum(weight, {{z, 1.0}, {z0, -1.0}}, support_end(reg), tail, spec);
}

QuadratureResult quadrature_decay_amplitude(const Regulator& reg, double t, const QuadratureSpec& spec,
                                            const PhysicalScales& scales) {
    require_form_factor(reg, "quadrature_decay_amplitude");
    if (!(t > 0.0)) {
        throw DomainError("decay amplitude requires t > 0");
    }
    if (std::holds_alternative<PureDelta>(reg)) {
        throw DivergenceError("the spectral integral of the pure delta does not converge absolutely");
    }
    auto integrand = [&](double e) -> complex {
        return shell_spectral_weight(reg, e, scales) * std::polar(1.0, -e * t);
    };
    return integrate_piecewise(integrand, 0.0, support_end(reg), {}, natural_scale(reg, scales, 1.0), spec);
}

double contour_residue(const std::function<complex(const ComplexEnergy&)>& upper, double pole, double radius,
                       int points) {
    if (!(radius > 0.0) || points < 4) {
        throw DomainError("contour residue needs a positive radius and >= 4 points");
    }
    double acc = 0.0;
    for (int j = 0; j < points; ++j) {
        const double theta = (j + 0.5) * kPi / points;
        const complex offset = std::polar(radius, theta);
        const complex zj = pole + offset;
        acc += (upper(ComplexEnergy::interior(zj.real(), zj.imag())) * offset).real();
    }
    return acc / points;
}

double richardson_residue(const std::function<complex(const ComplexEnergy&)>& upper, double pole, double r1,
                          double r2, int points) {
    const double a = contour_residue(upper, pole, r1, points);
    const double b = contour_residue(upper, pole, r2, points);
    return (r1 * b - r2 * a) / (r1 - r2);
}

}  // namespace transmute::oracle
