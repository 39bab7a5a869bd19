// Exponential integral E1 on the principal branch, scaled by exp(w) so the
// Gaussian form-factor resolvent never overflows. Power series near the
// origin and in the left half plane, modified-Lentz continued fraction in
// the intermediate annulus, asymptotic series for |w| >= 40.

#include <cmath>
#include <complex>
#include <limits>

#include "transmute/errors.hpp"
#include "transmute/regulators.hpp"

namespace transmute {
namespace {

using lcomplex = std::complex<long double>;

constexpr long double kGammaL = 0.577215664901532860606512090082402431L;
constexpr double kAsymptoticRadius = 40.0;

complex e1_series(complex w) {
    const lcomplex lw(w.real(), w.imag());
    lcomplex term = 1.0L;
    lcomplex sum = 0.0L;
    for (int n = 1; n < 500; ++n) {
        term *= -lw / static_cast<long double>(n);
        const lcomplex add = term / static_cast<long double>(n);
        sum += add;
        if (std::abs(add) <= std::abs(sum) * 1e-19L) {
            break;
        }
    }
    const lcomplex e1 = -kGammaL - std::log(lw) - sum;
    const lcomplex scaled = std::exp(lw) * e1;
    return {static_cast<double>(scaled.real()), static_cast<double>(scaled.imag())};
}

// exp(w) E1(w) = 1/(w+1- 1/(w+3- 4/(w+5- ...)))
complex e1_continued_fraction(complex w) {
    constexpr double tiny = 1e-300;
    complex b = w + 1.0;
    complex c = 1.0 / tiny;
    complex d = 1.0 / b;
    complex h = d;
    for (int i = 1; i < 20000; ++i) {
        const double a = -static_cast<double>(i) * i;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        const complex delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) {
            return h;
        }
    }
    throw NumericalFailure("exponential integral continued fraction did not converge");
}

complex e1_asymptotic(complex w) {
    complex term = 1.0;
    complex sum = 1.0;
    double last = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= -static_cast<double>(n) / w;
        const double mag = std::abs(term);
        if (mag > last) {
            break;
        }
        sum += term;
        last = mag;
        if (mag < 1e-17) {
            break;
        }
    }
    return sum / w;
}

}  // namespace

complex scaled_exp_integral_e1(complex w) {
    const double r = std::abs(w);
    if (r == 0.0) {
        throw SingularInputError("E1 is singular at the origin");
    }
    if (w.imag() == 0.0 && w.real() < 0.0) {
        throw DomainError("E1 evaluated on its branch cut; use the boundary form");
    }
    if (r >= kAsymptoticRadius) {
        return e1_asymptotic(w);
    }
    if (r <= 5.0 || w.real() < -2.0 * std::abs(w.imag())) {
        return e1_series(w);
    }
    return e1_continued_fraction(w);
}

complex scaled_exp_integral_e1_below_cut(double x) {
    if (!(x > 0.0)) {
        throw DomainError("boundary E1 form requires x > 0");
    }
    // exp(-x) Ei(x)
    double scaled_ei = 0.0;
    if (x <= kAsymptoticRadius) {
        long double term = 1.0L;
        long double sum = 0.0L;
        const long double lx = x;
        for (int n = 1; n < 1000; ++n) {
            term *= lx / static_cast<long double>(n);
            const long double add = term / static_cast<long double>(n);
            sum += add;
            if (add <= sum * 1e-19L) {
                break;
            }
        }
        scaled_ei = static_cast<double>(std::exp(-lx) * (kGammaL + std::log(lx) + sum));
    } else {
        double term = 1.0;
        double sum = 1.0;
        for (int n = 1; n < 200; ++n) {
            const double next = term * n / x;
            if (next > term || next < 1e-17) {
                break;
            }
            term = next;
            sum += term;
        }
        scaled_ei = sum / x;
    }
    return {-scaled_ei, kPi * std::exp(-x)};
}

}  // namespace transmute
