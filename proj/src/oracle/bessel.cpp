#include "transmute/oracle/bessel.hpp"

#include <cmath>

#include "transmute/energy_plane.hpp"
#include "transmute/errors.hpp"

namespace transmute::oracle {
namespace {

constexpr double kSeriesLimitJY = 20.0;
constexpr double kSeriesLimitK = 2.0;
constexpr double kAsymptoticLimitK = 25.0;
constexpr long double kGammaL = 0.577215664901532860606512090082402431L;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Sums of the ascending series in q = x^2 / 4 with sign = -1 (J, Y) or +1 (I, K).
// plain0 = sum s^k q^k / (k!)^2
// plain1 = sum s^k q^k / (k! (k+1)!)
// harm0  = sum_{k>=1} H_k s^k q^k / (k!)^2
// psi1   = sum (psi(k+1) + psi(k+2)) s^k q^k / (k! (k+1)!)
struct AscendingSums {
    long double plain0 = 0.0L;
    long double plain1 = 0.0L;
    long double harm0 = 0.0L;
    long double psi1 = 0.0L;
};

AscendingSums ascending_sums(double x, int sign) {
    const long double q = static_cast<long double>(x) * x / 4.0L;
    AscendingSums s;
    long double t0 = 1.0L;  // s^k q^k / (k!)^2
    long double t1 = 1.0L;  // s^k q^k / (k! (k+1)!)
    long double harmonic = 0.0L;
    s.plain0 = t0;
    s.plain1 = t1;
    s.psi1 = t1 * (-kGammaL + (1.0L - kGammaL));
    for (int k = 1; k < 200; ++k) {
        const long double lk = k;
        t0 *= sign * q / (lk * lk);
        t1 *= sign * q / (lk * (lk + 1.0L));
        harmonic += 1.0L / lk;
        const long double psi_k1 = harmonic - kGammaL;
        const long double psi_k2 = harmonic + 1.0L / (lk + 1.0L) - kGammaL;
        s.plain0 += t0;
        s.plain1 += t1;
        s.harm0 += harmonic * t0;
        s.psi1 += (psi_k1 + psi_k2) * t1;
        if (std::fabs(t0) * (harmonic + 2.0L) < 1e-22L * std::fabs(s.plain0) &&
            std::fabs(t1) * (harmonic + 2.0L) < 1e-22L * std::fabs(s.plain1) && k > 2) {
            break;
        }
        if (t0 == 0.0L && t1 == 0.0L) {
            break;
        }
    }
    return s;
}

// Hankel asymptotic series P, Q for order n; K-type sum when alternate == false.
struct HankelSums {
    double p;
    double q;
};

HankelSums hankel_sums(int n, double x) {
    const double mu = 4.0 * n * n;
    double term = 1.0;
    double p = 1.0;
    double q = 0.0;
    double last = 1.0;
    for (int k = 1; k < 100; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * 8.0 * x);
        const double mag = std::fabs(term);
        if (mag > last || mag < 1e-18) {
            break;
        }
        last = mag;
        // k = 1, 2, 3, 4, ... contribute +q, -p, -q, +p, ...
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            default: p += term; break;
        }
    }
    return {p, q};
}

double k_asymptotic_scaled(int n, double x) {
    const double mu = 4.0 * n * n;
    double term = 1.0;
    double sum = 1.0;
    double last = 1.0;
    for (int k = 1; k < 100; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (k * 8.0 * x);
        const double mag = std::fabs(term);
        if (mag > last || mag < 1e-18) {
            break;
        }
        last = mag;
        sum += term;
    }
    return std::sqrt(kPi / (2.0 * x)) * sum;
}

double k_trapezoid_scaled(int n, double x) {
    // Integrand is entire and decays double-exponentially; the trapezoidal
    // rule converges geometrically in 1/h.
    constexpr double h = 0.125;
    double sum = 0.5;
    for (int j = 1; j < 2000; ++j) {
        const double t = j * h;
        const double v = std::exp(-x * (std::cosh(t) - 1.0)) * std::cosh(n * t);
        sum += v;
        if (v < 1e-19 * sum) {
            break;
        }
    }
    return h * sum;
}

void check_positive(double x, const char* name) {
    if (!(x > 0.0)) {
        throw DomainError(std::string(name) + " requires x > 0");
    }
}

void check_nonnegative(double x, const char* name) {
    if (!(x >= 0.0)) {
        throw DomainError(std::string(name) + " requires x >= 0");
    }
}

// J_n and Y_n from the Hankel expansion, n in {0, 1}.
void jy_asymptotic(int n, double x, double* j, double* y) {
    const auto [p, q] = hankel_sums(n, x);
    const double c = std::cos(x);
    const double s = std::sin(x);
    const double r = 1.0 / std::sqrt(2.0);
    double cos_chi;
    double sin_chi;
    if (n == 0) {
        cos_chi = (c + s) * r;
        sin_chi = (s - c) * r;
    } else {
        cos_chi = (s - c) * r;
        sin_chi = -(s + c) * r;
    }
    const double amp = std::sqrt(2.0 / (kPi * x));
    if (j) *j = amp * (p * cos_chi - q * sin_chi);
    if (y) *y = amp * (p * sin_chi + q * cos_chi);
}

}  // namespace

double bessel_j0(double x) {
    check_nonnegative(x, "bessel_j0");
    if (x <= kSeriesLimitJY) {
        return static_cast<double>(ascending_sums(x, -1).plain0);
    }
    double j = 0.0;
    jy_asymptotic(0, x, &j, nullptr);
    return j;
}

double bessel_j1(double x) {
    check_nonnegative(x, "bessel_j1");
    if (x <= kSeriesLimitJY) {
        return static_cast<double>(0.5L * x * ascending_sums(x, -1).plain1);
    }
    double j = 0.0;
    jy_asymptotic(1, x, &j, nullptr);
    return j;
}

double bessel_y0(double x) {
    check_positive(x, "bessel_y0");
    if (x <= kSeriesLimitJY) {
        const auto s = ascending_sums(x, -1);
        const long double lg = std::log(0.5L * x) + kGammaL;
        return static_cast<double>((2.0L / kPiL) * (lg * s.plain0 - s.harm0));
    }
    double y = 0.0;
    jy_asymptotic(0, x, nullptr, &y);
    return y;
}

double bessel_y1(double x) {
    check_positive(x, "bessel_y1");
    if (x <= kSeriesLimitJY) {
        const auto s = ascending_sums(x, -1);
        const long double lx = x;
        const long double j1 = 0.5L * lx * s.plain1;
        return static_cast<double>(-2.0L / (kPiL * lx) + (2.0L / kPiL) * std::log(0.5L * lx) * j1 -
                                   (0.5L * lx / kPiL) * s.psi1);
    }
    double y = 0.0;
    jy_asymptotic(1, x, nullptr, &y);
    return y;
}

double bessel_k0_scaled(double x) {
    check_positive(x, "bessel_k0");
    if (x <= kSeriesLimitK) {
        const auto s = ascending_sums(x, +1);
        const long double lg = std::log(0.5L * x) + kGammaL;
        return static_cast<double>(std::exp(static_cast<long double>(x)) * (-lg * s.plain0 + s.harm0));
    }
    if (x < kAsymptoticLimitK) {
        return k_trapezoid_scaled(0, x);
    }
    return k_asymptotic_scaled(0, x);
}

double bessel_k1_scaled(double x) {
    check_positive(x, "bessel_k1");
    if (x <= kSeriesLimitK) {
        const auto s = ascending_sums(x, +1);
        const long double lx = x;
        const long double i1 = 0.5L * lx * s.plain1;
        const long double k1 = 1.0L / lx + std::log(0.5L * lx) * i1 - 0.25L * lx * s.psi1;
        return static_cast<double>(std::exp(lx) * k1);
    }
    if (x < kAsymptoticLimitK) {
        return k_trapezoid_scaled(1, x);
    }
    return k_asymptotic_scaled(1, x);
}

double bessel_k0(double x) { return bessel_k0_scaled(x) * std::exp(-x); }

double bessel_k1(double x) { return bessel_k1_scaled(x) * std::exp(-x); }

}  // namespace transmute::oracle
