#include <doctest.h>

#include <cmath>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "transmute/amplitude.hpp"
#include "transmute/errors.hpp"
#include "transmute/observables.hpp"
#include "transmute/oracle/bessel.hpp"
#include "transmute/oracle/quadrature.hpp"
#include "transmute/oracle/well.hpp"

using namespace transmute;
using namespace transmute::oracle;

namespace {

std::vector<double> bessel_grid() {
    std::vector<double> xs;
    for (int i = 0; i <= 400; ++i) {
        xs.push_back(std::exp(std::log(1e-6) + (std::log(700.0) - std::log(1e-6)) * i / 400.0));
    }
    for (double x : {2.0, 19.99, 20.0, 20.01, 24.99, 25.0, 25.01}) {
        xs.push_back(x);
    }
    return xs;
}

// Interior log-derivative R'(a)/R(a) of the regular radial solution, by
// direct integration of R'' + R'/r + q2 R = 0.
double interior_log_derivative(double q2, double a) {
    using State = std::vector<double>;
    const double r0 = 1e-6 * a;
    State y = {1.0 - q2 * r0 * r0 / 4.0, -q2 * r0 / 2.0};
    auto rhs = [q2](const State& s, State& d, double r) {
        d[0] = s[1];
        d[1] = -s[1] / r - q2 * s[0];
    };
    namespace ode = boost::numeric::odeint;
    auto stepper = ode::make_controlled(1e-12, 1e-12, ode::runge_kutta_dopri5<State>());
    ode::integrate_adaptive(stepper, rhs, y, r0, a, 1e-3 * a);
    return y[1] / y[0];
}

double odeint_bound_state(const WellParameters& w) {
    auto mismatch = [&](double u) {
        const double e = std::exp(u);
        const double g = std::sqrt(e);
        const double lhs = interior_log_derivative(w.depth - e, w.radius);
        const double rhs = -g * boost::math::cyl_bessel_k(1, g * w.radius) / boost::math::cyl_bessel_k(0, g * w.radius);
        return lhs - rhs;
    };
    const double hi = std::log(w.depth * (1.0 - 1e-12));
    double lo = hi - 1.0;
    while (mismatch(lo) * mismatch(hi) > 0.0) {
        lo -= 1.0;
    }
    auto r = boost::math::tools::bisect(mismatch, lo, hi, boost::math::tools::eps_tolerance<double>(45));
    return std::exp(0.5 * (r.first + r.second));
}

}  // namespace

TEST_CASE("bessel functions against boost") {
    for (double x : bessel_grid()) {
        const double env = std::min(1.0, std::sqrt(2.0 / (kPi * x)));
        CHECK(std::abs(bessel_j0(x) - boost::math::cyl_bessel_j(0, x)) <= 1e-10 * env);
        CHECK(std::abs(bessel_j1(x) - boost::math::cyl_bessel_j(1, x)) <= 1e-10 * env);
        const double y0 = boost::math::cyl_neumann(0, x);
        const double y1 = boost::math::cyl_neumann(1, x);
        CHECK(std::abs(bessel_y0(x) - y0) <= 1e-10 * std::max(env, std::abs(y0)));
        CHECK(std::abs(bessel_y1(x) - y1) <= 1e-10 * std::max(env, std::abs(y1)));
        CHECK(std::abs(bessel_k0(x) / boost::math::cyl_bessel_k(0, x) - 1.0) <= 1e-10);
        CHECK(std::abs(bessel_k1(x) / boost::math::cyl_bessel_k(1, x) - 1.0) <= 1e-10);
        CHECK(std::abs(bessel_k0_scaled(x) / (std::exp(x) * boost::math::cyl_bessel_k(0, x)) - 1.0) <= 1e-10);
    }
}

TEST_CASE("bessel special values and domains") {
    CHECK(bessel_j0(0.0) == 1.0);
    CHECK(bessel_j1(0.0) == 0.0);
    CHECK(std::abs(bessel_j0(2.404825557695773)) <= 1e-10);
    for (double x : {0.1, 1.0, 10.0, 100.0}) {
        const double w = bessel_j0(x) * bessel_y1(x) - bessel_j1(x) * bessel_y0(x);
        CHECK(std::abs(w + 2.0 / (kPi * x)) <= 1e-10 * 2.0 / (kPi * x));
    }
    CHECK_THROWS_AS(bessel_j0(-1.0), DomainError);
    CHECK_THROWS_AS(bessel_y0(0.0), DomainError);
    CHECK_THROWS_AS(bessel_k1(0.0), DomainError);
    // Far beyond the unscaled range the scaled form stays finite.
    CHECK(std::isfinite(bessel_k0_scaled(1e5)));
    CHECK(bessel_k0_scaled(1e5) == doctest::Approx(std::sqrt(kPi / 2e5)).epsilon(1e-5));
}

TEST_CASE("adaptive quadrature") {
    const auto r = integrate([](double x) { return complex(std::cos(x), std::sin(x)); }, 0.0, 10.0);
    CHECK(std::abs(r.value - complex(std::sin(10.0), 1.0 - std::cos(10.0))) <= 1e-12);
    const auto inf = integrate_to_infinity([](double x) { return complex(std::exp(-x)); }, 0.0, 1.0);
    CHECK(std::abs(inf.value - 1.0) <= 1e-12);

    QuadratureSpec tight;
    tight.rel_tol = 1e-15;
    tight.max_subdivisions = 64;
    CHECK_THROWS_AS(integrate([](double x) { return complex(1.0 / std::abs(x - 0.3)); }, 0.0, 1.0, tight),
                    PrecisionFailure);
    QuadratureSpec bad;
    bad.max_subdivisions = 10;
    CHECK_THROWS_AS(integrate([](double) { return complex(1.0); }, 0.0, 1.0, bad), DomainError);
    CHECK_THROWS_AS(quadrature_g(PureDelta{}, ComplexEnergy::interior(0.0, 1.0)), DivergenceError);
    CHECK_THROWS_AS(quadrature_g(make_circular_well(1.0), ComplexEnergy::interior(0.0, 1.0)), UnsupportedRegulatorError);
}

TEST_CASE("well bound state") {
    const auto w = WellParameters::from_coupling(4.0 * kPi, 1.0);
    CHECK(w.depth == doctest::Approx(4.0));
    CHECK(w.coupling() == doctest::Approx(4.0 * kPi));
    const double eb = well_bound_state(w);
    CHECK(eb > 0.0);
    CHECK(eb < w.depth);
    CHECK(eb == doctest::Approx(odeint_bound_state(w)).epsilon(1e-7));
    CHECK(eb == doctest::Approx(1.6646535706198899).epsilon(1e-12));

    for (double e : {0.5, 1.0, 2.0, 5.0}) {
        const auto p = WellParameters::from_coupling(e, 1.0);
        CHECK(well_bound_state(p) == doctest::Approx(odeint_bound_state(p)).epsilon(1e-6));
    }

    // V0 -> 4 V0, a -> a / 2: E_B -> 4 E_B.
    const WellParameters scaled{0.5, 4.0 * w.depth};
    CHECK(well_bound_state(scaled) == doctest::Approx(4.0 * eb).epsilon(1e-12));
    CHECK_THROWS_AS(well_bound_state(WellParameters{1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(WellParameters::from_coupling(-1.0, 1.0), DomainError);
}

TEST_CASE("well phase shift") {
    const auto w = WellParameters::from_coupling(1.3, 1.0);
    for (double k : {1e-4, 0.01, 0.3, 1.0, 3.0, 10.0}) {
        const double delta = well_phase_shift(w, Wavenumber{k});
        CHECK(delta > -kPi / 2);
        CHECK(delta <= kPi / 2);
        const double l = interior_log_derivative(w.depth + k * k, w.radius);
        const double num = l * boost::math::cyl_bessel_j(0, k) + k * boost::math::cyl_bessel_j(1, k);
        const double den = l * boost::math::cyl_neumann(0, k) + k * boost::math::cyl_neumann(1, k);
        CHECK(std::tan(delta) == doctest::Approx(num / den).epsilon(1e-7));
    }
    // Weak well: no phase shift.
    CHECK(std::abs(well_phase_shift(WellParameters{1.0, 1e-12}, Wavenumber{1.0})) <= 1e-11);
    // A well deep enough that J0(k_in a) changes sign inside is still finite.
    CHECK(std::isfinite(well_phase_shift(WellParameters{1.0, 2.404825557695773 * 2.404825557695773}, Wavenumber{1e-3})));
}

TEST_CASE("well low-energy form") {
    const auto w = WellParameters::from_coupling(1.0, 1.0);
    const double eb = well_bound_state(w);
    double acc = 0.0;
    int n = 0;
    for (double k = 1e-6; k <= 1e-3; k *= 2.0) {
        acc += std::log(k * k) - kPi / std::tan(well_phase_shift(w, Wavenumber{k}));
        ++n;
    }
    const double fitted = std::exp(acc / n);
    CHECK(std::abs(fitted / eb - 1.0) <= 0.05);
    // Resonance: delta near pi/2 at E = E_B.
    CHECK(std::abs(well_phase_shift(w, wavenumber(fitted)) - kPi / 2) <= 1e-2);
}
