#include <doctest.h>

#include <cmath>
#include <random>

#include "transmute/energy_plane.hpp"
#include "transmute/errors.hpp"

using namespace transmute;

TEST_CASE("complex energy construction") {
    CHECK_THROWS_AS(ComplexEnergy::interior(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(ComplexEnergy::interior(1.0, -1e-300), DomainError);
    CHECK_THROWS_AS(ComplexEnergy::interior(NAN, 1.0), DomainError);
    CHECK_THROWS_AS(ComplexEnergy::above(0.0), DomainError);
    CHECK_THROWS_AS(ComplexEnergy::above(INFINITY), DomainError);

    const auto b = ComplexEnergy::above(-2.0);
    CHECK(b.boundary());
    CHECK(b.arg() == kPi);
    CHECK(ComplexEnergy::above(3.0).arg() == 0.0);
    CHECK(ComplexEnergy::from_complex({1.0, 0.0}).boundary());
    CHECK_FALSE(ComplexEnergy::from_complex({1.0, 2.0}).boundary());
    CHECK(ComplexEnergy::interior(3.0, 4.0).modulus() == 5.0);
    CHECK(ComplexEnergy::interior(1.0, 1.0).scaled(4.0) == ComplexEnergy::interior(4.0, 4.0));
    CHECK_THROWS_AS(ComplexEnergy::interior(1.0, 1.0).scaled(0.0), DomainError);
    CHECK(ComplexEnergy::above(1.0).shifted(1.0) == ComplexEnergy::above(2.0));
}

TEST_CASE("physical scales") {
    CHECK_THROWS_AS(PhysicalScales(0.0), DomainError);
    CHECK_THROWS_AS(PhysicalScales(-1.0), DomainError);
    CHECK(PhysicalScales(2.0).free_density() == doctest::Approx(1.0 / (8.0 * kPi)));
}

TEST_CASE("principal log ratio examples") {
    const auto z = ComplexEnergy::interior(0.3, 0.7);
    CHECK(principal_log_ratio(z, z) == complex(0.0, 0.0));

    const complex r = principal_log_ratio(ComplexEnergy::above(1.5), ComplexEnergy::above(-1.5));
    CHECK(r.real() == 0.0);
    CHECK(r.imag() == -kPi);

    const auto z0 = ComplexEnergy::interior(0.0, 1.0);
    const auto z4 = ComplexEnergy::interior(0.0, std::exp(4.0));
    const complex four = principal_log_ratio(z4, z0);
    CHECK(four.real() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(four.imag() == 0.0);
}

TEST_CASE("principal log ratio: branch additivity and range") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> lm(-8.0, 8.0);
    std::uniform_real_distribution<double> ang(0.0, kPi);
    std::bernoulli_distribution edge(0.2);
    auto draw = [&] {
        const double r = std::exp(lm(rng));
        if (edge(rng)) {
            return ComplexEnergy::above(edge(rng) ? r : -r);
        }
        double t = ang(rng);
        if (t == 0.0) t = 0.5;
        return ComplexEnergy::interior(r * std::cos(t), r * std::sin(t));
    };
    for (int i = 0; i < 2000; ++i) {
        const auto a = draw();
        const auto b = draw();
        const auto c = draw();
        const complex lhs = principal_log_ratio(c, b) + principal_log_ratio(b, a);
        const complex rhs = principal_log_ratio(c, a);
        CHECK(std::abs(lhs - rhs) <= 1e-13);
        CHECK(std::abs(rhs.imag()) <= kPi);
    }
}

TEST_CASE("wavenumber") {
    CHECK(wavenumber(4.0).k == 2.0);
    CHECK(wavenumber(1.0).k == 1.0);
    CHECK(wavenumber(1.0, PhysicalScales(4.0)).k == 0.5);
    CHECK_THROWS_AS(wavenumber(0.0), DomainError);
    CHECK_THROWS_AS(wavenumber(-1.0), DomainError);
}
