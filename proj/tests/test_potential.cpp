#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sppspec/potential.hpp"
#include "sppspec/quadrature.hpp"

using namespace sppspec;
namespace pi = std::numbers;

TEST_CASE("razavy parameter validation and well type") {
    CHECK_THROWS_AS(validate(RazavyParams{-1.0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(validate(RazavyParams{1.0, 0}), std::invalid_argument);
    CHECK(razavy_A(1.0) == doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-15));
    CHECK(razavy_well_type({1.0, 2}) == WellType::single_well);   // xi < 2(m+1) = 6
    CHECK(razavy_well_type({11.0, 2}) == WellType::double_well);
    CHECK(razavy_well_type({6.0, 2}) == WellType::threshold);
}

TEST_CASE("razavy phi vanishes at 0, T/2, T and has period pi") {
    for (double xi : {1.0, 2.0, 11.0, 20.0}) {
        auto pot = razavy_phi({xi, 2}, 5000);
        CAPTURE(xi);
        CHECK(std::fabs(pot.phi_at(0.0)) < 1e-14);
        CHECK(std::fabs(pot.phi_at(pi::pi / 2)) < 1e-13);
        CHECK(std::fabs(pot.phi_at(pi::pi)) < 1e-13);
        CHECK(std::fabs(pot.phi.front() - pot.phi.back()) < 1e-14 * std::max(1.0, pot.phi.max_abs()));
    }
}

TEST_CASE("razavy phi has zero mean") {
    // Antiderivative -(xi/4)cos2x - log(xi - A cos2x) is pi-periodic, so the
    // mean vanishes; check the quadrature agrees.
    auto pot = razavy_phi({2.0, 2}, 5000);
    CHECK(std::fabs(integrate(pot.phi)) < 1e-12);
}

TEST_CASE("razavy phi is odd about the half period") {
    auto pot = razavy_phi({3.0, 2});
    for (double s : {0.1, 0.4, 0.7, 1.2}) {
        CHECK(pot.phi_at(pi::pi / 2 + s) == doctest::Approx(-pot.phi_at(pi::pi / 2 - s)).epsilon(1e-12));
    }
}

TEST_CASE("razavy V1 point values") {
    auto v1 = razavy_v1({2.0, 2}, 4); // nodes at 0, pi/4, pi/2, ...
    CHECK(v1[0] == doctest::Approx(-6.0).epsilon(1e-15));  // (4/8)*0 - 3*2*1
    CHECK(v1[1] == doctest::Approx(1.0).epsilon(1e-14));   // (4/8)*2 - 0
}

TEST_CASE("V1 for m=2 equals phi^2 - phi' up to the family offset") {
    // The nodeless seed is the ground state of V1 at 2A, so
    // phi^2 - phi' = V1 - 2A; the offset is recorded on the potential.
    const double xi = 2.0;
    auto pot = razavy_phi({xi, 2}, 5000);
    auto v1 = razavy_v1({xi, 2}, 5000);
    const double off = pot.hill_offset;
    CHECK(off == doctest::Approx(2.0 * razavy_A(xi)).epsilon(1e-15));
    const double h = pot.phi.spacing();
    double worst = 0.0;
    for (std::size_t j = 2; j + 2 < pot.phi.size(); ++j) {
        const double dphi = (-pot.phi[j + 2] + 8 * pot.phi[j + 1] - 8 * pot.phi[j - 1] + pot.phi[j - 2]) / (12 * h);
        const double lhs = pot.phi[j] * pot.phi[j] - dphi;
        worst = std::max(worst, std::fabs(lhs - (v1[j] - off)));
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("V2 - V1 = 2 phi' and V2 is periodic") {
    for (double xi : {1.0, 2.0, 5.0}) {
        CAPTURE(xi);
        auto pot = razavy_phi({xi, 2}, 5000);
        auto v1 = razavy_v1({xi, 2}, 5000);
        auto v2 = razavy_v2({xi, 2}, 5000);
        const double h = pot.phi.spacing();
        double worst = 0.0;
        for (std::size_t j = 2; j + 2 < pot.phi.size(); ++j) {
            const double dphi =
                (-pot.phi[j + 2] + 8 * pot.phi[j + 1] - 8 * pot.phi[j - 1] + pot.phi[j - 2]) / (12 * h);
            worst = std::max(worst, std::fabs((v2[j] - v1[j]) - 2 * dphi));
        }
        CHECK(worst < 1e-8);
        CHECK(v2.front() == doctest::Approx(v2.back()).epsilon(1e-13));
    }
}

TEST_CASE("razavy V2 point value at the quarter period") {
    // cos2x = 0 there, so V2 = V1 + 2 phi'(pi/4) = 1 + 8 A^2 / xi^2.
    const double xi = 2.0;
    const double A = razavy_A(xi);
    auto v2 = razavy_v2({xi, 2}, 4);
    CHECK(v2[1] == doctest::Approx(1.0 + 8.0 * A * A / (xi * xi)).epsilon(1e-13));
}

TEST_CASE("razavy V2 requires m = 2") {
    CHECK_THROWS_AS(razavy_v2({1.0, 3}), std::invalid_argument);
    CHECK_NOTHROW(razavy_v1({1.0, 3})); // the family itself exists for any m
}

TEST_CASE("build_u: zero potential gives the constant 1") {
    auto pot = make_potential(GridFunction::sample([](double) { return 0.0; }, pi::pi, 100));
    auto u = build_u(pot);
    for (std::size_t j = 0; j < u.size(); ++j) CHECK(u[j] == 1.0);
}

TEST_CASE("build_u matches the closed form for the razavy family") {
    for (double xi : {1.0, 2.0}) {
        CAPTURE(xi);
        auto pot = razavy_phi({xi, 2}, 5000);
        auto u = build_u(pot);
        CHECK(u[0] == 1.0); // exact normalization
        const double A = razavy_A(xi);
        const double c0 = std::exp(xi / 4.0) * (xi - A);
        double worst = 0.0;
        for (std::size_t j = 0; j < u.size(); j += 7) {
            const double x = u.node(j);
            const double closed = std::exp(xi / 4.0 * std::cos(2 * x)) * (xi - A * std::cos(2 * x)) / c0;
            worst = std::max(worst, std::fabs(u[j] - closed));
        }
        CHECK(worst < 1e-9);
        CHECK(u.min_value() > 0.0);
        CHECK(std::fabs(u.back() - u.front()) < 1e-10);
    }
}

TEST_CASE("build_u satisfies u' + phi u = 0 on the grid") {
    auto pot = make_potential(GridFunction::sample([](double x) { return std::cos(2 * x); }, pi::pi, 2000),
                              [](double x) { return std::cos(2 * x); });
    auto u = build_u(pot);
    // closed form u = exp(-sin(2x)/2); u'(0) = -phi(0) u(0) = -1
    CHECK(u[1000] == doctest::Approx(std::exp(-std::sin(2 * u.node(1000)) / 2)).epsilon(1e-12));
    const double h = u.spacing();
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < u.size(); j += 13) {
        const double du = (u[j + 1] - u[j - 1]) / (2 * h);
        worst = std::max(worst, std::fabs(du + pot.phi[j] * u[j]));
    }
    CHECK(worst < 1e-5); // second-order differences against an O(1) slope
    const double du0 = (-3 * u[0] + 4 * u[1] - u[2]) / (2 * h);
    CHECK(du0 == doctest::Approx(-pot.phi[0] * u[0]).epsilon(1e-5));
}

TEST_CASE("nonzero-mean potentials are rejected with the measured integral") {
    auto bad = GridFunction::sample([](double x) { return std::sin(x) * std::sin(x); }, pi::pi, 200);
    CHECK_THROWS_WITH_AS(make_potential(bad), doctest::Contains("mean"), std::invalid_argument);
    PeriodicScalarPotential raw{bad, nullptr, 0.0};
    CHECK_THROWS_WITH_AS(build_u(raw), doctest::Contains("mean"), std::invalid_argument);
}
