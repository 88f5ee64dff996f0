#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

#include "sppspec/bloch.hpp"
#include "sppspec/pipeline.hpp"

using namespace sppspec;
namespace pi = std::numbers;
using namespace std::complex_literals;

namespace {

Problem free_problem(std::size_t grid = 2000, int order = 60) {
    auto pot = make_potential(GridFunction::sample([](double) { return 0.0; }, pi::pi, grid));
    return build_problem(std::move(pot), order);
}

} // namespace

TEST_CASE("matching constants for the free particle at lambda = 1/4") {
    // f1(T) = cos(pi/2) = 0, f2(T) = 2 sin(pi/2) = 2, f2'(T) = 0, D = 0;
    // the combinations e^{+-ix/2} have coefficients -+i/2.
    auto [ap, am] = matching_constants(0.0, 2.0, 0.0, 0.0);
    CHECK(std::abs(ap - (-0.5i)) < 1e-14);
    CHECK(std::abs(am - (+0.5i)) < 1e-14);
}

TEST_CASE("matching constants: sum identity and degenerate rejection") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (int it = 0; it < 50; ++it) {
        const double f1T = d(rng), f2pT = d(rng);
        const double f2T = d(rng) + 2.5; // keep away from zero
        const double D = f1T + f2pT;
        auto [ap, am] = matching_constants(f1T, f2T, f2pT, D);
        CHECK(std::abs(ap + am - Complex((f2pT - f1T) / f2T)) < 1e-12);
    }
    CHECK_THROWS_AS(matching_constants(1.0, 1e-15, 1.0, 2.0), DegenerateMatching);
}

TEST_CASE("bloch factors at the markers") {
    auto [b2p, b2m] = bloch_factors(2.0);
    CHECK(b2p == Complex(1.0));
    CHECK(b2m == Complex(1.0));
    auto [bap, bam] = bloch_factors(-2.0);
    CHECK(bap == Complex(-1.0));
    CHECK(bam == Complex(-1.0));
    auto [b0p, b0m] = bloch_factors(0.0);
    CHECK(std::abs(b0p - (-1.0i)) < 1e-15);
    CHECK(std::abs(b0m - (+1.0i)) < 1e-15);
    // product one and band modulus one
    for (double D : {-1.9, -0.3, 0.4, 1.99, 2.7, -5.0, 12.0}) {
        auto [bp, bm] = bloch_factors(D);
        CHECK(std::abs(bp * bm - 1.0) < 1e-10);
        if (std::fabs(D) < 2.0) {
            CHECK(std::fabs(std::abs(bp) - 1.0) < 1e-10);
            CHECK(bp.imag() <= 0.0);
            CHECK(std::abs(bp - std::conj(bm)) < 1e-12);
        }
    }
    // decaying branch for D > 2
    auto [bgp, bgm] = bloch_factors(3.0);
    CHECK(std::abs(bgp) < 1.0);
    CHECK(std::abs(bgm) > 1.0);
}

TEST_CASE("quasimomentum") {
    CHECK(quasimomentum(2.0, pi::pi) == Complex(0.0));
    CHECK(std::abs(quasimomentum(-2.0, pi::pi) - Complex(1.0)) < 1e-15); // pi/T = 1
    // free dispersion at lambda = 1/4: k = sqrt(lambda)
    CHECK(std::abs(quasimomentum(0.0, pi::pi) - Complex(0.5)) < 1e-15);
    // outside the band the imaginary part carries the growth rate
    const auto k = quasimomentum(3.0, pi::pi);
    const auto [bp, bm] = bloch_factors(3.0);
    CHECK(std::fabs(std::fabs(k.imag()) * pi::pi - std::log(std::abs(bm))) < 1e-12);
}

TEST_CASE("free bloch wave: extension identities in a band") {
    auto pr = free_problem();
    auto sol = build_bloch(pr.table, 0.25);
    CHECK_FALSE(sol.used_fallback);
    CHECK(std::abs(sol.alpha_plus - (-0.5i)) < 1e-9);
    CHECK(std::abs(sol.beta_plus - (-1.0i)) < 1e-9);

    // x = 0 is the cell value
    CHECK(extend(sol, Branch::plus, 0.0) == sol.cell_plus.front());
    // x = T: beta times the start equals the cell end
    const Complex vT = extend(sol, Branch::plus, pi::pi);
    CHECK(std::abs(vT - sol.beta_plus * sol.cell_plus.front()) < 1e-12);
    CHECK(std::abs(sol.cell_plus.back() - sol.beta_plus * sol.cell_plus.front()) < 1e-9);

    // quasi-periodicity across random points, both directions
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> xd(-2.0 * pi::pi, 3.0 * pi::pi);
    for (int it = 0; it < 60; ++it) {
        const double x = xd(rng);
        const Complex a = extend(sol, Branch::plus, x + pi::pi);
        const Complex b = sol.beta_plus * extend(sol, Branch::plus, x);
        CHECK(std::abs(a - b) < 1e-8);
    }

    // in-band modulus is x-independent over many cells
    double mn = 1e300, mx = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double x = 2.0 * pi::pi * i / 400.0;
        const double m = std::abs(extend(sol, Branch::plus, x));
        mn = std::min(mn, m);
        mx = std::max(mx, m);
    }
    CHECK(mx - mn < 1e-8);
}

TEST_CASE("monodromy consistency and conjugate matching in bands") {
    auto pr = razavy_problem({1.0, 2}, 2000, 60);
    for (double lam : {0.05, 0.1, 3.5}) { // mu values inside the first bands
        const auto f = f_pair_grid(pr.table, lam);
        const double D = f.v1.back() + f.d2.back();
        if (std::fabs(D) >= 2.0) continue;
        auto sol = build_bloch(pr.table, lam);
        // f1(T) + alpha f2(T) = beta (the denominator at 0 is exactly 1)
        const Complex lhs = f.v1.back() + sol.alpha_plus * f.v2.back();
        CHECK(std::abs(lhs - sol.beta_plus) < 1e-9);
        CHECK(std::abs(sol.alpha_plus - std::conj(sol.alpha_minus)) < 1e-10);
        CHECK(std::fabs(std::abs(sol.beta_plus) - 1.0) < 1e-10);
        CHECK(std::abs(sol.beta_plus * sol.beta_minus - 1.0) < 1e-10);
    }
}

TEST_CASE("gap extension grows and decays by |beta| per cell") {
    auto pr = free_problem();
    auto sol = build_bloch(pr.table, -1.0); // D = 2 cosh(pi) > 2
    const double ratio = std::abs(sol.beta_plus);
    CHECK(ratio < 1.0); // decaying branch for D > 2
    for (int cell = 0; cell < 5; ++cell) {
        const double x = 0.3 + cell * pi::pi;
        const Complex a = extend(sol, Branch::plus, x + pi::pi);
        const Complex b = extend(sol, Branch::plus, x);
        CHECK(std::abs(a) / std::abs(b) == doctest::Approx(ratio).epsilon(1e-8));
        const Complex c = extend(sol, Branch::minus, x + pi::pi);
        const Complex d = extend(sol, Branch::minus, x);
        CHECK(std::abs(c) / std::abs(d) == doctest::Approx(1.0 / ratio).epsilon(1e-8));
    }
}

TEST_CASE("spinor assembly: free particle") {
    auto pr = free_problem(2000, 80);
    // band interior: exact plane-wave structure
    {
        const double mu = 5.0;
        auto sp = assemble_spinor(pr.table, mu, +1);
        CHECK(sp.omega == doctest::Approx(std::sqrt(mu)).epsilon(1e-15));
        double mn = 1e300, mx = 0.0, worst = 0.0;
        for (std::size_t j = 0; j < sp.upper_plus.size(); j += 5) {
            const double m = std::abs(sp.upper_plus[j]);
            mn = std::min(mn, m);
            mx = std::max(mx, m);
            const Complex lhs = sp.omega * sp.lower_plus[j];
            const Complex rhs = sp.dupper_plus[j] + pr.table.phi[j] * sp.upper_plus[j];
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        CHECK(mx - mn < 1e-8);
        CHECK(worst < 1e-7);
    }
    // approaching the closed gap at mu = 4 the combinations tend to the
    // plane waves e^{+-2ix}; the matching degenerates like sqrt(distance)
    {
        const double mu = 4.0 - 1e-6;
        auto sp = assemble_spinor(pr.table, mu, +1);
        double mn = 1e300, mx = 0.0;
        for (std::size_t j = 0; j < sp.upper_plus.size(); j += 10) {
            const double m = std::abs(sp.upper_plus[j]);
            mn = std::min(mn, m);
            mx = std::max(mx, m);
        }
        CHECK(mx - mn < 5e-3);
        CHECK(std::abs(sp.a_plus - Complex(0.0, 2.0)) < 5e-3); // limiting combination e^{+2ix}
    }
}

TEST_CASE("spinor assembly on a razavy band satisfies the first-order system") {
    auto pr = razavy_problem({2.0, 2}, 2000, 80);
    // first band above lambda = 4: mu in (6.47, 8.94); pick the middle
    const double mu = 7.5;
    auto sp = assemble_spinor(pr.table, mu, +1);
    double worst = 0.0;
    for (std::size_t j = 0; j < sp.upper_plus.size(); j += 3) {
        const Complex lhs = sp.omega * sp.lower_plus[j];
        const Complex rhs = sp.dupper_plus[j] + pr.table.phi[j] * sp.upper_plus[j];
        worst = std::max(worst, std::abs(lhs - rhs));
        const Complex lhs2 = sp.omega * sp.lower_minus[j];
        const Complex rhs2 = sp.dupper_minus[j] + pr.table.phi[j] * sp.upper_minus[j];
        worst = std::max(worst, std::abs(lhs2 - rhs2));
    }
    CHECK(worst < 1e-7);

    // second component equation -g' + phi g = omega f via central differences
    const double h = pr.table.u.spacing();
    double worst_fd = 0.0;
    for (std::size_t j = 1; j + 1 < sp.lower_plus.size(); j += 7) {
        const Complex gp = (sp.lower_plus[j + 1] - sp.lower_plus[j - 1]) / (2.0 * h);
        worst_fd = std::max(worst_fd,
                            std::abs(-gp + pr.table.phi[j] * sp.lower_plus[j] - sp.omega * sp.upper_plus[j]));
    }
    CHECK(worst_fd < 1e-4); // h^2-limited

    // self-matching across the period, both components
    CHECK(std::abs(sp.upper_plus.back() - sp.beta_plus * sp.upper_plus.front()) < 1e-8);
    CHECK(std::abs(sp.lower_plus.back() - sp.beta_plus * sp.lower_plus.front()) < 1e-8);

    // upper component normalized to 1 at x = 0
    CHECK(std::abs(sp.upper_plus.front() - 1.0) < 1e-14);

    // the independently matched g coefficients generally differ from the f ones
    CHECK(std::abs(sp.a_plus - sp.b_plus) > 1e-6);
}

TEST_CASE("spinor assembly rejects negative and zero frequency squared") {
    auto pr = free_problem(800, 20);
    CHECK_THROWS_AS(assemble_spinor(pr.table, -1.0, +1), std::invalid_argument);
    CHECK_THROWS_AS(assemble_spinor(pr.table, 0.0, +1), std::invalid_argument);
}

TEST_CASE("identity monodromy at a closed edge returns the periodic solution") {
    auto pr = free_problem(2000, 80);
    // mu = 4 is a closed gap: monodromy is the identity
    auto sol = build_bloch(pr.table, 4.0);
    CHECK(sol.used_fallback);
    CHECK(sol.identity_monodromy);
    // extension is exactly periodic (beta = 1 up to rounding)
    const Complex a = extend(sol, Branch::plus, 0.7);
    const Complex b = extend(sol, Branch::plus, 0.7 + pi::pi);
    CHECK(std::abs(a - b) < 1e-7);
}
