#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>
#include <random>
#include <sstream>

#include "sppspec/grid_function.hpp"
#include "sppspec/io.hpp"
#include "sppspec/potential.hpp"
#include "sppspec/quadrature.hpp"

using namespace sppspec;
namespace pi = std::numbers;

TEST_CASE("sampling the zero function") {
    auto g = GridFunction::sample([](double) { return 0.0; }, pi::pi, 4);
    REQUIRE(g.size() == 5);
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(g[j] == 0.0);
}

TEST_CASE("sampling cos 2x at the quarter nodes") {
    auto g = GridFunction::sample([](double x) { return std::cos(2 * x); }, pi::pi, 4);
    CHECK(g[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::fabs(g[1]) < 1e-15);
    CHECK(g[2] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::fabs(g[3]) < 1e-15);
    CHECK(g[4] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("odd interval counts are bumped to even") {
    auto g = GridFunction::sample([](double x) { return x; }, 1.0, 5);
    CHECK(g.intervals() == 6);
}

TEST_CASE("non-finite evaluator output is rejected with the node") {
    CHECK_THROWS_WITH_AS(GridFunction::sample([](double x) { return x > 1.5 ? NAN : 0.0; }, 2.0, 4),
                         doctest::Contains("node"), std::invalid_argument);
}

TEST_CASE("grid invariants") {
    CHECK_THROWS_AS(GridFunction(1.0, {0.0, 1.0}), std::invalid_argument);   // M < 2
    CHECK_THROWS_AS(GridFunction(-1.0, {0.0, 1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(GridFunction(1.0, {0.0, INFINITY, 2.0}), std::invalid_argument);
}

TEST_CASE("nearest node lookup") {
    auto g = GridFunction::sample([](double x) { return x; }, 1.0, 10);
    CHECK(g.nearest_index(0.0) == 0);
    CHECK(g.nearest_index(0.121) == 1);
    CHECK(g.nearest_index(0.99) == 10);
    CHECK(g.nearest_index(2.5) == 10);  // clamped
    CHECK(g.nearest_index(-1.0) == 0);
}

TEST_CASE("cumulative Simpson hits polynomials exactly and quartics to h^4") {
    const std::size_t M = 200;
    auto cubic = GridFunction::sample([](double x) { return x * x * x; }, 2.0, M);
    auto acc = cumulative_simpson(cubic.samples(), cubic.spacing());
    CHECK(acc[0] == 0.0);
    CHECK(acc.back() == doctest::Approx(4.0).epsilon(1e-14)); // int_0^2 x^3 = 4
    const double xm = cubic.node(M / 2);
    CHECK(acc[M / 2] == doctest::Approx(xm * xm * xm * xm / 4.0).epsilon(1e-14));

    auto quartic = GridFunction::sample([](double x) { return x * x * x * x; }, 2.0, M);
    auto acc4 = cumulative_simpson(quartic.samples(), quartic.spacing());
    CHECK(acc4.back() == doctest::Approx(32.0 / 5.0).epsilon(1e-9));
}

TEST_CASE("csv round-trip is bit-faithful") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-300, 300);
    std::vector<double> vals(65);
    for (auto& v : vals) v = std::ldexp(mant(rng), expo(rng));
    GridFunction g(3.0, vals);

    std::stringstream ss;
    io::write_grid_csv(g, ss);
    auto back = io::read_grid_csv(ss);
    REQUIRE(back.size() == g.size());
    CHECK(std::memcmp(back.samples().data(), g.samples().data(), g.size() * sizeof(double)) == 0);
    CHECK(back.period() == g.period());
}

TEST_CASE("json round-trip is bit-faithful") {
    auto g = GridFunction::sample([](double x) { return std::sin(3.1 * x) / (1.1 + std::cos(x)); }, pi::pi, 64);
    std::stringstream ss;
    io::write_grid_json(g, ss);
    auto back = io::read_grid_json(ss);
    REQUIRE(back.size() == g.size());
    CHECK(std::memcmp(back.samples().data(), g.samples().data(), g.size() * sizeof(double)) == 0);
}

TEST_CASE("razavy phi round-trips through csv") {
    auto pot = razavy_phi({2.0, 2}, 100);
    std::stringstream ss;
    io::write_grid_csv(pot.phi, ss);
    auto back = io::read_grid_csv(ss);
    CHECK(std::memcmp(back.samples().data(), pot.phi.samples().data(), back.size() * sizeof(double)) == 0);
}
