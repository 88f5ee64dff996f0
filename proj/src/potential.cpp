#include "sppspec/potential.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "sppspec/quadrature.hpp"

namespace sppspec {

namespace {
constexpr double kPi = std::numbers::pi;
}

PeriodicScalarPotential make_potential(GridFunction phi, std::function<double(double)> phi_at,
                                       double hill_offset) {
    const double amp = phi.max_abs();
    const double per_dev = std::fabs(phi.front() - phi.back());
    if (per_dev > 1e-10 * std::max(1.0, amp))
        throw std::invalid_argument("potential: endpoint mismatch |phi(0)-phi(T)| = " +
                                    std::to_string(per_dev) + " exceeds periodicity tolerance");
    const double mean = integrate(phi);
    if (std::fabs(mean) > 1e-8 * phi.period() * std::max(1.0, amp))
        throw std::invalid_argument("potential: nonzero mean, int_0^T phi = " + std::to_string(mean));
    return PeriodicScalarPotential{std::move(phi), std::move(phi_at), hill_offset};
}

void validate(const RazavyParams& p) {
    if (!(p.xi > 0.0) || !std::isfinite(p.xi))
        throw std::invalid_argument("razavy: xi must be positive");
    if (p.m < 1)
        throw std::invalid_argument("razavy: m must be a positive integer");
}

double razavy_A(double xi) { return 1.0 - std::sqrt(1.0 + xi * xi); }

WellType razavy_well_type(const RazavyParams& p) {
    validate(p);
    const double thr = 2.0 * (p.m + 1);
    if (p.xi < thr) return WellType::single_well;
    if (p.xi > thr) return WellType::double_well;
    return WellType::threshold;
}

PeriodicScalarPotential razavy_phi(const RazavyParams& p, std::size_t grid) {
    validate(p);
    const double xi = p.xi;
    const double A = razavy_A(xi);
    auto eval = [xi, A](double x) {
        return std::sin(2.0 * x) * (xi / 2.0 - 2.0 * A / (xi - A * std::cos(2.0 * x)));
    };
    auto phi = GridFunction::sample(eval, kPi, grid);
    // The family's conventional eigenvalue axis sits 2A above the bare
    // phi^2 - phi' one (A^2 - xi^2 = 2A makes the shift exact).
    return make_potential(std::move(phi), eval, 2.0 * A);
}

GridFunction razavy_v1(const RazavyParams& p, std::size_t grid) {
    validate(p);
    const double xi = p.xi;
    const double mp1 = p.m + 1;
    return GridFunction::sample(
        [xi, mp1](double x) {
            return xi * xi / 8.0 * (1.0 - std::cos(4.0 * x)) - mp1 * xi * std::cos(2.0 * x);
        },
        kPi, grid);
}

GridFunction razavy_v2(const RazavyParams& p, std::size_t grid) {
    validate(p);
    if (p.m != 2)
        throw std::invalid_argument("razavy_v2: closed form only available for m = 2");
    const double xi = p.xi;
    const double A = razavy_A(xi);
    return GridFunction::sample(
        [xi, A](double x) {
            const double c = std::cos(2.0 * x), s = std::sin(2.0 * x);
            const double w = xi - A * c;
            const double v1 = xi * xi / 8.0 * (1.0 - std::cos(4.0 * x)) - 3.0 * xi * c;
            // V2 = V1 + 2 phi'
            return v1 + 4.0 * c * (xi / 2.0 - 2.0 * A / w) + 8.0 * A * A * s * s / (w * w);
        },
        kPi, grid);
}

GridFunction build_u(const PeriodicScalarPotential& pot) {
    const GridFunction& phi = pot.phi;
    const double mean = integrate(phi);
    if (std::fabs(mean) > 1e-8 * phi.period() * std::max(1.0, phi.max_abs()))
        throw std::invalid_argument("build_u: phi has nonzero mean, int_0^T phi = " + std::to_string(mean));
    auto acc = cumulative_simpson(phi.samples(), phi.spacing());
    std::vector<double> u(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) u[j] = std::exp(-acc[j]);
    // acc[0] == 0, so u(0) == 1 exactly; this is the normalization every
    // downstream formula assumes.
    GridFunction out(phi.period(), std::move(u));
    if (out.min_value() <= 0.0)
        throw std::runtime_error("build_u: produced a non-positive sample");
    return out;
}

} // namespace sppspec
