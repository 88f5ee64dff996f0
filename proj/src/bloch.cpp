#include "sppspec/bloch.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sppspec {

namespace {

Complex principal_sqrt_d2m4(double D) {
    // sqrt(D^2 - 4): real non-negative outside bands, +i sqrt(4 - D^2)
    // inside, so beta_+ = (D - s)/2 decays for D > 2 and has Im <= 0 in bands.
    const double d2 = D * D - 4.0;
    if (d2 >= 0.0) return Complex(std::sqrt(d2), 0.0);
    return Complex(0.0, std::sqrt(-d2));
}

} // namespace

std::pair<Complex, Complex> matching_constants(double f1T, double f2T, double f2pT, double D) {
    const double scale = std::max({1.0, std::fabs(f1T), std::fabs(f2pT)});
    if (std::fabs(f2T) <= 1e-12 * scale)
        throw DegenerateMatching("matching_constants: f2(T) ~ 0, match on derivative data instead");
    const Complex s = principal_sqrt_d2m4(D);
    const Complex num(f2pT - f1T, 0.0);
    return {(num - s) / (2.0 * f2T), (num + s) / (2.0 * f2T)};
}

std::pair<Complex, Complex> bloch_factors(double D) {
    // Outside a band, form the large-modulus factor first and invert it, so
    // the unit product survives in floating point for large |D| as well.
    if (D >= 2.0) {
        const double big = (D + std::sqrt(D * D - 4.0)) / 2.0;
        return {Complex(1.0 / big), Complex(big)};
    }
    if (D <= -2.0) {
        const double big = (D - std::sqrt(D * D - 4.0)) / 2.0;
        return {Complex(big), Complex(1.0 / big)};
    }
    const Complex s(0.0, std::sqrt(4.0 - D * D));
    return {(Complex(D) - s) / 2.0, (Complex(D) + s) / 2.0};
}

Complex quasimomentum(double D, double period) {
    if (!(period > 0.0)) throw std::invalid_argument("quasimomentum: period must be positive");
    const double half = D / 2.0;
    if (std::fabs(half) <= 1.0) return Complex(std::acos(half) / period, 0.0);
    return std::acos(Complex(half, 0.0)) / period;
}

namespace {

struct Combo {
    std::vector<Complex> cell_p, cell_m, dcell_p, dcell_m;
    Complex alpha_p, alpha_m;
    bool fallback = false;
    bool identity = false;
};

Combo self_match(const PairGrid& g, const Complex& beta_p, const Complex& beta_m, const Complex& s) {
    const double v1T = g.v1.back(), d1T = g.d1.back();
    const double v2T = g.v2.back(), d2T = g.d2.back();
    const double scale = std::max({1.0, std::fabs(v1T), std::fabs(d2T)});
    // Quadrature puts the endpoint entries a few units above 1e-12 even at
    // an exactly closed gap; the fallback cutoff sits above that floor.
    constexpr double eps_div = 1e-9;
    const std::size_t n = g.v1.size();

    Combo c;
    c.cell_p.resize(n); c.cell_m.resize(n);
    c.dcell_p.resize(n); c.dcell_m.resize(n);

    auto fill = [&](const Complex& ap, const Complex& am) {
        for (std::size_t j = 0; j < n; ++j) {
            c.cell_p[j] = g.v1[j] + ap * g.v2[j];
            c.cell_m[j] = g.v1[j] + am * g.v2[j];
            c.dcell_p[j] = g.d1[j] + ap * g.d2[j];
            c.dcell_m[j] = g.d1[j] + am * g.d2[j];
        }
        c.alpha_p = ap;
        c.alpha_m = am;
    };

    if (std::fabs(v2T) > eps_div * scale) {
        const Complex num(d2T - v1T, 0.0);
        fill((num - s) / (2.0 * v2T), (num + s) / (2.0 * v2T));
        return c;
    }
    if (std::fabs(d1T) > eps_div * scale) {
        // Match on derivative data: initial vector (v, 1) with
        // d1T * v + d2T = beta.
        c.fallback = true;
        const Complex vp = (beta_p - d2T) / d1T;
        const Complex vm = (beta_m - d2T) / d1T;
        if (std::abs(vp) > 1e-12 && std::abs(vm) > 1e-12) {
            fill(1.0 / vp, 1.0 / vm); // normalized back to value 1 at x = 0
            c.fallback = true;
            return c;
        }
        const auto nan = std::numeric_limits<double>::quiet_NaN();
        for (std::size_t j = 0; j < n; ++j) {
            c.cell_p[j] = std::abs(vp) > 1e-12 ? vp * g.v1[j] + g.v2[j] : Complex(g.v2[j]);
            c.cell_m[j] = std::abs(vm) > 1e-12 ? vm * g.v1[j] + g.v2[j] : Complex(g.v2[j]);
            c.dcell_p[j] = std::abs(vp) > 1e-12 ? vp * g.d1[j] + g.d2[j] : Complex(g.d2[j]);
            c.dcell_m[j] = std::abs(vm) > 1e-12 ? vm * g.d1[j] + g.d2[j] : Complex(g.d2[j]);
        }
        c.alpha_p = std::abs(vp) > 1e-12 ? 1.0 / vp : Complex(nan, nan);
        c.alpha_m = std::abs(vm) > 1e-12 ? 1.0 / vm : Complex(nan, nan);
        return c;
    }
    // Monodromy is +-identity (both off-diagonal entries vanish): every
    // solution self-matches; return the periodic/antiperiodic eigenfunction
    // itself on both branches.
    c.fallback = true;
    c.identity = true;
    for (std::size_t j = 0; j < n; ++j) {
        c.cell_p[j] = c.cell_m[j] = Complex(g.v1[j]);
        c.dcell_p[j] = c.dcell_m[j] = Complex(g.d1[j]);
    }
    c.alpha_p = c.alpha_m = Complex(0.0, 0.0);
    return c;
}

} // namespace

BlochSolution build_bloch(const SppsTable& t, double lambda_mu) {
    const PairGrid fg = f_pair_grid(t, lambda_mu);
    const double D = fg.v1.back() + fg.d2.back();
    const Complex s = principal_sqrt_d2m4(D);
    const auto [bp, bm] = bloch_factors(D);

    BlochSolution sol;
    sol.lambda_mu = lambda_mu;
    sol.D = D;
    sol.beta_plus = bp;
    sol.beta_minus = bm;
    sol.k = quasimomentum(D, t.period());
    sol.period = t.period();

    Combo c = self_match(fg, bp, bm, s);
    sol.alpha_plus = c.alpha_p;
    sol.alpha_minus = c.alpha_m;
    sol.cell_plus = std::move(c.cell_p);
    sol.cell_minus = std::move(c.cell_m);
    sol.dcell_plus = std::move(c.dcell_p);
    sol.dcell_minus = std::move(c.dcell_m);
    sol.used_fallback = c.fallback;
    sol.identity_monodromy = c.identity;
    if (c.identity) {
        // The monodromy is +-identity up to noise; snap the factors so the
        // returned eigenfunction extends exactly (anti)periodically.
        const double snapped = D > 0.0 ? 1.0 : -1.0;
        sol.beta_plus = sol.beta_minus = Complex(snapped);
        sol.k = quasimomentum(2.0 * snapped, t.period());
    }
    return sol;
}

Complex extend(const BlochSolution& s, Branch b, double x) {
    const double T = s.period;
    const auto& cell = (b == Branch::plus) ? s.cell_plus : s.cell_minus;
    const Complex beta = (b == Branch::plus) ? s.beta_plus : s.beta_minus;
    const Complex other = (b == Branch::plus) ? s.beta_minus : s.beta_plus;

    double n = std::floor(x / T);
    double xr = x - n * T;
    if (xr >= T) { // guard rounding at the right seam
        xr -= T;
        n += 1.0;
    }
    const std::size_t m = cell.size() - 1;
    const auto j = static_cast<std::size_t>(
        std::clamp<long>(std::lround(xr / T * static_cast<double>(m)), 0, static_cast<long>(m)));
    // beta^n for negative n goes through the opposite factor (beta_+ beta_- = 1)
    // rather than through a division by a possibly tiny modulus.
    const Complex factor = (n >= 0.0) ? std::pow(beta, n) : std::pow(other, -n);
    return factor * cell[j];
}

SpinorSolution assemble_spinor(const SppsTable& t, double lambda_mu, int sign) {
    if (lambda_mu < 0.0)
        throw std::invalid_argument("assemble_spinor: lambda < 0 admits no real frequency; "
                                    "only the scalar components exist there");
    const double omega = (sign >= 0 ? 1.0 : -1.0) * std::sqrt(lambda_mu);
    if (omega == 0.0)
        throw std::invalid_argument("assemble_spinor: omega = 0; the lower component is not "
                                    "determined by the first-order relation there");

    const double phi0 = t.phi[0];
    const PairGrid fg = f_pair_grid(t, lambda_mu);
    const PairGrid gg = g_pair_grid(t, phi0, lambda_mu);
    const double D = fg.v1.back() + fg.d2.back();
    const Complex s = principal_sqrt_d2m4(D);
    const auto [bp, bm] = bloch_factors(D);

    Combo fc = self_match(fg, bp, bm, s);
    Combo gc = self_match(gg, bp, bm, s);

    SpinorSolution sp;
    sp.lambda_mu = lambda_mu;
    sp.omega = omega;
    sp.period = t.period();
    sp.a_plus = fc.alpha_p;
    sp.a_minus = fc.alpha_m;
    sp.b_plus = gc.alpha_p;
    sp.b_minus = gc.alpha_m;
    sp.beta_plus = bp;
    sp.beta_minus = bm;
    sp.used_fallback = fc.fallback || gc.fallback;

    // Scale the lower component so omega*G = F' + phi*F holds; both sides
    // carry the same monodromy factor, so matching them at x = 0 matches
    // them everywhere. G_combo(0) = 1 by construction.
    const Complex scale_p = (fc.dcell_p[0] + phi0 * fc.cell_p[0]) / omega;
    const Complex scale_m = (fc.dcell_m[0] + phi0 * fc.cell_m[0]) / omega;

    const std::size_t n = fg.v1.size();
    sp.upper_plus = std::move(fc.cell_p);
    sp.upper_minus = std::move(fc.cell_m);
    sp.dupper_plus = std::move(fc.dcell_p);
    sp.dupper_minus = std::move(fc.dcell_m);
    sp.lower_plus.resize(n);
    sp.lower_minus.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        sp.lower_plus[j] = scale_p * gc.cell_p[j];
        sp.lower_minus[j] = scale_m * gc.cell_m[j];
    }
    return sp;
}

} // namespace sppspec
