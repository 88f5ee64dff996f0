#include "sppspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sppspec {

namespace {

long double horner(const std::vector<long double>& c, long double x) {
    long double acc = 0.0L;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<long double> derivative_coeffs(const std::vector<long double>& c) {
    std::vector<long double> d;
    d.reserve(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t n = 1; n < c.size(); ++n) d.push_back(static_cast<long double>(n) * c[n]);
    return d;
}

} // namespace

DiscriminantPolynomial build_discriminant(const SppsTable& t, double lambda_shift) {
    const double u_dev = std::fabs(t.u.front() - t.u.back());
    const double u_amp = std::max(1.0, t.u.max_abs());
    if (u_dev > 1e-8 * u_amp)
        throw std::invalid_argument(
            "build_discriminant: u is not periodic (|u(T)-u(0)| = " + std::to_string(u_dev) +
            "); the series form of the discriminant requires the boundary terms to cancel");
    DiscriminantPolynomial p;
    p.coeffs = t.disc_coeffs;
    p.period = t.period();
    p.order = t.order;
    p.trusted_radius = estimate_radius(t);
    p.noise_cap_radius = noise_radius(t);
    p.lambda_shift = lambda_shift;
    for (const long double c : p.coeffs)
        if (!std::isfinite(static_cast<double>(c)))
            throw std::runtime_error("build_discriminant: non-finite coefficient");
    return p;
}

double eval_discriminant(const DiscriminantPolynomial& p, double mu) {
    return static_cast<double>(horner(p.coeffs, static_cast<long double>(mu)));
}

double eval_discriminant_at_lambda(const DiscriminantPolynomial& p, double lambda) {
    return eval_discriminant(p, lambda - p.lambda_shift);
}

double eval_discriminant_derivative(const DiscriminantPolynomial& p, double mu) {
    return static_cast<double>(horner(derivative_coeffs(p.coeffs), static_cast<long double>(mu)));
}

double eval_noise(const DiscriminantPolynomial& p, double mu) {
    constexpr long double eps = std::numeric_limits<long double>::epsilon();
    long double s = 0.0L, pw = 1.0L;
    const long double r = std::fabs(static_cast<long double>(mu));
    for (const long double c : p.coeffs) {
        s += std::fabs(c) * pw;
        pw *= r;
    }
    return static_cast<double>(eps * s);
}

namespace {

struct MuRoot {
    double mu;
    BoundaryCondition bc;
    EdgeMultiplicity mult;
};

double bisect_root(const DiscriminantPolynomial& p, double target, double a, double b, double fa,
                   double rel_tol) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (std::fabs(b - a) <= rel_tol * std::max(1.0, std::fabs(mid))) return mid;
        const double fm = eval_discriminant(p, mid) - target;
        if (fm == 0.0) return mid;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

/// Bisection on D' over [a, b]; returns the stationary point or NaN when D'
/// does not change sign there.
double bisect_extremum(const DiscriminantPolynomial& p, double a, double b, double rel_tol) {
    double fa = eval_discriminant_derivative(p, a);
    double fb = eval_discriminant_derivative(p, b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0.0) == (fb < 0.0)) return std::numeric_limits<double>::quiet_NaN();
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (std::fabs(b - a) <= rel_tol * std::max(1.0, std::fabs(mid))) return mid;
        const double fm = eval_discriminant_derivative(p, mid);
        if (fm == 0.0) return mid;
        if ((fa < 0.0) != (fm < 0.0)) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

void push_touch(const DiscriminantPolynomial& p, double target, double a, double b,
                const ScanOptions& opts, BoundaryCondition bc, std::vector<MuRoot>& found) {
    const double m = bisect_extremum(p, a, b, opts.bisect_rel_tol);
    if (std::isfinite(m) && std::fabs(eval_discriminant(p, m) - target) < opts.tangent_threshold) {
        found.push_back({m, bc, EdgeMultiplicity::double_or_close});
        found.push_back({m, bc, EdgeMultiplicity::double_or_close});
    }
}

void scan_target(const DiscriminantPolynomial& p, const std::vector<double>& mus,
                 const std::vector<double>& vals, double target, BoundaryCondition bc,
                 const ScanOptions& opts, std::vector<MuRoot>& out) {
    const std::size_t n = mus.size();
    std::vector<MuRoot> found;

    for (std::size_t i = 0; i < n; ++i) {
        const double gi = vals[i] - target;
        if (gi == 0.0) {
            // Exact zero on a sample: a crossing when the neighbours differ
            // in sign, a touch otherwise.
            if (i > 0 && i + 1 < n && (vals[i - 1] - target < 0.0) == (vals[i + 1] - target < 0.0)) {
                push_touch(p, target, mus[i - 1], mus[i + 1], opts, bc, found);
            } else {
                found.push_back({mus[i], bc, EdgeMultiplicity::simple});
            }
            continue;
        }
        if (i + 1 < n) {
            const double gn = vals[i + 1] - target;
            if (gn != 0.0 && (gi < 0.0) != (gn < 0.0)) {
                const double r = bisect_root(p, target, mus[i], mus[i + 1], gi, opts.bisect_rel_tol);
                found.push_back({r, bc, EdgeMultiplicity::simple});
                continue;
            }
        }
        // Tangential touch: a local minimum of |D - target| below threshold
        // with no sign change around it.
        if (i > 0 && i + 1 < n) {
            const double gp = vals[i - 1] - target;
            const double gn = vals[i + 1] - target;
            if (std::fabs(gi) < opts.tangent_threshold && std::fabs(gi) <= std::fabs(gp) &&
                std::fabs(gi) <= std::fabs(gn) && (gp < 0.0) == (gi < 0.0) && (gn < 0.0) == (gi < 0.0)) {
                push_touch(p, target, mus[i - 1], mus[i + 1], opts, bc, found);
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const MuRoot& a, const MuRoot& b) { return a.mu < b.mu; });
    // Collapse duplicates of the same simple root from adjacent scan cells.
    std::vector<MuRoot> dedup;
    for (const MuRoot& r : found) {
        if (!dedup.empty() && r.mult == EdgeMultiplicity::simple &&
            dedup.back().mult == EdgeMultiplicity::simple &&
            std::fabs(r.mu - dedup.back().mu) <= 1e-13 * std::max(1.0, std::fabs(r.mu)))
            continue;
        dedup.push_back(r);
    }
    // A close pair of crossings whose extremum sits at the target within the
    // touch threshold is a closed (or noise-opened) gap: the crossing
    // positions are square-root amplified noise, the stationary point is
    // not, so report that instead.
    std::vector<MuRoot> merged;
    for (std::size_t i = 0; i < dedup.size(); ++i) {
        if (i + 1 < dedup.size() && dedup[i].mult == EdgeMultiplicity::simple &&
            dedup[i + 1].mult == EdgeMultiplicity::simple &&
            dedup[i + 1].mu - dedup[i].mu < 1e-2 * std::max(1.0, std::fabs(dedup[i].mu))) {
            const double m = bisect_extremum(p, dedup[i].mu, dedup[i + 1].mu, opts.bisect_rel_tol);
            if (std::isfinite(m) && std::fabs(eval_discriminant(p, m) - target) < opts.tangent_threshold) {
                merged.push_back({m, bc, EdgeMultiplicity::double_or_close});
                merged.push_back({m, bc, EdgeMultiplicity::double_or_close});
                ++i;
                continue;
            }
        }
        merged.push_back(dedup[i]);
    }
    // Resolved-but-tight pairs keep both values and get flagged.
    for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
        if (merged[i].mult == EdgeMultiplicity::simple && merged[i + 1].mult == EdgeMultiplicity::simple &&
            std::fabs(merged[i + 1].mu - merged[i].mu) < opts.merge_tol * std::max(1.0, std::fabs(merged[i].mu))) {
            merged[i].mult = EdgeMultiplicity::double_or_close;
            merged[i + 1].mult = EdgeMultiplicity::double_or_close;
        }
    }
    out.insert(out.end(), merged.begin(), merged.end());
}

} // namespace

SpectrumReport find_band_edges(const DiscriminantPolynomial& p, double lambda_lo, double lambda_hi,
                               const ScanOptions& opts) {
    if (!(lambda_lo < lambda_hi))
        throw std::invalid_argument("find_band_edges: need lambda_lo < lambda_hi");
    const double mu_lo = lambda_lo - p.lambda_shift;
    const double mu_hi = lambda_hi - p.lambda_shift;
    const double usable = p.usable_radius();
    if (std::max(std::fabs(mu_lo), std::fabs(mu_hi)) > usable)
        throw std::invalid_argument("find_band_edges: window exceeds the usable radius; usable window is [" +
                                    std::to_string(-usable + p.lambda_shift) + ", " +
                                    std::to_string(usable + p.lambda_shift) + "]");

    const double span = mu_hi - mu_lo;
    std::size_t n = static_cast<std::size_t>(std::ceil(span * opts.points_per_unit)) + 1;
    n = std::clamp<std::size_t>(n, 201, 4'000'000);
    std::vector<double> mus(n), vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        mus[i] = mu_lo + span * static_cast<double>(i) / static_cast<double>(n - 1);
        vals[i] = eval_discriminant(p, mus[i]);
    }

    std::vector<MuRoot> roots;
    scan_target(p, mus, vals, 2.0, BoundaryCondition::periodic, opts, roots);
    scan_target(p, mus, vals, -2.0, BoundaryCondition::antiperiodic, opts, roots);
    std::sort(roots.begin(), roots.end(), [](const MuRoot& a, const MuRoot& b) { return a.mu < b.mu; });

    SpectrumReport rep;
    rep.lambda_shift = p.lambda_shift;
    rep.window_lo = lambda_lo;
    rep.window_hi = lambda_hi;
    for (const MuRoot& r : roots)
        rep.edges.push_back({r.mu + p.lambda_shift, r.bc, r.mult});

    // Adjacent edges from the two boundary conditions can also coincide to
    // working precision; flag those pairs the same way.
    for (std::size_t i = 0; i + 1 < rep.edges.size(); ++i) {
        if (std::fabs(rep.edges[i + 1].lambda - rep.edges[i].lambda) <
            opts.merge_tol * std::max(1.0, std::fabs(rep.edges[i].lambda)) &&
            rep.edges[i].bc != rep.edges[i + 1].bc) {
            rep.edges[i].multiplicity = EdgeMultiplicity::double_or_close;
            rep.edges[i + 1].multiplicity = EdgeMultiplicity::double_or_close;
        }
    }

    for (std::size_t i = 0; i + 1 < rep.edges.size(); ++i) {
        const double a = rep.edges[i].lambda, b = rep.edges[i + 1].lambda;
        if (!(b > a)) continue;
        const double mid = 0.5 * (a + b);
        const double d = std::fabs(eval_discriminant_at_lambda(p, mid));
        if (d < 2.0) rep.bands.emplace_back(a, b);
        else if (d > 2.0) rep.gaps.emplace_back(a, b);
    }

    for (const BandEdge& e : rep.edges) {
        if (e.lambda < 0.0 && std::fabs(e.lambda) > 1e-12) {
            rep.no_real_omega.push_back(e.lambda);
        } else if (std::fabs(e.lambda) <= 1e-12) {
            rep.dirac_edges.push_back(0.0);
        } else {
            const double w = std::sqrt(e.lambda);
            rep.dirac_edges.push_back(w);
            rep.dirac_edges.push_back(-w);
        }
    }
    return rep;
}

SpectralClass classify(const DiscriminantPolynomial& p, double lambda, double tol_edge) {
    const double d = std::fabs(eval_discriminant_at_lambda(p, lambda));
    if (d < 2.0 - tol_edge) return SpectralClass::band;
    if (d > 2.0 + tol_edge) return SpectralClass::gap;
    return SpectralClass::edge;
}

std::vector<double> dirac_eigenvalues(const SpectrumReport& report) {
    std::vector<double> out;
    for (const BandEdge& e : report.edges) {
        if (e.lambda < 0.0 && std::fabs(e.lambda) > 1e-12) continue;
        if (std::fabs(e.lambda) <= 1e-12) {
            out.push_back(0.0);
        } else {
            out.push_back(std::sqrt(e.lambda));
            out.push_back(-std::sqrt(e.lambda));
        }
    }
    return out;
}

RazavyReference razavy_reference(const RazavyParams& p) {
    validate(p);
    if (p.m != 2)
        throw std::invalid_argument("razavy_reference: closed-form eigenvalues are wired for m = 2 only");
    const double s = std::sqrt(1.0 + p.xi * p.xi);
    return {2.0 * (1.0 - s), 4.0, 2.0 * (1.0 + s)};
}

const char* to_string(BoundaryCondition bc) {
    return bc == BoundaryCondition::periodic ? "periodic" : "antiperiodic";
}

const char* to_string(EdgeMultiplicity m) {
    return m == EdgeMultiplicity::simple ? "simple" : "double-or-close";
}

const char* to_string(SpectralClass c) {
    switch (c) {
        case SpectralClass::band: return "band";
        case SpectralClass::gap: return "gap";
        default: return "edge";
    }
}

} // namespace sppspec
