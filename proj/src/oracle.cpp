#include "sppspec/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sppspec {

namespace {

/// Periodic 4-point (cubic) interpolation of the samples; the grid wraps
/// modulo the interval count so half-steps near the seam stay smooth.
class PeriodicCubic {
public:
    explicit PeriodicCubic(const GridFunction& q)
        : q_(&q), m_(q.intervals()), inv_h_(static_cast<double>(q.intervals()) / q.period()) {}

    long double operator()(long double x) const {
        const double t = static_cast<double>(x) * inv_h_;
        double fl = std::floor(t);
        double sd = t - fl;
        auto j = static_cast<long>(fl);
        const auto wrap = [this](long k) {
            long r = k % static_cast<long>(m_);
            if (r < 0) r += static_cast<long>(m_);
            return static_cast<std::size_t>(r);
        };
        const long double s = sd;
        const long double qm1 = (*q_)[wrap(j - 1)];
        const long double q0 = (*q_)[wrap(j)];
        const long double q1 = (*q_)[wrap(j + 1)];
        const long double q2 = (*q_)[wrap(j + 2)];
        return (-s * (s - 1.0L) * (s - 2.0L) / 6.0L) * qm1 +
               ((s + 1.0L) * (s - 1.0L) * (s - 2.0L) / 2.0L) * q0 +
               (-(s + 1.0L) * s * (s - 2.0L) / 2.0L) * q1 +
               ((s + 1.0L) * s * (s - 1.0L) / 6.0L) * q2;
    }

private:
    const GridFunction* q_;
    std::size_t m_;
    double inv_h_;
};

struct State {
    long double f1, f1p, f2, f2p;
};

State rhs(const State& y, long double qml) {
    return {y.f1p, qml * y.f1, y.f2p, qml * y.f2};
}

State axpy(const State& y, long double a, const State& k) {
    return {y.f1 + a * k.f1, y.f1p + a * k.f1p, y.f2 + a * k.f2, y.f2p + a * k.f2p};
}

} // namespace

MonodromyResult integrate_monodromy(const GridFunction& q, double lambda, std::size_t steps) {
    if (steps < 1000) throw std::invalid_argument("integrate_monodromy: need at least 1000 steps");
    if (q.size() < 5) throw std::invalid_argument("integrate_monodromy: q needs at least 4 intervals");

    // Keep at least 40 steps per oscillation wavelength 2*pi/sqrt(lambda - min q).
    const double osc = lambda - q.min_value();
    if (osc > 1.0) {
        const double needed = 40.0 * q.period() * std::sqrt(osc) / (2.0 * std::numbers::pi);
        steps = std::max(steps, static_cast<std::size_t>(std::ceil(needed)));
    }

    const PeriodicCubic interp(q);
    const long double T = q.period();
    const long double h = T / static_cast<long double>(steps);
    const long double lam = lambda;

    State y{1.0L, 0.0L, 0.0L, 1.0L};
    long double x = 0.0L;
    for (std::size_t i = 0; i < steps; ++i) {
        const long double q0 = interp(x) - lam;
        const long double qh = interp(x + h / 2.0L) - lam;
        const long double q1 = interp(x + h) - lam;
        const State k1 = rhs(y, q0);
        const State k2 = rhs(axpy(y, h / 2.0L, k1), qh);
        const State k3 = rhs(axpy(y, h / 2.0L, k2), qh);
        const State k4 = rhs(axpy(y, h, k3), q1);
        y.f1 += h / 6.0L * (k1.f1 + 2.0L * k2.f1 + 2.0L * k3.f1 + k4.f1);
        y.f1p += h / 6.0L * (k1.f1p + 2.0L * k2.f1p + 2.0L * k3.f1p + k4.f1p);
        y.f2 += h / 6.0L * (k1.f2 + 2.0L * k2.f2 + 2.0L * k3.f2 + k4.f2);
        y.f2p += h / 6.0L * (k1.f2p + 2.0L * k2.f2p + 2.0L * k3.f2p + k4.f2p);
        x = static_cast<long double>(i + 1) * h;
        if (!std::isfinite(static_cast<double>(y.f1)) || !std::isfinite(static_cast<double>(y.f2p)))
            throw std::runtime_error("integrate_monodromy: state blew up at x = " +
                                     std::to_string(static_cast<double>(x)));
    }

    MonodromyResult r;
    r.lambda = lambda;
    r.f1T = static_cast<double>(y.f1);
    r.f1pT = static_cast<double>(y.f1p);
    r.f2T = static_cast<double>(y.f2);
    r.f2pT = static_cast<double>(y.f2p);
    r.discriminant = static_cast<double>(y.f1 + y.f2p);
    r.det = static_cast<double>(y.f1 * y.f2p - y.f1p * y.f2);
    return r;
}

namespace {

double oracle_D(const GridFunction& q, double lambda, std::size_t steps) {
    return integrate_monodromy(q, lambda, steps).discriminant;
}

double bisect(const GridFunction& q, double target, double a, double b, double fa, double rel_tol,
              std::size_t steps) {
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (std::fabs(b - a) <= rel_tol * std::max(1.0, std::fabs(mid))) return mid;
        const double fm = oracle_D(q, mid, steps) - target;
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

/// Golden-section extremum of sign*|D - target| over [a, b]; sign = +1
/// locates the closest approach of a touch, sign = -1 the interior
/// departure between two bracketing roots.
double golden_extremum(const GridFunction& q, double target, double a, double b, std::size_t steps,
                       double sign) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = sign * std::fabs(oracle_D(q, c, steps) - target);
    double fd = sign * std::fabs(oracle_D(q, d, steps) - target);
    for (int it = 0; it < 90 && (b - a) > 1e-11 * std::max(1.0, std::fabs(a)); ++it) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = sign * std::fabs(oracle_D(q, c, steps) - target);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = sign * std::fabs(oracle_D(q, d, steps) - target);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

std::vector<OracleEdge> oracle_band_edges(const GridFunction& q, double lambda_lo, double lambda_hi,
                                          const OracleScanOptions& opts) {
    if (!(std::isfinite(lambda_lo) && std::isfinite(lambda_hi) && lambda_lo < lambda_hi))
        throw std::invalid_argument("oracle_band_edges: need a finite window with lo < hi");

    const double span = lambda_hi - lambda_lo;
    std::size_t n = static_cast<std::size_t>(std::ceil(span * opts.points_per_unit)) + 1;
    n = std::clamp<std::size_t>(n, 51, 200'000);
    std::vector<double> lams(n), vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        lams[i] = lambda_lo + span * static_cast<double>(i) / static_cast<double>(n - 1);
        vals[i] = oracle_D(q, lams[i], opts.steps);
    }

    std::vector<OracleEdge> edges;
    for (const auto& [target, bc] : {std::pair{2.0, BoundaryCondition::periodic},
                                     std::pair{-2.0, BoundaryCondition::antiperiodic}}) {
        std::vector<OracleEdge> found;
        auto push_touch = [&](double a, double b) {
            const double m = golden_extremum(q, target, a, b, opts.steps, +1.0);
            if (std::fabs(oracle_D(q, m, opts.steps) - target) < opts.tangent_verify) {
                found.push_back({m, bc, EdgeMultiplicity::double_or_close});
                found.push_back({m, bc, EdgeMultiplicity::double_or_close});
            }
        };
        for (std::size_t i = 0; i < n; ++i) {
            const double gi = vals[i] - target;
            if (gi == 0.0) {
                if (i > 0 && i + 1 < n && (vals[i - 1] - target < 0.0) == (vals[i + 1] - target < 0.0))
                    push_touch(lams[i - 1], lams[i + 1]);
                else
                    found.push_back({lams[i], bc, EdgeMultiplicity::simple});
                continue;
            }
            if (i + 1 < n) {
                const double gn = vals[i + 1] - target;
                if (gn != 0.0 && (gi < 0.0) != (gn < 0.0)) {
                    found.push_back({bisect(q, target, lams[i], lams[i + 1], gi, opts.bisect_rel_tol, opts.steps),
                                     bc, EdgeMultiplicity::simple});
                    continue;
                }
            }
            if (i > 0 && i + 1 < n) {
                const double gp = vals[i - 1] - target;
                const double gn = vals[i + 1] - target;
                if (std::fabs(gi) < opts.tangent_detect && std::fabs(gi) <= std::fabs(gp) &&
                    std::fabs(gi) <= std::fabs(gn) && (gp < 0.0) == (gi < 0.0) && (gn < 0.0) == (gi < 0.0)) {
                    push_touch(lams[i - 1], lams[i + 1]);
                }
            }
        }
        // Crossing pairs that bracket a value within the touch tolerance are
        // a closed gap seen through integrator noise; pin the stationary
        // point instead of the noise-amplified crossing positions.
        for (std::size_t i = 0; i < found.size(); ++i) {
            if (i + 1 < found.size() && found[i].multiplicity == EdgeMultiplicity::simple &&
                found[i + 1].multiplicity == EdgeMultiplicity::simple &&
                found[i + 1].lambda - found[i].lambda < 1e-2 * std::max(1.0, std::fabs(found[i].lambda))) {
                // between two roots of the same family the relevant measure
                // is the interior departure from the target
                const double m = golden_extremum(q, target, found[i].lambda, found[i + 1].lambda,
                                                 opts.steps, -1.0);
                if (std::fabs(oracle_D(q, m, opts.steps) - target) < opts.tangent_verify) {
                    edges.push_back({m, bc, EdgeMultiplicity::double_or_close});
                    edges.push_back({m, bc, EdgeMultiplicity::double_or_close});
                    ++i;
                    continue;
                }
            }
            edges.push_back(found[i]);
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const OracleEdge& a, const OracleEdge& b) { return a.lambda < b.lambda; });
    return edges;
}

} // namespace sppspec
