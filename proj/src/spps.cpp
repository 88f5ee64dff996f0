#include "sppspec/spps.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "sppspec/quadrature.hpp"

namespace sppspec {

namespace {

std::vector<double> to_double(const std::vector<long double>& v) {
    return std::vector<double>(v.begin(), v.end());
}

struct SeriesSums {
    // Partial sums at one node: even-index tilde series, shifted odd-index
    // tilde series (the 1/lambda-free form), even-index plain series and
    // shifted odd-index plain series.
    long double s0t, s1t, s0, s1;
};

SeriesSums series_at(const SppsTable& t, std::size_t j, long double lam) {
    const int N = t.order;
    SeriesSums r{};
    r.s0t = 0.0L;
    for (int n = N; n >= 0; --n) r.s0t = r.s0t * lam + static_cast<long double>(t.xtilde[2 * n][j]);
    r.s1t = 0.0L;
    for (int n = N + 1; n >= 1; --n) r.s1t = r.s1t * lam + static_cast<long double>(t.xtilde[2 * n - 1][j]);
    r.s0 = 0.0L;
    for (int n = N; n >= 0; --n) r.s0 = r.s0 * lam + static_cast<long double>(t.xplain[2 * n][j]);
    r.s1 = 0.0L;
    for (int n = N + 1; n >= 1; --n) r.s1 = r.s1 * lam + static_cast<long double>(t.xplain[2 * n - 1][j]);
    return r;
}

struct NodeValues {
    long double f1, f1p, f2, f2p, g1, g1p, g2, g2p;
};

double trusted_radius_or_inf(const SppsTable& t) {
    if (t.order < 4) return std::numeric_limits<double>::infinity();
    return estimate_radius(t);
}

NodeValues assemble(const SppsTable& t, std::size_t j, long double lam) {
    const SeriesSums s = series_at(t, j, lam);
    const long double u0 = t.u[0];
    const long double phi0 = t.phi[0];
    const long double up0 = -phi0 * u0;
    const long double uj = t.u[j];
    const long double upj = -static_cast<long double>(t.phi[j]) * uj;

    NodeValues v{};
    v.f1 = (uj / u0) * s.s0t + up0 * uj * s.s1;
    v.f1p = (upj / u0) * s.s0t - lam * s.s1t / (u0 * uj) + up0 * upj * s.s1 - up0 * s.s0 / uj;
    v.f2 = -u0 * uj * s.s1;
    v.f2p = -u0 * upj * s.s1 + u0 * s.s0 / uj;
    v.g1 = u0 * s.s0 / uj - (phi0 / u0) * s.s1t / uj;
    v.g1p = u0 * (uj * lam * s.s1 - s.s0 * upj / (uj * uj)) -
            (phi0 / u0) * (uj * s.s0t - s.s1t * upj / (uj * uj));
    v.g2 = s.s1t / (u0 * uj);
    v.g2p = (uj * s.s0t - s.s1t * upj / (uj * uj)) / u0;
    return v;
}

} // namespace

namespace {

SppsTable run_recursion(const GridFunction& u, std::span<const long double> u_ld,
                        const GridFunction& phi, int order);

}

SppsTable build_table(const GridFunction& u, const GridFunction& phi, int order) {
    if (u.size() != phi.size() || u.period() != phi.period())
        throw std::invalid_argument("build_table: u and phi must share one grid");
    std::vector<long double> u_ld(u.samples().begin(), u.samples().end());
    return run_recursion(u, u_ld, phi, order);
}

SppsTable build_table_from_phi(const GridFunction& phi, int order) {
    const double mean = integrate(phi);
    if (std::fabs(mean) > 1e-8 * phi.period() * std::max(1.0, phi.max_abs()))
        throw std::invalid_argument("build_table_from_phi: phi has nonzero mean, int_0^T phi = " +
                                    std::to_string(mean));
    std::vector<long double> phi_ld(phi.samples().begin(), phi.samples().end());
    const long double h = static_cast<long double>(phi.period()) / static_cast<long double>(phi.intervals());
    auto acc = cumulative_simpson(std::span<const long double>(phi_ld), h);
    std::vector<long double> u_ld(acc.size());
    std::vector<double> u_dbl(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) {
        u_ld[j] = std::exp(-acc[j]);
        u_dbl[j] = static_cast<double>(u_ld[j]);
    }
    GridFunction u(phi.period(), std::move(u_dbl));
    return run_recursion(u, u_ld, phi, order);
}

namespace {

SppsTable run_recursion(const GridFunction& u, std::span<const long double> u_ld,
                        const GridFunction& phi, int order) {
    if (order < 1) throw std::invalid_argument("build_table: order must be >= 1");
    if (u.min_value() <= 0.0)
        throw std::invalid_argument("build_table: u must be strictly positive (1/u^2 is integrated)");

    const std::size_t n = u.size();
    const long double h = static_cast<long double>(u.period()) / static_cast<long double>(u.intervals());

    std::vector<long double> u2(n), iu2(n);
    for (std::size_t j = 0; j < n; ++j) {
        const long double uj = u_ld[j];
        u2[j] = uj * uj;
        iu2[j] = 1.0L / (uj * uj);
    }

    SppsTable t;
    t.u = u;
    t.phi = phi;
    t.order = order;
    t.xtilde.reserve(2 * order + 2);
    t.xplain.reserve(2 * order + 2);
    t.disc_coeffs.reserve(order + 1);

    std::vector<long double> xt(n, 1.0L), xp(n, 1.0L), work(n);
    t.xtilde.emplace_back(u.period(), std::vector<double>(n, 1.0));
    t.xplain.emplace_back(u.period(), std::vector<double>(n, 1.0));
    t.disc_coeffs.push_back(2.0L);

    for (int k = 1; k <= 2 * order + 1; ++k) {
        if (k % 2 == 1) {
            for (std::size_t j = 0; j < n; ++j) work[j] = xt[j] * u2[j];
            xt = cumulative_simpson(std::span<const long double>(work), h);
            for (std::size_t j = 0; j < n; ++j) work[j] = xp[j] * iu2[j];
            xp = cumulative_simpson(std::span<const long double>(work), h);
            for (auto& v : xp) v = -v;
        } else {
            for (std::size_t j = 0; j < n; ++j) work[j] = xt[j] * iu2[j];
            xt = cumulative_simpson(std::span<const long double>(work), h);
            for (auto& v : xt) v = -v;
            for (std::size_t j = 0; j < n; ++j) work[j] = xp[j] * u2[j];
            xp = cumulative_simpson(std::span<const long double>(work), h);
            t.disc_coeffs.push_back(xt.back() + xp.back());
        }
        t.xtilde.emplace_back(u.period(), to_double(xt));
        t.xplain.emplace_back(u.period(), to_double(xp));
    }
    return t;
}

} // namespace

PairValues f_pair(const SppsTable& t, double x, double lambda) {
    const std::size_t j = t.u.nearest_index(x);
    const NodeValues v = assemble(t, j, lambda);
    PairValues r{static_cast<double>(v.f1), static_cast<double>(v.f1p),
                 static_cast<double>(v.f2), static_cast<double>(v.f2p),
                 std::fabs(lambda) <= trusted_radius_or_inf(t)};
    return r;
}

PairValues g_pair(const SppsTable& t, double phi0, double x, double lambda) {
    if (std::fabs(phi0 - t.phi[0]) > 1e-12 * std::max(1.0, std::fabs(t.phi[0])))
        throw std::invalid_argument("g_pair: phi0 does not match the table's phi(0)");
    const std::size_t j = t.u.nearest_index(x);
    const NodeValues v = assemble(t, j, lambda);
    return {static_cast<double>(v.g1), static_cast<double>(v.g1p),
            static_cast<double>(v.g2), static_cast<double>(v.g2p),
            std::fabs(lambda) <= trusted_radius_or_inf(t)};
}

PairGrid f_pair_grid(const SppsTable& t, double lambda) {
    const std::size_t n = t.u.size();
    PairGrid g;
    g.v1.resize(n); g.d1.resize(n); g.v2.resize(n); g.d2.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const NodeValues v = assemble(t, j, lambda);
        g.v1[j] = static_cast<double>(v.f1);
        g.d1[j] = static_cast<double>(v.f1p);
        g.v2[j] = static_cast<double>(v.f2);
        g.d2[j] = static_cast<double>(v.f2p);
    }
    g.trusted = std::fabs(lambda) <= trusted_radius_or_inf(t);
    return g;
}

PairGrid g_pair_grid(const SppsTable& t, double phi0, double lambda) {
    if (std::fabs(phi0 - t.phi[0]) > 1e-12 * std::max(1.0, std::fabs(t.phi[0])))
        throw std::invalid_argument("g_pair_grid: phi0 does not match the table's phi(0)");
    const std::size_t n = t.u.size();
    PairGrid g;
    g.v1.resize(n); g.d1.resize(n); g.v2.resize(n); g.d2.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        const NodeValues v = assemble(t, j, lambda);
        g.v1[j] = static_cast<double>(v.g1);
        g.d1[j] = static_cast<double>(v.g1p);
        g.v2[j] = static_cast<double>(v.g2);
        g.d2[j] = static_cast<double>(v.g2p);
    }
    g.trusted = std::fabs(lambda) <= trusted_radius_or_inf(t);
    return g;
}

double intertwine(double f, double fp, double phi_x, double omega) {
    if (omega == 0.0)
        throw std::invalid_argument("intertwine: omega = 0 has no inverse image; use g_pair");
    return (fp + phi_x * f) / omega;
}

namespace {

bool radius_ok(const std::vector<long double>& c, long double r) {
    const std::size_t N = c.size() - 1;
    long double sum = 0.0L, mag = 1.0L, p = 1.0L, last = 0.0L;
    for (std::size_t n = 0; n <= N; ++n) {
        const long double term = c[n] * p;
        sum += term;
        const long double a = std::fabs(sum);
        if (a > mag) mag = a;
        if (n == N) last = std::fabs(term);
        p *= r;
    }
    return last <= 1e-12L * mag;
}

double radius_from_coeffs(const std::vector<long double>& c) {
    long double r = 1.0L;
    long double lo, hi;
    if (radius_ok(c, r)) {
        while (r < 1e9L && radius_ok(c, 2.0L * r)) r *= 2.0L;
        lo = r;
        hi = std::min(2.0L * r, 2e9L);
        if (r >= 1e9L) return static_cast<double>(r);
    } else {
        while (r > 1e-15L && !radius_ok(c, r / 2.0L)) r /= 2.0L;
        lo = r / 2.0L;
        hi = r;
    }
    for (int it = 0; it < 80; ++it) {
        const long double mid = 0.5L * (lo + hi);
        if (radius_ok(c, mid)) lo = mid; else hi = mid;
    }
    return static_cast<double>(lo);
}

long double abs_term_sum(const std::vector<long double>& c, long double r) {
    long double s = 0.0L, p = 1.0L;
    for (const long double cn : c) {
        s += std::fabs(cn) * p;
        p *= r;
    }
    return s;
}

} // namespace

double estimate_radius(const SppsTable& t) {
    if (t.order < 4) throw std::invalid_argument("estimate_radius: order must be >= 4");
    return radius_from_coeffs(t.disc_coeffs);
}

double noise_estimate(const SppsTable& t, double r) {
    constexpr long double eps = std::numeric_limits<long double>::epsilon();
    return static_cast<double>(eps * abs_term_sum(t.disc_coeffs, std::fabs(static_cast<long double>(r))));
}

double noise_radius(const SppsTable& t, double cap) {
    constexpr long double eps = std::numeric_limits<long double>::epsilon();
    auto level = [&](long double r) {
        return static_cast<double>(eps * abs_term_sum(t.disc_coeffs, r));
    };
    long double lo = 1.0L, hi = 1.0L;
    if (level(lo) >= cap) return 0.0;
    while (hi < 1e9L && level(2.0L * hi) < cap) hi *= 2.0L;
    if (hi >= 1e9L) return static_cast<double>(hi);
    hi *= 2.0L;
    for (int it = 0; it < 80; ++it) {
        const long double mid = 0.5L * (lo + hi);
        if (level(mid) < cap) lo = mid; else hi = mid;
    }
    return static_cast<double>(lo);
}

// ---- JSON caching ----

namespace {

nlohmann::json grid_to_json(const GridFunction& g) {
    return nlohmann::json{{"period", g.period()},
                          {"samples", std::vector<double>(g.samples().begin(), g.samples().end())}};
}

GridFunction grid_from_json(const nlohmann::json& j) {
    return GridFunction(j.at("period").get<double>(), j.at("samples").get<std::vector<double>>());
}

void spot_check(const SppsTable& t) {
    // Re-integrate the first two entries of each family and compare.
    const std::size_t n = t.u.size();
    const long double h = static_cast<long double>(t.period()) / static_cast<long double>(t.u.intervals());
    std::vector<long double> u2(n), iu2(n), work(n);
    for (std::size_t j = 0; j < n; ++j) {
        const long double uj = t.u[j];
        u2[j] = uj * uj;
        iu2[j] = 1.0L / (uj * uj);
    }
    auto xt1 = cumulative_simpson(std::span<const long double>(u2), h);
    for (std::size_t j = 0; j < n; ++j) work[j] = xt1[j] * iu2[j];
    auto xt2 = cumulative_simpson(std::span<const long double>(work), h);
    auto xp1 = cumulative_simpson(std::span<const long double>(iu2), h);
    for (std::size_t j = 0; j < n; ++j) work[j] = -xp1[j] * u2[j]; // xplain[1] = -integral
    auto xp2 = cumulative_simpson(std::span<const long double>(work), h);

    auto check = [&](const GridFunction& stored, const std::vector<long double>& fresh, double sign,
                     const char* name) {
        double scale = 1.0, dev = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            scale = std::max(scale, std::fabs(static_cast<double>(fresh[j])));
            dev = std::max(dev, std::fabs(stored[j] - sign * static_cast<double>(fresh[j])));
        }
        if (dev > 1e-10 * scale)
            throw std::runtime_error(std::string("load_table: spot check failed for ") + name +
                                     " (max deviation " + std::to_string(dev) + ")");
    };
    check(t.xtilde[1], xt1, 1.0, "xtilde[1]");
    check(t.xtilde[2], xt2, -1.0, "xtilde[2]");
    check(t.xplain[1], xp1, -1.0, "xplain[1]");
    check(t.xplain[2], xp2, 1.0, "xplain[2]");
}

} // namespace

void save_table(const SppsTable& t, std::ostream& os) {
    nlohmann::json j;
    j["order"] = t.order;
    j["period"] = t.period();
    j["u"] = grid_to_json(t.u);
    j["phi"] = grid_to_json(t.phi);
    j["xt"] = nlohmann::json::array();
    j["x"] = nlohmann::json::array();
    for (const auto& g : t.xtilde) j["xt"].push_back(grid_to_json(g));
    for (const auto& g : t.xplain) j["x"].push_back(grid_to_json(g));
    os << j.dump();
}

void save_table(const SppsTable& t, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("save_table: cannot open " + path);
    save_table(t, os);
}

SppsTable load_table(std::istream& is) {
    nlohmann::json j;
    is >> j;
    SppsTable t;
    t.order = j.at("order").get<int>();
    t.u = grid_from_json(j.at("u"));
    t.phi = grid_from_json(j.at("phi"));
    for (const auto& e : j.at("xt")) t.xtilde.push_back(grid_from_json(e));
    for (const auto& e : j.at("x")) t.xplain.push_back(grid_from_json(e));
    if (t.xtilde.size() != static_cast<std::size_t>(2 * t.order + 2) || t.xplain.size() != t.xtilde.size())
        throw std::runtime_error("load_table: table length does not match the stored order");
    t.disc_coeffs.reserve(t.order + 1);
    for (int n = 0; n <= t.order; ++n)
        t.disc_coeffs.push_back(static_cast<long double>(t.xtilde[2 * n].back()) +
                                static_cast<long double>(t.xplain[2 * n].back()));
    spot_check(t);
    return t;
}

SppsTable load_table(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("load_table: cannot open " + path);
    return load_table(is);
}

} // namespace sppspec
