#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sppspec/grid_function.hpp"

namespace sppspec {

/// Coefficient tables for the spectral parameter power series built on a
/// nodeless positive u over one period. Two families are generated by
/// alternating cumulative integrals:
///   xtilde: odd step against u^2, even step against -1/u^2,
///   xplain: odd step against -1/u^2, even step against u^2,
/// both seeded with the constant 1 and carried to index 2N+1.
/// One family evaluated at even/odd indices supplies the series for the
/// fundamental solutions of -f'' + (phi^2 - phi')f = lambda f and the
/// other those of the partner equation with phi^2 + phi'.
struct SppsTable {
    GridFunction u;
    GridFunction phi; // used for u' = -phi*u in derivative assembly
    int order = 0;    // N; series in lambda are truncated at lambda^N
    std::vector<GridFunction> xtilde; // indices 0..2N+1
    std::vector<GridFunction> xplain; // indices 0..2N+1
    /// Endpoint sums xtilde[2n](T) + xplain[2n](T), n = 0..N, captured from
    /// the long double recursion before the tables are rounded to double.
    std::vector<long double> disc_coeffs;

    double period() const { return u.period(); }
};

/// Runs the recursion (internally in long double). Requires u > 0 on the
/// grid (1/u^2 must exist), matching grids for u and phi, and N >= 1.
SppsTable build_table(const GridFunction& u, const GridFunction& phi, int order);

/// Builds the nodeless seed u = exp(-int phi) at extended precision and
/// feeds it to the recursion unrounded; the stored u is the rounded seed.
/// Same zero-mean requirement as build_u. This is what the pipeline uses:
/// a double-rounded seed costs several digits in the high coefficients.
SppsTable build_table_from_phi(const GridFunction& phi, int order);

/// Values of one fundamental pair and its derivatives at a grid point.
struct PairValues {
    double v1 = 0, d1 = 0, v2 = 0, d2 = 0;
    bool trusted = true; // false when |lambda| exceeds the truncation radius
};

/// Fundamental pair f1, f2 of the (phi^2 - phi') equation with
/// f1(0)=1, f1'(0)=0, f2(0)=0, f2'(0)=1 (exact at x = 0 by construction).
/// x is resolved to the nearest grid node.
PairValues f_pair(const SppsTable& t, double x, double lambda);

/// Fundamental pair g1, g2 of the partner (phi^2 + phi') equation,
/// g1(0)=g2'(0)=1, g1'(0)=g2(0)=0. phi0 must be phi(0). The removable
/// 1/lambda in the closed form is handled by an index-shifted series, so
/// lambda = 0 needs no special case.
PairValues g_pair(const SppsTable& t, double phi0, double x, double lambda);

/// Whole-grid evaluation at fixed lambda (value and derivative samples of
/// both members); used for cell construction and invariant sweeps.
struct PairGrid {
    std::vector<double> v1, d1, v2, d2;
    bool trusted = true;
};
PairGrid f_pair_grid(const SppsTable& t, double lambda);
PairGrid g_pair_grid(const SppsTable& t, double phi0, double lambda);

/// First-order transmutation: given f and f' at a point, the partner
/// component is (f' + phi f)/omega. omega = 0 has no inverse image here;
/// use g_pair instead.
double intertwine(double f, double fp, double phi_x, double omega);

/// Truncation diagnostic: the largest |lambda| at which the last retained
/// discriminant term stays below 1e-12 times the running partial-sum
/// magnitude. Requires order >= 4. Positive for every table.
double estimate_radius(const SppsTable& t);

/// Rounding-noise bound for the discriminant sum at |lambda| = r:
/// eps_long_double * sum_n |c_n| r^n.
double noise_estimate(const SppsTable& t, double r);
/// Largest radius with noise_estimate <= cap (default 0.1, i.e. the +-2
/// crossings are still resolvable).
double noise_radius(const SppsTable& t, double cap = 0.1);

/// JSON caching: {order, period, u, phi, xt, x}. Loading re-integrates the
/// n = 1 and n = 2 entries and rejects tables that fail the spot check.
void save_table(const SppsTable& t, std::ostream& os);
void save_table(const SppsTable& t, const std::string& path);
SppsTable load_table(std::istream& is);
SppsTable load_table(const std::string& path);

} // namespace sppspec
