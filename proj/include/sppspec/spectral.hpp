#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sppspec/potential.hpp"
#include "sppspec/spps.hpp"

namespace sppspec {

/// Truncated Hill discriminant D_N(mu) = sum_{n<=N} c_n mu^n with
/// c_n = xtilde[2n](T) + xplain[2n](T); c_0 == 2 exactly.
/// mu is the series variable (the squared frequency of the first-order
/// system). lambda_shift records the offset of the reporting axis:
/// reported lambda = mu + lambda_shift.
struct DiscriminantPolynomial {
    std::vector<long double> coeffs;
    double period = 0.0;
    int order = 0;
    double trusted_radius = 0.0; // truncation diagnostic
    double noise_cap_radius = 0.0; // rounding-noise diagnostic
    double lambda_shift = 0.0;

    double usable_radius() const { return trusted_radius < noise_cap_radius ? trusted_radius : noise_cap_radius; }
};

/// Reads the coefficients off at the right endpoint. Requires the table's
/// u to return to its start value (|u(T) - u(0)| within the periodicity
/// tolerance); the series representation of the discriminant needs the
/// boundary terms in u, u' to cancel, which they only do for periodic u.
DiscriminantPolynomial build_discriminant(const SppsTable& t, double lambda_shift = 0.0);

/// Horner evaluation of the series in its own variable mu (so 0 -> 2).
double eval_discriminant(const DiscriminantPolynomial& p, double mu);
/// Evaluation on the reporting axis: D(lambda - lambda_shift).
double eval_discriminant_at_lambda(const DiscriminantPolynomial& p, double lambda);
/// d D / d mu, used to pin tangential (double) band edges.
double eval_discriminant_derivative(const DiscriminantPolynomial& p, double mu);
/// Rounding-noise bound of the evaluation at mu.
double eval_noise(const DiscriminantPolynomial& p, double mu);

enum class BoundaryCondition { periodic, antiperiodic };
enum class EdgeMultiplicity { simple, double_or_close };
enum class SpectralClass { band, gap, edge };

struct BandEdge {
    double lambda = 0.0; // reporting axis
    BoundaryCondition bc = BoundaryCondition::periodic;
    EdgeMultiplicity multiplicity = EdgeMultiplicity::simple;
};

struct SpectrumReport {
    std::vector<BandEdge> edges; // ascending; double edges listed twice
    std::vector<std::pair<double, double>> bands;
    std::vector<std::pair<double, double>> gaps;
    /// omega = +-sqrt(lambda) for edges with lambda >= 0 (one entry for
    /// lambda = 0); edges with lambda < 0 have no real omega and are
    /// listed separately instead.
    std::vector<double> dirac_edges;
    std::vector<double> no_real_omega;
    double lambda_shift = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
};

struct ScanOptions {
    double points_per_unit = 1e4;
    double bisect_rel_tol = 1e-12;
    double tangent_threshold = 1e-6; // |D -+ 2| below this at a sign-less minimum
    double merge_tol = 1e-9;         // roots closer than this flag double_or_close
};

/// Roots of D_N -+ 2 in [lambda_lo, lambda_hi] (reporting axis) by a
/// sign-change scan plus bisection; tangential touches are pinned through
/// the derivative polynomial and reported twice with the double_or_close
/// flag. Throws std::invalid_argument when the window exceeds the usable
/// radius, naming the usable window.
SpectrumReport find_band_edges(const DiscriminantPolynomial& p, double lambda_lo, double lambda_hi,
                               const ScanOptions& opts = {});

/// band iff |D| < 2 - tol, gap iff |D| > 2 + tol, else edge (tol 1e-9).
SpectralClass classify(const DiscriminantPolynomial& p, double lambda, double tol_edge = 1e-9);

/// The +-sqrt map applied to a report's edges (recomputed fresh).
std::vector<double> dirac_eigenvalues(const SpectrumReport& report);

/// Closed-form eigenvalues of the m = 2 family on the reporting axis:
/// 2(1 - sqrt(1+xi^2)), 4, 2(1 + sqrt(1+xi^2)). Requires m == 2.
struct RazavyReference {
    double lambda0, lambda3, lambda4;
};
RazavyReference razavy_reference(const RazavyParams& p);

const char* to_string(BoundaryCondition bc);
const char* to_string(EdgeMultiplicity m);
const char* to_string(SpectralClass c);

} // namespace sppspec
