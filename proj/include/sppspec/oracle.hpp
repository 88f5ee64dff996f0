#pragma once

#include <cstddef>
#include <vector>

#include "sppspec/grid_function.hpp"
#include "sppspec/spectral.hpp"

namespace sppspec {

/// Transfer-matrix entries over one period of -y'' + q y = lambda y,
/// computed by direct integration. Deliberately shares no quadrature or
/// series code with the power-series path.
struct MonodromyResult {
    double lambda = 0.0;
    double f1T = 0.0, f1pT = 0.0, f2T = 0.0, f2pT = 0.0;
    double discriminant = 0.0; // f1T + f2pT
    double det = 0.0;          // f1T*f2pT - f1pT*f2T, 1 up to rounding
};

inline constexpr std::size_t kOracleDefaultSteps = 20000;

/// Classic fourth-order Runge-Kutta from 0 to T for both initial-condition
/// columns; state carried in long double. q at off-node points comes from
/// periodic 4-point cubic interpolation of the samples. The step count is
/// raised when needed to keep at least 40 steps per oscillation wavelength
/// of the solution. Throws std::runtime_error with the x location if the
/// state leaves the representable range.
MonodromyResult integrate_monodromy(const GridFunction& q, double lambda,
                                    std::size_t steps = kOracleDefaultSteps);

struct OracleEdge {
    double lambda = 0.0;
    BoundaryCondition bc = BoundaryCondition::periodic;
    EdgeMultiplicity multiplicity = EdgeMultiplicity::simple;
};

struct OracleScanOptions {
    double points_per_unit = 50; // monodromy solves are costly
    double bisect_rel_tol = 1e-12;
    double tangent_detect = 1e-2; // sample-level trigger for a possible touch
    double tangent_verify = 1e-7; // |D -+ 2| at the refined stationary point
    std::size_t steps = kOracleDefaultSteps;
};

/// Sign-change scan and bisection on D(lambda) -+ 2, with tangential
/// touches refined by golden-section minimisation of |D -+ 2|. Same
/// protocol as the series-side edge finder, independent code path.
std::vector<OracleEdge> oracle_band_edges(const GridFunction& q, double lambda_lo, double lambda_hi,
                                          const OracleScanOptions& opts = {});

} // namespace sppspec
