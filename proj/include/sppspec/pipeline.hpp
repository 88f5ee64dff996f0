#pragma once

#include "sppspec/potential.hpp"
#include "sppspec/spectral.hpp"
#include "sppspec/spps.hpp"

namespace sppspec {

inline constexpr int kDefaultOrder = 100;

/// Everything derived from one potential: the nodeless seed, the series
/// tables and the discriminant polynomial carrying the reporting offset.
struct Problem {
    PeriodicScalarPotential potential;
    GridFunction u;
    SppsTable table;
    DiscriminantPolynomial poly;
};

Problem build_problem(PeriodicScalarPotential pot, int order = kDefaultOrder);
Problem razavy_problem(const RazavyParams& p, std::size_t grid = kDefaultGrid, int order = kDefaultOrder);

} // namespace sppspec
