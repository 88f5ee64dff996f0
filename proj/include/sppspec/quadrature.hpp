#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sppspec/grid_function.hpp"

namespace sppspec {

/// Cumulative composite Simpson integral on a uniform grid.
/// Even nodes use the classic 1-4-1 panel; odd nodes add the half-panel
/// rule h*(5 f_{j-1} + 8 f_j - f_{j+1})/12. Requires an even interval
/// count. Accumulation runs in long double; out[0] == 0 exactly.
std::vector<long double> cumulative_simpson(std::span<const long double> f, long double h);

std::vector<double> cumulative_simpson(std::span<const double> f, double h);
GridFunction cumulative_integral(const GridFunction& f);

/// Definite integral over the whole grid (last entry of the cumulative sum).
double integrate(const GridFunction& f);

} // namespace sppspec
