#pragma once

#include <functional>
#include <optional>

#include "sppspec/grid_function.hpp"

namespace sppspec {

inline constexpr std::size_t kDefaultGrid = 5000;

/// A T-periodic scalar potential for the first-order system, i.e. the
/// function coupling the two spinor components. Must be zero-mean so that
/// u = exp(-int Phi) is periodic.
struct PeriodicScalarPotential {
    GridFunction phi;
    /// Exact evaluator, present when a closed form exists.
    std::function<double(double)> phi_at;
    /// Additive offset between the reference Hill potential this Phi is
    /// quoted against and Phi^2 - Phi': reference = (Phi^2 - Phi') + offset.
    /// Zero for a bare Phi; the Razavy family uses 2A(xi) so spectra are
    /// reported on the conventional eigenvalue axis of that family.
    double hill_offset = 0.0;
};

/// Validates periodicity |Phi(0)-Phi(T)| <= 1e-10*max|Phi| and zero mean
/// |int Phi| <= 1e-8*T*max(1, max|Phi|); throws std::invalid_argument with
/// the measured quantity otherwise.
PeriodicScalarPotential make_potential(GridFunction phi,
                                       std::function<double(double)> phi_at = nullptr,
                                       double hill_offset = 0.0);

enum class WellType { single_well, threshold, double_well };

struct RazavyParams {
    double xi = 1.0;
    int m = 2;
};

void validate(const RazavyParams& p);
/// A(xi) = 1 - sqrt(1 + xi^2), always negative; xi - A cos2x > 0 everywhere.
double razavy_A(double xi);
WellType razavy_well_type(const RazavyParams& p);

/// The scalar potential Phi(x) = sin2x (xi/2 - 2A/(xi - A cos2x)), period pi.
/// Its partner Hill potentials are the m = 2 members of the trigonometric
/// Razavy family, offset by 2A; hill_offset is set accordingly.
PeriodicScalarPotential razavy_phi(const RazavyParams& p, std::size_t grid = kDefaultGrid);

/// V1(x) = (xi^2/8)(1 - cos4x) - (m+1) xi cos2x on the grid.
GridFunction razavy_v1(const RazavyParams& p, std::size_t grid = kDefaultGrid);

/// The partner potential V2 = V1 + 2 Phi'. Closed form requires m = 2;
/// other m throw (callers may still form Phi^2 + Phi' numerically).
GridFunction razavy_v2(const RazavyParams& p, std::size_t grid = kDefaultGrid);

/// Nodeless solution u(x) = exp(-int_0^x Phi), normalized so u(0) = 1
/// exactly. Rejects potentials with nonzero mean (measured value in the
/// message) rather than shifting them.
GridFunction build_u(const PeriodicScalarPotential& pot);

} // namespace sppspec
