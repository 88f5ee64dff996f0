#include "sppspec/pipeline.hpp"

namespace sppspec {

Problem build_problem(PeriodicScalarPotential pot, int order) {
    Problem pr;
    pr.potential = std::move(pot);
    pr.table = build_table_from_phi(pr.potential.phi, order);
    pr.u = pr.table.u;
    pr.poly = build_discriminant(pr.table, pr.potential.hill_offset);
    return pr;
}

Problem razavy_problem(const RazavyParams& p, std::size_t grid, int order) {
    return build_problem(razavy_phi(p, grid), order);
}

} // namespace sppspec
