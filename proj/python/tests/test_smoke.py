"""Python binding smoke tests; run with PYTHONPATH pointing at the built module."""

import math

import sppspec as sp


def close(a, b, tol):
    assert abs(a - b) < tol, f"{a} vs {b} (tol {tol})"


def test_free_particle():
    phi = sp.GridFunction.sample(lambda x: 0.0, math.pi, 800)
    pot = sp.make_potential(phi)
    prob = sp.build_problem(pot, order=60)
    # D(lambda) = 2 cos(pi sqrt(lambda))
    for lam in (0.25, 1.0, 4.0, 9.0):
        close(prob.poly(lam), 2 * math.cos(math.pi * math.sqrt(lam)), 1e-8)
    rep = sp.find_band_edges(prob.poly, -0.5, 5.0)
    lams = [e.lam for e in rep.edges]
    assert len(lams) == 5, lams
    for got, want in zip(lams, (0.0, 1.0, 1.0, 4.0, 4.0)):
        close(got, want, 1e-8)
    assert rep.edges[0].bc == sp.BoundaryCondition.periodic
    assert rep.edges[1].bc == sp.BoundaryCondition.antiperiodic


def test_razavy_small():
    prob = sp.razavy_problem(sp.RazavyParams(1.0), grid=800, order=50)
    ref = sp.razavy_reference(sp.RazavyParams(1.0))
    close(ref.lambda0, -0.828427124746190, 1e-14)
    rep = sp.find_band_edges(prob.poly, ref.lambda0 - 1.0, 6.0)
    close(rep.edges[0].lam, ref.lambda0, 1e-8)
    close(rep.edges[3].lam, 4.0, 1e-4)
    close(rep.edges[4].lam, ref.lambda4, 1e-4)
    assert rep.no_real_omega and rep.no_real_omega[0] == rep.edges[0].lam


def test_pairs_and_bloch():
    phi = sp.GridFunction.sample(lambda x: 0.0, math.pi, 600)
    pot = sp.make_potential(phi)
    u = sp.build_u(pot)
    table = sp.build_table(u, pot.phi, 60)
    f = sp.f_pair(table, math.pi / 2, 4.0)
    close(f.v1, math.cos(2 * (math.pi / 2)), 1e-9)
    g = sp.g_pair(table, 0.0, math.pi / 4, 4.0)
    close(g.v2, 0.5, 1e-9)

    bp, bm = sp.bloch_factors(0.0)
    assert abs(bp - complex(0, -1)) < 1e-14 and abs(bm - complex(0, 1)) < 1e-14
    k = sp.quasimomentum(0.0, math.pi)
    close(k.real, 0.5, 1e-14)

    sol = sp.build_bloch(table, 0.25)
    v0 = sp.extend(sol, sp.Branch.plus, 0.0)
    vT = sp.extend(sol, sp.Branch.plus, math.pi)
    assert abs(vT - sol.beta_plus * v0) < 1e-9


def test_oracle():
    q = sp.GridFunction.sample(lambda x: 0.0, math.pi, 400)
    r = sp.integrate_monodromy(q, 4.0, 2000)
    close(r.discriminant, 2.0, 1e-9)
    close(r.det, 1.0, 1e-10)


def main():
    test_free_particle()
    test_razavy_small()
    test_pairs_and_bloch()
    test_oracle()
    print("python smoke tests passed")


if __name__ == "__main__":
    main()
