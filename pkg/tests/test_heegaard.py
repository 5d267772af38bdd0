import json

import pytest

from lensskein.annulus import SkeinVector
from lensskein.coeffs import EvalTarget, HalfLaurent, RatFunc
from lensskein.heegaard import (CharacterDomainError, GluingData, InconclusiveTruncation,
                                ProjectionOverflow, build_relations, core_weight,
                                default_completion, fiber_dim, fiber_report,
                                frobenius_well_defined, h1_descends, h1_equivariance,
                                module_act, psi_sign, quotient_basis, verify_classical_iso)
from lensskein.charvar import char_scheme

A = HalfLaurent.A
DELTA = HalfLaurent.loop_value()
GENERIC, CLASSICAL, ROOT3 = EvalTarget.generic(), EvalTarget.classical(), EvalTarget.root(3)


def test_gluing_validation():
    assert default_completion(5, 2) == (2, 1)
    assert default_completion(1, 0) == (0, 1)
    g = GluingData.lens(7, 2)
    assert g.p * g.s - g.q * g.r == 1
    alt = g.alternative()
    assert (alt.r, alt.s) != (g.r, g.s) and alt.p * alt.s - alt.q * alt.r == 1
    with pytest.raises(ValueError):
        GluingData(4, 2, 1, 1)
    with pytest.raises(ValueError):
        GluingData(5, 2, 1, 1)


def test_relations_respect_truncation():
    for row in build_relations(GluingData.lens(3, 1), 6, ROOT3):
        assert row and all(i <= 6 and j <= 6 for i, j in row)


def test_sphere_frozen_values():
    # unknot, Hopf link and two-component unlink in S^3
    P = quotient_basis(GluingData.lens(1, 0), GENERIC)
    assert P.basis == [(0, 0)]
    one = GENERIC.one()
    assert P.project({(1, 0): one}) == [RatFunc(DELTA)]
    assert P.project({(0, 1): one}) == [RatFunc(DELTA)]
    assert P.project({(1, 1): one}) == [RatFunc(DELTA * (-A(4) - A(-4)))]
    assert P.project({(2, 0): one}) == [RatFunc(DELTA * DELTA)]


def test_sphere_mirror_agrees():
    for t in (GENERIC, ROOT3):
        P = quotient_basis(GluingData.lens(1, 0), t)
        Q = quotient_basis(GluingData.lens(1, 0, mirror=True), t)
        assert P.dim == Q.dim == 1


@pytest.mark.parametrize("p,q,dim", [(1, 0, 1), (2, 1, 2), (3, 1, 2), (4, 1, 3), (5, 2, 3)])
def test_small_dimensions_all_targets(p, q, dim):
    for t in (GENERIC, CLASSICAL, ROOT3):
        P = quotient_basis(GluingData.lens(p, q), t)
        assert P.dim == dim
        assert len(P.certificates) == 3
        assert len({d for _, d in P.certificates}) == 1


def test_truncation_cap_raises():
    with pytest.raises(InconclusiveTruncation):
        quotient_basis(GluingData.lens(5, 2), ROOT3, D=4, D_max=6)


def test_projection_overflow():
    P = quotient_basis(GluingData.lens(2, 1), ROOT3)
    with pytest.raises(ProjectionOverflow):
        P.project({(P.D + 1, 0): ROOT3.one()})


def test_enlarged_keeps_basis():
    P = quotient_basis(GluingData.lens(3, 1), ROOT3)
    Q = P.enlarged(P.D + 4)
    assert Q.basis == P.basis
    v = {(3, 2): ROOT3.one()}
    assert P.project(v) == Q.project(v)


def test_presentation_json_roundtrip():
    P = quotient_basis(GluingData.lens(4, 1), ROOT3)
    data = P.to_json()
    assert json.loads(json.dumps(data, sort_keys=True)) == data


def test_core_weight():
    assert core_weight(3, 1) == 1 and core_weight(5, 2) == 0
    assert core_weight(4, 1, 0) == 0 and core_weight(4, 1, 1) == 1
    assert psi_sign(5, 2) == -1 and psi_sign(3, 1) == 1


@pytest.mark.parametrize("p,q", [(2, 1), (3, 1), (4, 1), (5, 2)])
def test_fibers_are_lines(p, q):
    P = quotient_basis(GluingData.lens(p, q), ROOT3)
    ws = (0, 1) if p % 2 == 0 else (0,)
    for w in ws:
        rep = fiber_report(P, w)
        assert [pt["fiber_dim"] for pt in rep["points"]] == [1] * P.dim
        assert rep["sum_rule"]["holds"]


def test_fiber_rejects_non_points():
    P = quotient_basis(GluingData.lens(3, 1), ROOT3)
    with pytest.raises(CharacterDomainError):
        fiber_dim(P, 0)
    with pytest.raises(ValueError):
        fiber_dim(quotient_basis(GluingData.lens(3, 1), CLASSICAL), 2)


def test_wrong_spin_weight_breaks_fibers():
    # with the opposite sign the threaded core misses the character points
    P = quotient_basis(GluingData.lens(3, 1), ROOT3)
    pts = char_scheme(3).points
    assert [fiber_dim(P, x, w=0) for x in pts] == [1, 1]
    Zmat, _ = module_act(SkeinVector({1: 1}), P)
    assert [_fiber_with_sign(Zmat, x, -psi_sign(3, 1)) for x in pts] == [0, 0]


def _fiber_with_sign(Z, t0, sign):
    from lensskein.heegaard import _to_common, rank
    L = 3 * (t0.order if hasattr(t0, "order") else 1)
    M = [[_to_common(x, L) * sign - (_to_common(t0, L) if r == c else 0)
          for c, x in enumerate(row)] for r, row in enumerate(Z)]
    return len(Z) - rank(M)


def test_frobenius_operators_commute():
    P = quotient_basis(GluingData.lens(5, 2), ROOT3)
    M1, P = module_act(SkeinVector({1: 1}), P)
    M2, _ = module_act(SkeinVector({2: 1}), P)
    n = P.dim
    prod = lambda X, Y: [[sum((X[i][k] * Y[k][j] for k in range(n)), ROOT3.zero())
                          for j in range(n)] for i in range(n)]
    assert prod(M1, M2) == prod(M2, M1)
    assert prod(M1, M1) == module_act(SkeinVector({2: 1}), P)[0]


@pytest.mark.parametrize("p,q", [(3, 1), (5, 2)])
def test_unit_family_not_well_defined(p, q):
    P = quotient_basis(GluingData.lens(p, q), ROOT3)
    assert frobenius_well_defined(P, "trace")
    assert not frobenius_well_defined(P, "unit")


def test_h1_action_descends():
    P = quotient_basis(GluingData.lens(4, 1), ROOT3)
    assert h1_descends(P)
    assert h1_equivariance(P, SkeinVector({1: 1}))


@pytest.mark.parametrize("p,q", [(1, 0), (2, 1), (3, 1), (5, 2)])
def test_classical_iso(p, q):
    rep = verify_classical_iso(GluingData.lens(p, q))
    assert rep["passed"], rep
