import cmath
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from lensskein.coeffs import (Cyclo, EvalTarget, HalfLaurent, NotAUnitError, RatFunc,
                              chebyshev_first, chebyshev_second, chebyshev_unit_start,
                              cyclotomic_poly, euler_phi, poly_eval)

laurent = st.dictionaries(st.integers(-12, 12), st.integers(-5, 5), max_size=5).map(HalfLaurent)


def cyclo(L):
    d = euler_phi(L)
    return st.lists(st.integers(-4, 4), min_size=d, max_size=d).map(lambda c: Cyclo(L, c))


# --- HalfLaurent ------------------------------------------------------------

def test_loop_value_is_minus_a2_minus_a_minus2():
    A = HalfLaurent.A
    assert HalfLaurent.loop_value() == -A(2) - A(-2)
    assert HalfLaurent.h(2) == A(1)


def test_inverse_only_for_monomials():
    assert HalfLaurent.A(3).inverse() == HalfLaurent.A(-3)
    assert (HalfLaurent.const(2) * HalfLaurent.h(-1)).inverse() == HalfLaurent({1: Fraction(1, 2)})
    with pytest.raises(NotAUnitError):
        HalfLaurent.loop_value().inverse()


@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == 0


@given(laurent, laurent)
def test_conjugation_is_ring_map(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert x.conjugate().conjugate() == x


@given(laurent)
def test_poly_roundtrip(x):
    shift, coeffs = x.to_poly()
    assert HalfLaurent.from_poly(shift, coeffs) == x


# --- RatFunc ----------------------------------------------------------------

@given(laurent, laurent.filter(lambda x: not x.is_zero()), laurent)
def test_ratfunc_field(x, y, z):
    fx, fy, fz = RatFunc(x), RatFunc(y), RatFunc(z)
    assert (fx / fy) * fy == fx
    assert fx / fy + fz == (fx + fz * fy) / fy


def test_ratfunc_normal_form_is_canonical():
    d = HalfLaurent.loop_value()
    assert RatFunc(d * d, d) == RatFunc(d)
    assert hash(RatFunc(d * d, d)) == hash(RatFunc(d))


# --- cyclotomic fields ------------------------------------------------------

def test_cyclotomic_polys_frozen():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    assert cyclotomic_poly(15) == (1, -1, 0, 1, -1, 1, 0, -1, 1)


@pytest.mark.parametrize("L", [1, 3, 5, 8, 12, 15])
def test_cyclotomic_poly_vanishes_at_primitive_root(L):
    z = cmath.exp(2j * cmath.pi / L)
    assert abs(sum(c * z ** i for i, c in enumerate(cyclotomic_poly(L)))) < 1e-9


def test_cube_root_relation():
    x = Cyclo.root(3)
    assert x * x == -x - 1
    assert x ** 3 == Cyclo.const(3, 1)


@pytest.mark.parametrize("L", [3, 5, 12, 15])
def test_cyclo_matches_complex_embedding(L):
    @settings(max_examples=40, deadline=None)
    @given(cyclo(L), cyclo(L))
    def check(x, y):
        assert abs((x * y).to_complex() - x.to_complex() * y.to_complex()) < 1e-8
        assert abs((x + y).to_complex() - x.to_complex() - y.to_complex()) < 1e-8
        if not x.is_zero():
            assert x * x.inverse() == Cyclo.const(L, 1)
    check()


def test_embed_preserves_value():
    x = Cyclo.two_cos(5, 1)
    y = x.embed(15)
    assert abs(y.to_complex() - 2 * cmath.cos(2 * cmath.pi / 5)) < 1e-12
    assert y * y == (x * x).embed(15)


# --- evaluation targets -----------------------------------------------------

def test_loop_value_at_targets():
    d = HalfLaurent.loop_value()
    assert EvalTarget.classical().evaluate(d) == -2
    assert EvalTarget.root(3).evaluate(d) == Cyclo.const(3, 1)
    z5 = cmath.exp(2j * cmath.pi / 5)
    assert abs(EvalTarget.root(5).evaluate(d).to_complex() - (-(z5 ** 4) - z5 ** -4)) < 1e-12


@pytest.mark.parametrize("t", [EvalTarget.classical(), EvalTarget.root(3), EvalTarget.root(5, 2),
                               EvalTarget.root(3, L=12), EvalTarget.generic()])
def test_evaluate_is_ring_homomorphism(t):
    @settings(max_examples=30, deadline=None)
    @given(laurent, laurent)
    def check(x, y):
        assert t.evaluate(x * y) == t.evaluate(x) * t.evaluate(y)
        assert t.evaluate(x + y) == t.evaluate(x) + t.evaluate(y)
    check()


def test_root_target_validation():
    with pytest.raises(ValueError):
        EvalTarget.root(4)
    with pytest.raises(ValueError):
        EvalTarget.root(9, k=3)
    with pytest.raises(ValueError):
        EvalTarget.root(3, L=10)


# --- Chebyshev --------------------------------------------------------------

def test_chebyshev_frozen():
    assert chebyshev_first(0) == (2,)
    assert chebyshev_first(2) == (-2, 0, 1)
    assert chebyshev_first(3) == (0, -3, 0, 1)
    assert chebyshev_unit_start(3) == (0, -2, 0, 1)
    assert chebyshev_second(3) == (0, -2, 0, 1)


@pytest.mark.parametrize("n", range(31))
def test_trace_chebyshev_power_sum(n):
    # t_n(l + 1/l) = l^n + l^-n, checked in Q(x) through Laurent polynomials
    l = HalfLaurent.h()
    lhs = poly_eval(chebyshev_first(n), l + l.inverse(), HalfLaurent.const(1))
    assert lhs == l ** n + l ** -n


@pytest.mark.parametrize("n", range(1, 31))
def test_second_kind_identity(n):
    # s_n(l + 1/l) (l - 1/l) = l^(n+1) - l^-(n+1)
    l = HalfLaurent.h()
    one = HalfLaurent.const(1)
    lhs = poly_eval(chebyshev_second(n), l + l.inverse(), one) * (l - l.inverse())
    assert lhs == l ** (n + 1) - l ** -(n + 1)


@pytest.mark.parametrize("m,n", [(2, 3), (3, 3), (3, 5), (4, 7)])
def test_trace_chebyshev_composition(m, n):
    x = HalfLaurent.h()
    one = HalfLaurent.const(1)
    inner = poly_eval(chebyshev_first(n), x, one)
    assert poly_eval(chebyshev_first(m), inner, one) == poly_eval(chebyshev_first(m * n), x, one)


def test_families_differ_only_through_start():
    # same leading term, different lower-order terms
    for n in range(2, 12):
        diff = [a - b for a, b in zip(chebyshev_first(n), chebyshev_unit_start(n))]
        assert diff[n] == 0 and any(diff)
