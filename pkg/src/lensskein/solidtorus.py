"""The solid-torus skein module k[z] as a module over the torus algebra.

The three generators act simply in the basis S_k(z) of second-kind
Chebyshev polynomials (S_0 = 1, S_1 = z, z S_k = S_(k+1) + S_(k-1)):

    e_(1,0) S_k = S_(k+1) + S_(k-1)
    e_(0,1) S_k = -(A^(2k+2) + A^-(2k+2)) S_k
    e_(1,1) S_k = (mu_k / mu_(k+1)) S_(k+1) + (mu_k / mu_(k-1)) S_(k-1)

with twist eigenvalues mu_k = (-1)^k A^(k^2 + 2k). Diagram resolution of the
same curves is kept as an independent check. Every other basis element is
reached through the product-to-sum relations

    z . e_(a-1,1)    = A e_(a,1) + A^-1 e_(a-2,1)
    e_(0,1) . e_(a,b) = A^-a e_(a,b+1) + A^a e_(a,b-1)

together with e_(a,0) = t_a(z) and e_(0,b) = t_b(e_(0,1)).
"""
from __future__ import annotations

import threading
from functools import lru_cache

from .annulus import (AnnularWord, Crossing, SkeinVector, action_diagram,
                      framing_normalize, resolve_laurent)
from .coeffs import EvalTarget, HalfLaurent, chebyshev_first, chebyshev_second
from .torusalg import TorusElement, normalize_index

_lock = threading.RLock()
_ONE = HalfLaurent.const(1)
_DELTA = HalfLaurent.loop_value()


def _z_power(k: int) -> SkeinVector:
    return SkeinVector({k: _ONE})


def _apply(op, v: SkeinVector) -> SkeinVector:
    """Extend a basis action k -> SkeinVector linearly over v."""
    out = SkeinVector()
    for k, c in v.coeffs.items():
        out = out + op(k).scale(c)
    return out


@lru_cache(maxsize=None)
def _z_in_s_basis(n: int) -> tuple:
    """Integer coordinates of z**n in the basis S_0, ..., S_n."""
    if n == 0:
        return (1,)
    prev = _z_in_s_basis(n - 1)
    out = [0] * (n + 1)
    for k, c in enumerate(prev):
        if c:
            out[k + 1] += c
            if k:
                out[k - 1] += c
    return tuple(out)


def _s_to_z(coeffs: dict) -> SkeinVector:
    """Convert {k: c} in the S basis back to monomials."""
    out: dict = {}
    for k, c in coeffs.items():
        for i, m in enumerate(chebyshev_second(k)):
            if m:
                out[i] = out[i] + c * m if i in out else c * m
    return SkeinVector(out)


def _mu(k: int) -> HalfLaurent:
    return HalfLaurent.A(k * k + 2 * k) * (-1 if k % 2 else 1)


@lru_cache(maxsize=None)
def _meridian_action(n: int) -> SkeinVector:
    coeffs = {}
    for k, c in enumerate(_z_in_s_basis(n)):
        if c:
            coeffs[k] = -(HalfLaurent.A(2 * k + 2) + HalfLaurent.A(-2 * k - 2)) * c
    return _s_to_z(coeffs)


@lru_cache(maxsize=None)
def _slope_one_action(n: int) -> SkeinVector:
    coeffs: dict = {}

    def put(k, c):
        coeffs[k] = coeffs[k] + c if k in coeffs else c

    for k, c in enumerate(_z_in_s_basis(n)):
        if c:
            put(k + 1, _mu(k) * _mu(k + 1).inverse() * c)
            if k:
                put(k - 1, _mu(k) * _mu(k - 1).inverse() * c)
    return _s_to_z(coeffs)


@lru_cache(maxsize=None)
def _diagram_action(a: int, b: int, n: int) -> SkeinVector:
    d = action_diagram(a, b, n)
    return framing_normalize(resolve_laurent(d), d.framing)


def _cheb_apply(n_cheb: int, op, k: int) -> SkeinVector:
    """t_n(op) applied to z**k, with op given on basis monomials."""
    coeffs = chebyshev_first(n_cheb)
    out = SkeinVector()
    cur = _z_power(k)
    for i, c in enumerate(coeffs):
        if i:
            cur = _apply(op, cur)
        if c:
            out = out + cur.scale(c)
    return out


@lru_cache(maxsize=None)
def act_basis(a: int, b: int, n: int) -> SkeinVector:
    """e_(a,b) acting on z**n, exact over the Laurent ring in h."""
    a, b = normalize_index(a, b)
    if (a, b) == (0, 0):
        return _z_power(n).scale(2)
    if (a, b) == (1, 0):
        return _z_power(n + 1)
    if (a, b) == (0, 1):
        return _meridian_action(n)
    if (a, b) == (1, 1):
        return _slope_one_action(n)
    if b == 0:
        return _cheb_apply(a, lambda k: _z_power(k + 1), n)
    if a == 0:
        return _cheb_apply(b, lambda k: act_basis(0, 1, k), n)
    if b == 1:
        # A e_(a,1) = z . e_(a-1,1) - A^-1 e_(a-2,1)
        lhs = _apply(lambda k: _z_power(k + 1), act_basis(a - 1, 1, n))
        rhs = act_basis(a - 2, 1, n).scale(HalfLaurent.A(-1))
        return (lhs - rhs).scale(HalfLaurent.A(-1))
    if b > 1:
        # e_(a,b) = A^a e01.e_(a,b-1) - A^2a e_(a,b-2)
        first = _apply(lambda k: act_basis(0, 1, k), act_basis(a, b - 1, n))
        return first.scale(HalfLaurent.A(a)) - act_basis(a, b - 2, n).scale(HalfLaurent.A(2 * a))
    # b < 0: e_(a,b) = A^-a e01.e_(a,b+1) - A^-2a e_(a,b+2)
    first = _apply(lambda k: act_basis(0, 1, k), act_basis(a, b + 1, n))
    return first.scale(HalfLaurent.A(-a)) - act_basis(a, b + 2, n).scale(HalfLaurent.A(-2 * a))


def act_basis_direct(a: int, b: int, n: int) -> SkeinVector:
    """Same as :func:`act_basis` but resolved from a single diagram.

    Only primitive (a, b) have a diagram; this is the independent oracle.
    """
    return _diagram_action(*normalize_index(a, b), n)


def act_laurent(x: TorusElement, v: SkeinVector) -> SkeinVector:
    out = SkeinVector()
    for (a, b), c in x.terms.items():
        if (a, b) == (0, 0):
            out = out + v.scale(c)
            continue
        with _lock:
            piece = _apply(lambda k: act_basis(a, b, k), v)
        out = out + piece.scale(c)
    return out


def act(x: TorusElement, v: SkeinVector, t: EvalTarget | None = None) -> SkeinVector:
    """x acting on v. With ``t`` given, the HalfLaurent result is evaluated."""
    w = act_laurent(x, v)
    return w if t is None else w.map_coeffs(t.evaluate)


def act_basis_at(a: int, b: int, n: int, t: EvalTarget) -> SkeinVector:
    return _evaluated(a, b, n, t)


@lru_cache(maxsize=None)
def _evaluated(a, b, n, t):
    with _lock:
        v = act_basis(a, b, n)
    return v.map_coeffs(t.evaluate)


def curve_power_diagram(k: int) -> AnnularWord:
    """Annular closure of the braid s_1 ... s_(k-1) on k strands."""
    return AnnularWord(tuple(Crossing(i, 1) for i in range(k - 1)), k, 0, k - 1)


def curve_power(k: int, t: EvalTarget | None = None) -> SkeinVector:
    """The embedded curve winding k times around the core."""
    if k < 0:
        raise ValueError("winding must be nonnegative")
    if k == 0:
        v = SkeinVector({0: _DELTA})
    else:
        d = curve_power_diagram(k)
        v = framing_normalize(resolve_laurent(d), d.framing)
    return v if t is None else v.map_coeffs(t.evaluate)


def fr_solid(v: SkeinVector, N: int, t: EvalTarget | None = None) -> SkeinVector:
    """Threading z**n -> t_N(z)**n; coefficients of v are pushed through t."""
    if N < 3 or N % 2 == 0:
        raise ValueError(f"threading order must be odd and >= 3, got {N}")
    tn = SkeinVector({i: c for i, c in enumerate(chebyshev_first(N))})
    out = SkeinVector()
    power = SkeinVector({0: 1})
    for n in range(v.degree() + 1):
        if n:
            power = power * tn
        c = v.coeffs.get(n)
        if c is not None and c != 0:
            coeff = t.evaluate(c) if t is not None else c
            out = out + power.scale(coeff)
    if t is not None:
        one = t.one()
        out = out.map_coeffs(lambda c: c * one)
    return out
