"""Skein algebra of the torus in the basis e_(a,b).

Indices are taken up to overall sign with representative a > 0, or a == 0
and b >= 0. The key (0, 0) holds the coefficient of the unit. The product
formula produces e_(0,0), which equals 2 times the unit.
"""
from __future__ import annotations

from math import gcd

from .coeffs import HalfLaurent


def normalize_index(a: int, b: int) -> tuple[int, int]:
    if a < 0 or (a == 0 and b < 0):
        return -a, -b
    return a, b


def det2(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


class TorusElement:
    """Finite combination of e_(a,b) with HalfLaurent (or other) coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        for key, c in (terms or {}).items():
            k = normalize_index(*key)
            t[k] = t[k] + c if k in t else c
        self.terms = {k: c for k, c in t.items() if c != 0}

    @classmethod
    def e(cls, a: int, b: int, c=None) -> "TorusElement":
        """Basis element e_(a,b); e(0,0) is 2 * unit."""
        c = HalfLaurent.const(1) if c is None else c
        if (a, b) == (0, 0):
            return cls({(0, 0): c * 2})
        return cls({(a, b): c})

    @classmethod
    def unit(cls, c=None) -> "TorusElement":
        return cls({(0, 0): HalfLaurent.const(1) if c is None else c})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return TorusElement(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "TorusElement":
        return TorusElement({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            return pts_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def map_coeffs(self, f) -> "TorusElement":
        return TorusElement({k: f(c) for k, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "TorusElement(0)"
        parts = []
        for k, c in sorted(self.terms.items()):
            parts.append(f"({c!r})*1" if k == (0, 0) else f"({c!r})*e{k}")
        return " + ".join(parts)


def pts_mul(x: TorusElement, y: TorusElement) -> TorusElement:
    """Product via e_u e_v = A^<u,v> e_(u+v) + A^-<u,v> e_(u-v)."""
    out: dict = {}

    def put(k, c):
        out[k] = out[k] + c if k in out else c

    def add(k, c):
        k = normalize_index(*k)
        put(k, c * 2 if k == (0, 0) else c)

    for u, cu in x.terms.items():
        for v, cv in y.terms.items():
            c = cu * cv
            if u == (0, 0) or v == (0, 0):
                # unit times anything
                put(v if u == (0, 0) else u, c)
                continue
            k = det2(u, v)
            add((u[0] + v[0], u[1] + v[1]), c * HalfLaurent.A(k))
            add((u[0] - v[0], u[1] - v[1]), c * HalfLaurent.A(-k))
    return TorusElement(out)


def reglue(x: TorusElement, G) -> TorusElement:
    """Transport e_v -> e_(Gv); for det G = -1 also apply A -> 1/A."""
    (g11, g12), (g21, g22) = G
    d = g11 * g22 - g12 * g21
    if d not in (1, -1):
        raise ValueError(f"gluing matrix {G} is not unimodular (det {d})")
    out = {}
    for (a, b), c in x.terms.items():
        key = (g11 * a + g12 * b, g21 * a + g22 * b)
        if d == -1:
            c = c.conjugate() if hasattr(c, "conjugate") else c
        out[key] = c
    return TorusElement(out)


def fr_torus(x: TorusElement, N: int) -> TorusElement:
    """Threading e_v -> e_(Nv), which is t_N(e_v) for primitive v and,
    through e_(dv) = t_d(e_v), the same formula for every index."""
    if N < 3 or N % 2 == 0:
        raise ValueError(f"threading order must be odd and >= 3, got {N}")
    return TorusElement({(N * a, N * b): c for (a, b), c in x.terms.items()})


def is_primitive(a: int, b: int) -> bool:
    return gcd(a, b) == 1


GENERATORS = ((1, 0), (0, 1), (1, 1), (1, -1))
