"""Exact scalars: Laurent polynomials in h = A^(1/2), rational functions,
cyclotomic fields, evaluation targets and Chebyshev families.

All scalar classes are immutable and compare by value. Integer and
``Fraction`` operands are accepted wherever a scalar is expected.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational


class NotAUnitError(ArithmeticError):
    """Raised when inverting a HalfLaurent that is not a monomial."""


def _norm(c):
    """Demote integral Fractions to int so dict arithmetic stays fast."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q (lists, low degree first)
# ---------------------------------------------------------------------------

def _ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _pmul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return _ptrim(out)


def _pdivmod(p, q):
    p = [Fraction(c) for c in _ptrim(p)]
    q = _ptrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(q[-1])
    quot = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    while len(p) >= len(q):
        c = p[-1] / lead
        shift = len(p) - len(q)
        quot[shift] = c
        for i, b in enumerate(q):
            p[shift + i] -= c * b
        p = _ptrim(p)
    return [_norm(c) for c in _ptrim(quot)], [_norm(c) for c in p]


def _pgcd_monic(p, q):
    p, q = _ptrim(p), _ptrim(q)
    while q:
        _, r = _pdivmod(p, q)
        p, q = q, r
    if not p:
        return []
    lead = Fraction(p[-1])
    return [_norm(Fraction(c) / lead) for c in p]


def _pxgcd(p, q):
    """Return (g, s, t) with s*p + t*q = g, g monic."""
    r0, r1 = _ptrim(p), _ptrim(q)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        quo, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _padd(s0, _pneg(_pmul(quo, s1)))
        t0, t1 = t1, _padd(t0, _pneg(_pmul(quo, t1)))
    lead = Fraction(r0[-1])
    scale = [_norm(1 / lead)]
    return _pmul(r0, scale), _pmul(s0, scale), _pmul(t0, scale)


def _padd(p, q):
    n = max(len(p), len(q))
    return _ptrim([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)])


def _pneg(p):
    return [-c for c in p]


# ---------------------------------------------------------------------------
# HalfLaurent
# ---------------------------------------------------------------------------

class HalfLaurent:
    """Laurent polynomial in h with rational coefficients, where h*h = A.

    >>> A = HalfLaurent.A()
    >>> (A**2 + A**-2) + (-(A**2) - A**-2) == 0
    True
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for e, c in dict(terms).items():
                if c != 0:
                    t[int(e)] = _norm(c)
        self._t = t
        self._hash = None

    @classmethod
    def _raw(cls, t):
        obj = cls.__new__(cls)
        obj._t = t
        obj._hash = None
        return obj

    @classmethod
    def h(cls, k: int = 1) -> "HalfLaurent":
        """The monomial h**k."""
        return cls._raw({k: 1})

    @classmethod
    def A(cls, k: int = 1) -> "HalfLaurent":
        """The monomial A**k = h**(2k)."""
        return cls._raw({2 * k: 1})

    @classmethod
    def const(cls, c) -> "HalfLaurent":
        return cls({0: c})

    @classmethod
    def loop_value(cls) -> "HalfLaurent":
        """The contractible loop value -(A^2 + A^-2)."""
        return cls._raw({4: -1, -4: -1})

    @property
    def terms(self) -> dict:
        return dict(self._t)

    def items(self):
        return sorted(self._t.items())

    def is_zero(self) -> bool:
        return not self._t

    def is_monomial(self) -> bool:
        return len(self._t) == 1

    def min_exp(self) -> int:
        return min(self._t)

    def max_exp(self) -> int:
        return max(self._t)

    def conjugate(self) -> "HalfLaurent":
        """Mirror involution h -> 1/h (so A -> 1/A)."""
        return HalfLaurent._raw({-e: c for e, c in self._t.items()})

    @staticmethod
    def _coerce(other):
        if isinstance(other, HalfLaurent):
            return other
        if isinstance(other, (int, Rational)):
            return HalfLaurent.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self._t)
        for e, c in other._t.items():
            v = t.get(e, 0) + c
            if v == 0:
                t.pop(e, None)
            else:
                t[e] = _norm(v)
        return HalfLaurent._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return HalfLaurent._raw({e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                return HalfLaurent._raw({})
            return HalfLaurent._raw({e: _norm(c * other) for e, c in self._t.items()})
        if not isinstance(other, HalfLaurent):
            return NotImplemented
        a, b = self._t, other._t
        if len(a) == 1:
            (ea, ca), = a.items()
            return HalfLaurent._raw({ea + e: _norm(ca * c) for e, c in b.items()})
        if len(b) == 1:
            (eb, cb), = b.items()
            return HalfLaurent._raw({e + eb: _norm(c * cb) for e, c in a.items()})
        t = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                t[e] = t.get(e, 0) + c1 * c2
        return HalfLaurent._raw({e: _norm(c) for e, c in t.items() if c != 0})

    __rmul__ = __mul__

    def inverse(self) -> "HalfLaurent":
        if not self._t:
            raise ZeroDivisionError("inverse of zero HalfLaurent")
        if len(self._t) != 1:
            raise NotAUnitError(f"{self!r} is not a monomial unit")
        (e, c), = self._t.items()
        return HalfLaurent._raw({-e: _norm(Fraction(1) / c)})

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if len(self._t) == 1:
            (e, c), = self._t.items()
            return HalfLaurent._raw({e * k: _norm(Fraction(c) ** k)})
        out = HalfLaurent.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return HalfLaurent._raw({e: _norm(Fraction(c) / other) for e, c in self._t.items()})
        if isinstance(other, HalfLaurent):
            return self * other.inverse()
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._t == other._t

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    def __bool__(self):
        return bool(self._t)

    def __repr__(self):
        if not self._t:
            return "0"
        parts = []
        for e, c in sorted(self._t.items(), reverse=True):
            if e == 0:
                parts.append(f"{c}")
            else:
                parts.append(f"{c}*h^{e}")
        return " + ".join(parts)

    def to_poly(self):
        """Return (shift, dense coeffs) with self = h**shift * sum c_i h**i."""
        if not self._t:
            return 0, []
        lo, hi = self.min_exp(), self.max_exp()
        coeffs = [0] * (hi - lo + 1)
        for e, c in self._t.items():
            coeffs[e - lo] = c
        return lo, coeffs

    @classmethod
    def from_poly(cls, shift: int, coeffs) -> "HalfLaurent":
        return cls({shift + i: c for i, c in enumerate(coeffs) if c != 0})


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

class RatFunc:
    """Element of Q(h) kept as a reduced fraction of HalfLaurents.

    Normal form: the denominator, once a monomial factor is moved into the
    numerator, is a polynomial with constant term 1. Two RatFuncs are equal
    exactly when their stored numerators and denominators are.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = HalfLaurent._coerce(num) if not isinstance(num, HalfLaurent) else num
        if den is None:
            self.num, self.den = num, HalfLaurent.const(1)
            return
        den = HalfLaurent._coerce(den) if not isinstance(den, HalfLaurent) else den
        if den.is_zero():
            raise ZeroDivisionError("RatFunc with zero denominator")
        self.num, self.den = self._reduce(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @staticmethod
    def _reduce(num, den):
        if num.is_zero():
            return num, HalfLaurent.const(1)
        if den.is_monomial():
            inv = den.inverse()
            return num * inv, HalfLaurent.const(1)
        ns, nc = num.to_poly()
        ds, dc = den.to_poly()
        g = _pgcd_monic(nc, dc)
        if len(g) > 1:
            nc, _ = _pdivmod(nc, g)
            dc, _ = _pdivmod(dc, g)
        c0 = Fraction(dc[0])
        nc = [_norm(Fraction(c) / c0) for c in nc]
        dc = [_norm(Fraction(c) / c0) for c in dc]
        return HalfLaurent.from_poly(ns - ds, nc), HalfLaurent.from_poly(0, dc)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, Rational, HalfLaurent)):
            return RatFunc(other)
        return NotImplemented

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            if self.den == 1:
                return RatFunc._raw(self.num + other.num, self.den)
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == 1 and other.den == 1:
            return RatFunc._raw(self.num * other.num, self.den)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero RatFunc")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.num.is_zero()

    def __repr__(self):
        if self.den == 1:
            return f"RatFunc({self.num!r})"
        return f"RatFunc(({self.num!r}) / ({self.den!r}))"


# ---------------------------------------------------------------------------
# cyclotomic fields
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def cyclotomic_poly(L: int) -> tuple:
    """Integer coefficients of the L-th cyclotomic polynomial, low degree first."""
    if L < 1:
        raise ValueError("cyclotomic order must be positive")
    num = [-1] + [0] * (L - 1) + [1]
    for d in range(1, L):
        if L % d == 0:
            num, rem = _pdivmod(num, list(cyclotomic_poly(d)))
            assert not rem
    return tuple(int(c) for c in num)


def euler_phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


@lru_cache(maxsize=None)
def _power_table(L: int) -> tuple:
    """Coordinates of x**k mod Phi_L for 0 <= k < L."""
    phi = cyclotomic_poly(L)
    d = len(phi) - 1
    rows = []
    cur = [1] + [0] * (d - 1)
    for _ in range(L):
        rows.append(tuple(cur))
        # multiply by x, then reduce with the monic relation
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            cur = [c - top * phi[i] for i, c in enumerate(cur)]
    return tuple(rows)


class Cyclo:
    """Element of Q(zeta_L) = Q[x]/Phi_L(x), x a fixed primitive L-th root.

    >>> x = Cyclo.root(3)
    >>> x * x == -x - 1
    True
    """

    __slots__ = ("order", "coords", "_hash")

    def __init__(self, order: int, coords):
        coords = tuple(_norm(c) for c in coords)
        d = len(cyclotomic_poly(order)) - 1
        if len(coords) != d:
            raise ValueError(f"Cyclo({order}) needs {d} coordinates, got {len(coords)}")
        self.order = order
        self.coords = coords
        self._hash = None

    @classmethod
    def _raw(cls, order, coords):
        obj = cls.__new__(cls)
        obj.order = order
        obj.coords = coords
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, L: int) -> "Cyclo":
        return cls._raw(L, (0,) * (len(cyclotomic_poly(L)) - 1))

    @classmethod
    def const(cls, L: int, c) -> "Cyclo":
        d = len(cyclotomic_poly(L)) - 1
        return cls._raw(L, (_norm(c),) + (0,) * (d - 1))

    @classmethod
    def root(cls, L: int, k: int = 1) -> "Cyclo":
        """The power x**k of the generator."""
        return cls._raw(L, _power_table(L)[k % L])

    @classmethod
    def two_cos(cls, L: int, k: int) -> "Cyclo":
        """2 cos(2 pi k / L) = x**k + x**-k."""
        return cls.root(L, k) + cls.root(L, -k)

    def _coerce(self, other):
        if isinstance(other, Cyclo):
            if other.order != self.order:
                raise ValueError(f"mixing Cyclo({self.order}) and Cyclo({other.order})")
            return other
        if isinstance(other, (int, Rational)):
            return Cyclo.const(self.order, other)
        return NotImplemented

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo._raw(self.order, tuple(_norm(a + b) for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclo._raw(self.order, tuple(-a for a in self.coords))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Cyclo._raw(self.order, tuple(_norm(a - b) for a, b in zip(self.coords, other.coords)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Cyclo._raw(self.order, tuple(_norm(a * other) for a in self.coords))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = _power_table(self.order)
        d = len(self.coords)
        conv = [0] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a == 0:
                continue
            for j, b in enumerate(other.coords):
                if b:
                    conv[i + j] += a * b
        out = list(conv[:d])
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = table[k % self.order]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyclo._raw(self.order, tuple(_norm(c) for c in out))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclo":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        g, s, _ = _pxgcd(list(self.coords), list(cyclotomic_poly(self.order)))
        assert g == [1]
        d = len(self.coords)
        s = list(s) + [0] * (d - len(s))
        return Cyclo(self.order, s[:d])

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self * (Fraction(1) / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclo.const(self.order, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Cyclo):
            return self.order == other.order and self.coords == other.coords
        if isinstance(other, (int, Rational)):
            return self.coords == Cyclo.const(self.order, other).coords
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.order, self.coords))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"Cyclo({self.order}, {list(self.coords)})"

    def embed(self, L: int) -> "Cyclo":
        """Image in Q(zeta_L) under x_self -> x_L**(L/order)."""
        if L % self.order:
            raise ValueError(f"Q(zeta_{self.order}) does not embed in Q(zeta_{L})")
        step = L // self.order
        out = Cyclo.zero(L)
        for i, c in enumerate(self.coords):
            if c:
                out = out + Cyclo.root(L, i * step) * c
        return out

    def to_complex(self, k: int = 1) -> complex:
        """Numerical value with x = exp(2 pi i k / L); for cross-checks only."""
        import cmath
        z = cmath.exp(2j * cmath.pi * k / self.order)
        return sum(complex(float(c)) * z ** i for i, c in enumerate(self.coords))


# ---------------------------------------------------------------------------
# evaluation targets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EvalTarget:
    """Where h = A^(1/2) is sent: Generic (h stays a variable), ClassicalOne
    (h = 1) or Root (h = zeta_N**k realised inside Q(zeta_L))."""

    kind: str
    N: int = 0
    k: int = 1
    L: int = 0

    def __post_init__(self):
        if self.kind not in ("generic", "classical", "root"):
            raise ValueError(f"unknown evaluation target {self.kind!r}")
        if self.kind == "root":
            if self.N < 3 or self.N % 2 == 0:
                raise ValueError(f"root order N must be odd and >= 3, got {self.N}")
            if gcd(self.k, self.N) != 1:
                raise ValueError(f"k={self.k} is not coprime to N={self.N}")
            if self.L <= 0 or self.L % self.N:
                raise ValueError(f"ambient order L={self.L} must be a multiple of N={self.N}")

    @classmethod
    def generic(cls) -> "EvalTarget":
        return cls("generic")

    @classmethod
    def classical(cls) -> "EvalTarget":
        return cls("classical")

    @classmethod
    def root(cls, N: int, k: int = 1, L: int | None = None) -> "EvalTarget":
        return cls("root", N, k, N if L is None else L)

    def __str__(self):
        if self.kind == "root":
            return f"Root(N={self.N},k={self.k},L={self.L})"
        return {"generic": "Generic", "classical": "ClassicalOne"}[self.kind]

    def one(self):
        if self.kind == "generic":
            return RatFunc(1)
        if self.kind == "classical":
            return Fraction(1)
        return Cyclo.const(self.L, 1)

    def zero(self):
        if self.kind == "generic":
            return RatFunc(0)
        if self.kind == "classical":
            return Fraction(0)
        return Cyclo.zero(self.L)

    def embed_rational(self, c):
        return self.one() * c

    def h_value(self):
        if self.kind == "classical":
            return 1
        if self.kind == "root":
            return Cyclo.root(self.L, (self.L // self.N) * self.k)
        return RatFunc(HalfLaurent.h())

    def evaluate(self, p: HalfLaurent):
        """Ring homomorphism Q[h, 1/h] -> target scalars."""
        if isinstance(p, (int, Rational)):
            return self.embed_rational(p)
        if self.kind == "generic":
            return RatFunc(p)
        if self.kind == "classical":
            return _norm(sum((c for c in p._t.values()), Fraction(0)))
        L = self.L
        step = (L // self.N) * self.k
        d = len(cyclotomic_poly(L)) - 1
        out = [0] * d
        table = _power_table(L)
        for e, c in p._t.items():
            row = table[(e * step) % L]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
        return Cyclo._raw(L, tuple(_norm(c) for c in out))

    def is_zero(self, x) -> bool:
        return x == 0


# ---------------------------------------------------------------------------
# Chebyshev families and polynomial helpers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def chebyshev_first(n: int) -> tuple:
    """Trace-normalised Chebyshev polynomial t_n: t_0 = 2, t_1 = X,
    t_{n+1} = X t_n - t_{n-1}, so that t_n(l + 1/l) = l**n + l**-n."""
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    if n == 0:
        return (2,)
    if n == 1:
        return (0, 1)
    return tuple(_padd([0] + list(chebyshev_first(n - 1)), _pneg(list(chebyshev_first(n - 2)))))


@lru_cache(maxsize=None)
def chebyshev_unit_start(n: int) -> tuple:
    """Same recursion as :func:`chebyshev_first` but started from T_0 = 1."""
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 1)
    return tuple(_padd([0] + list(chebyshev_unit_start(n - 1)), _pneg(list(chebyshev_unit_start(n - 2)))))


@lru_cache(maxsize=None)
def chebyshev_second(n: int) -> tuple:
    """s_n with s_{-1} = 0, s_0 = 1, s_{n+1} = X s_n - s_{n-1}.

    For a 2x2 matrix M with det 1 and trace t: M**k = s_{k-1}(t) M - s_{k-2}(t) I.
    """
    if n < -1:
        raise ValueError("index must be >= -1")
    if n == -1:
        return ()
    if n == 0:
        return (1,)
    return tuple(_padd([0] + list(chebyshev_second(n - 1)), _pneg(list(chebyshev_second(n - 2)))))


CHEBYSHEV_FAMILIES = {"trace": chebyshev_first, "unit": chebyshev_unit_start}


def poly_eval(coeffs, x, one=1):
    """Horner evaluation of sum coeffs[i] x**i in whatever ring x lives in."""
    acc = None
    for c in reversed(coeffs):
        acc = c * one if acc is None else acc * x + c
    if acc is None:
        return 0 * one
    return acc
