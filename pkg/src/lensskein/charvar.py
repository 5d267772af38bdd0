"""SL2 representation and character schemes of cyclic groups.

The generator of Z/p goes to M = [[a, b], [c, d]]. Powers of M are written
with Cayley-Hamilton, M^k = s_(k-1)(t) M - s_(k-2)(t) I, which keeps the
generators of the representation ideal at degree p - 1 in t. For a single
matrix the conjugation invariants are generated by the trace, so the
character ring is Q[t] modulo the elimination ideal of
I_rep + (t - a - d).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .coeffs import Cyclo, _pgcd_monic, _norm, chebyshev_second, poly_eval

REP_VARS = ("a", "b", "c", "d")
CHAR_VARS = ("a", "b", "c", "d", "t")


def _inv(c):
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

def _lex(e):
    return e


def _grevlex(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def order_key(order):
    """Sort key for exponent tuples; larger key means larger monomial.

    ``order`` is "lex", "grevlex" or ("block", k): grevlex on the first k
    variables, ties broken by grevlex on the rest (an elimination order).
    """
    if order == "lex":
        return _lex
    if order == "grevlex":
        return _grevlex
    if isinstance(order, tuple) and order[0] == "block":
        k = order[1]
        return lambda e: (_grevlex(e[:k]), _grevlex(e[k:]))
    raise ValueError(f"unknown monomial order {order!r}")


# ---------------------------------------------------------------------------
# polynomials
# ---------------------------------------------------------------------------

class MPoly:
    """Sparse polynomial over Q or a cyclotomic field in named variables."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables, terms=None):
        self.vars = tuple(variables)
        t = {}
        for e, c in (terms or {}).items():
            if c != 0:
                t[tuple(e)] = _norm(c) if isinstance(c, Fraction) else c
        self.terms = t

    @classmethod
    def var(cls, variables, name: str) -> "MPoly":
        variables = tuple(variables)
        e = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {e: 1})

    @classmethod
    def const(cls, variables, c) -> "MPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return MPoly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        t = dict(self.terms)
        for e, c in other.terms.items():
            v = t[e] + c if e in t else c
            if v == 0:
                t.pop(e, None)
            else:
                t[e] = v
        return MPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if other == 0:
                return MPoly(self.vars)
            return MPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        t: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                t[e] = t[e] + c1 * c2 if e in t else c1 * c2
        return MPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = MPoly.const(self.vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.vars == other.vars and self.terms == other.terms
        return self == MPoly.const(self.vars, other)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def map_coeffs(self, f) -> "MPoly":
        return MPoly(self.vars, {e: f(c) for e, c in self.terms.items()})

    def lead(self, order):
        key = order_key(order)
        e = max(self.terms, key=key)
        return e, self.terms[e]

    def monic(self, order) -> "MPoly":
        _, c = self.lead(order)
        return self * _inv(c)

    def subs(self, values: dict):
        """Evaluate at {name: value}; unnamed variables must not occur."""
        out = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(self.vars, e):
                if k:
                    term = term * values[v] ** k
            out = out + term
        return out

    def extend(self, variables) -> "MPoly":
        """Same polynomial in a larger variable list."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.vars]
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for i, k in zip(pos, e):
                ne[i] = k
            t[tuple(ne)] = c
        return MPoly(variables, t)

    def univariate(self, name: str) -> list:
        """Dense coefficients when only ``name`` occurs."""
        i = self.vars.index(name)
        out = [0] * (self.degree() + 1 if self.terms else 1)
        for e, c in self.terms.items():
            if any(k for j, k in enumerate(e) if j != i):
                raise ValueError(f"polynomial is not univariate in {name}")
            out[e[i]] = c
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{v}^{k}" if k > 1 else v for v, k in zip(self.vars, e) if k)
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


# ---------------------------------------------------------------------------
# Groebner bases
# ---------------------------------------------------------------------------

def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm_exp(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _sub_exp(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _mul_mono(f: MPoly, e, c) -> dict:
    return {tuple(x + y for x, y in zip(k, e)): v * c for k, v in f.terms.items()}


def reduce(f: MPoly, G: list, order) -> MPoly:
    """Full normal form of f modulo the list G."""
    key = order_key(order)
    leads = [(g.lead(order), g) for g in G if not g.is_zero()]
    p = dict(f.terms)
    rem: dict = {}
    while p:
        e = max(p, key=key)
        c = p[e]
        for (ge, gc), g in leads:
            if _divides(ge, e):
                factor = c * _inv(gc)
                shift = _sub_exp(e, ge)
                for k, v in g.terms.items():
                    kk = tuple(x + y for x, y in zip(k, shift))
                    nv = p[kk] - factor * v if kk in p else -factor * v
                    if nv == 0:
                        p.pop(kk, None)
                    else:
                        p[kk] = nv
                break
        else:
            rem[e] = c
            del p[e]
    return MPoly(f.vars, rem)


def _spoly(f: MPoly, g: MPoly, order) -> MPoly:
    (fe, fc), (ge, gc) = f.lead(order), g.lead(order)
    l = _lcm_exp(fe, ge)
    a = MPoly(f.vars, _mul_mono(f, _sub_exp(l, fe), _inv(fc)))
    b = MPoly(f.vars, _mul_mono(g, _sub_exp(l, ge), _inv(gc)))
    return a - b


@dataclass
class Ideal:
    generators: list
    basis: list | None = None
    order: object = None

    @property
    def vars(self):
        return self.generators[0].vars if self.generators else ()

    def contains(self, f: MPoly) -> bool:
        if self.basis is None:
            raise ValueError("compute a Groebner basis first")
        return reduce(f, self.basis, self.order).is_zero()


def groebner(I: Ideal | list, order="grevlex") -> Ideal:
    """Reduced Groebner basis by Buchberger's algorithm with the product and
    chain criteria; pairs are taken smallest lcm first."""
    gens = I.generators if isinstance(I, Ideal) else list(I)
    key = order_key(order)
    G = []
    for f in gens:
        if not f.is_zero():
            G.append(f.monic(order))
    if not G:
        return Ideal(list(gens), [], order)
    pairs = set(combinations(range(len(G)), 2))
    while pairs:
        i, j = min(pairs, key=lambda ij: (key(_lcm_exp(G[ij[0]].lead(order)[0], G[ij[1]].lead(order)[0])), ij))
        pairs.discard((i, j))
        ei, ej = G[i].lead(order)[0], G[j].lead(order)[0]
        l = _lcm_exp(ei, ej)
        if all(x + y == z for x, y, z in zip(ei, ej, l)):
            continue
        if any(k not in (i, j) and _divides(G[k].lead(order)[0], l)
               and (min(i, k), max(i, k)) not in pairs and (min(j, k), max(j, k)) not in pairs
               for k in range(len(G))):
            continue
        h = reduce(_spoly(G[i], G[j], order), G, order)
        if not h.is_zero():
            G.append(h.monic(order))
            n = len(G) - 1
            pairs.update((k, n) for k in range(n))
    return Ideal(list(gens), _interreduce(G, order), order)


def _interreduce(G: list, order) -> list:
    key = order_key(order)
    G = sorted(G, key=lambda g: key(g.lead(order)[0]))
    minimal = []
    for g in G:
        e = g.lead(order)[0]
        if not any(_divides(h.lead(order)[0], e) for h in minimal):
            minimal = [h for h in minimal if not _divides(e, h.lead(order)[0])]
            minimal.append(g)
    out = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = reduce(g, others, order)
        out.append(r.monic(order))
    return sorted(out, key=lambda g: key(g.lead(order)[0]))


def eliminate(I: Ideal | list, keep: str, order=None) -> list:
    """Generators of I intersected with Q[keep] (keep is the last variable)."""
    gens = I.generators if isinstance(I, Ideal) else list(I)
    variables = gens[0].vars
    if variables[-1] != keep:
        raise ValueError("the kept variable must be last")
    order = order or ("block", len(variables) - 1)
    GB = groebner(gens, order).basis
    k = len(variables) - 1
    return [g for g in GB if all(all(x == 0 for x in e[:k]) for e in g.terms)]


# ---------------------------------------------------------------------------
# representation and character schemes
# ---------------------------------------------------------------------------

def _matrix_power_ch(p: int, variables):
    """M^p via Cayley-Hamilton with the trace written as the variable t."""
    a, b, c, d = (MPoly.var(variables, v) for v in REP_VARS)
    t = MPoly.var(variables, "t")
    s1 = poly_eval(chebyshev_second(p - 1), t, MPoly.const(variables, 1))
    s2 = poly_eval(chebyshev_second(p - 2), t, MPoly.const(variables, 1)) if p >= 2 else MPoly(variables)
    return [[s1 * a - s2, s1 * b], [s1 * c, s1 * d - s2]]


def _matrix_power_direct(p: int, variables):
    a, b, c, d = (MPoly.var(variables, v) for v in REP_VARS)
    one = MPoly.const(variables, 1)
    zero = MPoly(variables)
    M = [[a, b], [c, d]]
    P = [[one, zero], [zero, one]]
    for _ in range(p):
        P = [[P[i][0] * M[0][j] + P[i][1] * M[1][j] for j in range(2)] for i in range(2)]
    return P


def rep_scheme(p: int, with_trace: bool = False) -> Ideal:
    """Ideal of Hom(Z/p, SL2) in Q[a,b,c,d] (p = 0 stands for Z).

    With ``with_trace`` the ideal lives in Q[a,b,c,d,t], contains t - a - d,
    and M^p is expanded with Cayley-Hamilton in t.
    """
    if p < 0:
        raise ValueError("p must be nonnegative")
    variables = CHAR_VARS if with_trace else REP_VARS
    a, b, c, d = (MPoly.var(variables, v) for v in REP_VARS)
    gens = [a * d - b * c - 1]
    if p >= 1:
        if with_trace:
            P = _matrix_power_ch(p, variables)
        else:
            P = _matrix_power_direct(p, variables)
        gens = [P[0][0] - 1, P[0][1], P[1][0], P[1][1] - 1] + gens
    if with_trace:
        gens.append(MPoly.var(variables, "t") - a - d)
    return Ideal([g for g in gens if not g.is_zero()])


def trace_points(p: int) -> list:
    """2 cos(2 pi k / p) for k = 0..floor(p/2) as elements of Q(zeta_p)."""
    if p < 1:
        return []
    return [Cyclo.two_cos(p, k) for k in range(p // 2 + 1)]


@dataclass
class CharScheme:
    p: int
    f: list  # coefficients of f_p, low degree first; [0] marks the whole line
    reduced: bool
    points: list = field(default_factory=list)

    def coefficients(self) -> list:
        return list(self.f)

    @property
    def degree(self) -> int:
        return len(self.f) - 1 if any(self.f) else -1

    def evaluate(self, x):
        return poly_eval(self.f, x)

    def contains(self, t0) -> bool:
        if not any(self.f):
            return True
        return self.evaluate(t0) == 0

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "f_p": [str(c) for c in self.f],
            "reduced": self.reduced,
            "points": [{"order": x.order, "coords": [str(c) for c in x.coords]} for x in self.points],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CharScheme":
        pts = [Cyclo(d["order"], [Fraction(c) for c in d["coords"]]) for d in data["points"]]
        return cls(data["p"], [_norm(Fraction(c)) for c in data["f_p"]], data["reduced"], pts)

    def __str__(self):
        if not any(self.f):
            return "0"
        terms = []
        for k in range(len(self.f) - 1, -1, -1):
            c = self.f[k]
            if c:
                terms.append(f"{c}*t^{k}" if k else f"{c}")
        return " + ".join(terms)


@lru_cache(maxsize=None)
def char_scheme(p: int) -> CharScheme:
    """Character scheme of Z/p: f_p from elimination, reducedness, points."""
    if p == 0:
        return CharScheme(0, [0], True, [])
    gens = eliminate(rep_scheme(p, with_trace=True), "t")
    polys = [g.univariate("t") for g in gens]
    f = polys[0]
    for other in polys[1:]:
        f = _pgcd_monic(f, other)
    lead = Fraction(f[-1])
    f = [_norm(Fraction(c) / lead) for c in f]
    deriv = [k * c for k, c in enumerate(f)][1:]
    reduced = len(_pgcd_monic(f, deriv)) == 1
    pts = trace_points(p)
    for x in pts:
        if poly_eval(f, x) != 0:
            raise ArithmeticError(f"2cos point {x!r} is not a root of f_{p}")
    return CharScheme(p, f, reduced, pts)


# ---------------------------------------------------------------------------
# coaction and Reynolds operator
# ---------------------------------------------------------------------------

SL2_VARS = ("x11", "x12", "x21", "x22")
TENSOR_VARS = REP_VARS + SL2_VARS


def _sl2_relation():
    x11, x12, x21, x22 = (MPoly.var(TENSOR_VARS, v) for v in SL2_VARS)
    return x11 * x22 - x12 * x21 - 1


_TENSOR_ORDER = "grevlex"


def coaction(f: MPoly) -> MPoly:
    """Delta(X_ij) = sum_(a,b) X_ab (x) x_ia S(x_bj), extended multiplicatively.

    The result is a polynomial in a,b,c,d (left factor) and x11..x22 (right
    factor), reduced modulo det(x) - 1.
    """
    if f.vars != REP_VARS:
        f = f.extend(REP_VARS) if set(f.vars) <= set(REP_VARS) else f
    X = [[MPoly.var(TENSOR_VARS, "a"), MPoly.var(TENSOR_VARS, "b")],
         [MPoly.var(TENSOR_VARS, "c"), MPoly.var(TENSOR_VARS, "d")]]
    x = [[MPoly.var(TENSOR_VARS, "x11"), MPoly.var(TENSOR_VARS, "x12")],
         [MPoly.var(TENSOR_VARS, "x21"), MPoly.var(TENSOR_VARS, "x22")]]
    S = [[x[1][1], -x[0][1]], [-x[1][0], x[0][0]]]
    images = {}
    for (i, j), name in zip(((0, 0), (0, 1), (1, 0), (1, 1)), REP_VARS):
        acc = MPoly(TENSOR_VARS)
        for a in range(2):
            for b in range(2):
                acc = acc + X[a][b] * x[i][a] * S[b][j]
        images[name] = acc
    out = MPoly(TENSOR_VARS)
    for e, c in f.terms.items():
        term = MPoly.const(TENSOR_VARS, c)
        for name, k in zip(REP_VARS, e):
            if k:
                term = term * _power(images[name], k)
        out = out + term
    return reduce(out, [_sl2_relation()], _TENSOR_ORDER)


_POW_CACHE: dict = {}


def _power(f: MPoly, k: int) -> MPoly:
    key = (f, k)
    if key not in _POW_CACHE:
        _POW_CACHE[key] = f ** k
    return _POW_CACHE[key]


def counit(F: MPoly) -> MPoly:
    """Apply x_ij -> delta_ij on the right factor."""
    vals = {"x11": 1, "x12": 0, "x21": 0, "x22": 1}
    out: dict = {}
    for e, c in F.terms.items():
        v = c
        for name, k in zip(SL2_VARS, e[4:]):
            if k:
                v = v * vals[name] ** k
        if v:
            key = e[:4]
            out[key] = out[key] + v if key in out else v
    return MPoly(REP_VARS, out)


def tensor_split(F: MPoly) -> dict:
    """{right monomial: left polynomial} for F in O[R] (x) O[SL2]."""
    out: dict = {}
    for e, c in F.terms.items():
        left, right = e[:4], e[4:]
        out.setdefault(right, {})[left] = c
    return {r: MPoly(REP_VARS, t) for r, t in out.items()}


def _monomials(deg: int, nvars: int = 4):
    if nvars == 1:
        yield (deg,)
        return
    for k in range(deg, -1, -1):
        for rest in _monomials(deg - k, nvars - 1):
            yield (k,) + rest


class DegreeBoundError(ValueError):
    """Input degree exceeds the Reynolds slice bound."""


@lru_cache(maxsize=None)
def _reynolds_data(deg: int):
    """Projection onto invariants for homogeneous polynomials of one degree.

    Invariants are the kernel of f -> Delta(f) - f (x) 1. The complement is
    spanned by the left coefficients of Delta(m) - m (x) 1 over monomials m.
    Returns (monomials, matrix R) with R[i][j] the coefficient of monomial i
    in the projection of monomial j.
    """
    monos = list(_monomials(deg))
    index = {m: k for k, m in enumerate(monos)}
    n = len(monos)
    # linear map f -> Delta f - f(x)1 as rows (keyed by (right, left)) x columns
    columns = []
    complement = []
    for m in monos:
        f = MPoly(REP_VARS, {m: 1})
        F = coaction(f) - f.extend(TENSOR_VARS)
        col = {}
        for right, left in tensor_split(F).items():
            for lm, c in left.terms.items():
                col[(right, lm)] = c
            vec = [0] * n
            for lm, c in left.terms.items():
                vec[index[lm]] = c
            complement.append(vec)
        columns.append(col)
    kernel = _nullspace(columns, n)
    comp_basis = _row_basis(complement)
    if len(kernel) + len(comp_basis) != n:
        raise ArithmeticError("invariants and complement do not span the slice")
    # change of basis: columns = kernel vectors then complement vectors
    B = [list(col) for col in zip(*(kernel + comp_basis))]
    Binv = _invert(B)
    k = len(kernel)
    # R = B * diag(1..1, 0..0) * B^-1
    R = [[sum(B[i][l] * Binv[l][j] for l in range(k)) for j in range(n)] for i in range(n)]
    return monos, R


def _nullspace(columns: list, n: int) -> list:
    """Basis of {x : sum_j x_j columns[j] = 0}."""
    keys = sorted({k for col in columns for k in col})
    rows = [[Fraction(col.get(k, 0)) for col in columns] for k in keys]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][fc]
        basis.append(v)
    return basis


def _row_basis(vectors: list) -> list:
    basis, pivots = [], []
    for v in vectors:
        v = [Fraction(x) for x in v]
        for b, pc in zip(basis, pivots):
            if v[pc] != 0:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, b)]
        pc = next((i for i, x in enumerate(v) if x != 0), None)
        if pc is None:
            continue
        inv = 1 / v[pc]
        v = [x * inv for x in v]
        new_basis = []
        for b in basis:
            if b[pc] != 0:
                f = b[pc]
                b = [x - f * y for x, y in zip(b, v)]
            new_basis.append(b)
        basis = new_basis + [v]
        pivots.append(pc)
    return basis


def _invert(M: list) -> list:
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next(i for i in range(c, n) if A[i][c] != 0)
        A[c], A[piv] = A[piv], A[c]
        inv = 1 / A[c][c]
        A[c] = [x * inv for x in A[c]]
        for i in range(n):
            if i != c and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return [row[n:] for row in A]


def reynolds(f: MPoly, d: int = 4) -> MPoly:
    """Invariant component of f in Q[a,b,c,d] under simultaneous conjugation."""
    if f.vars != REP_VARS:
        f = f.extend(REP_VARS)
    if f.degree() > d:
        raise DegreeBoundError(f"degree {f.degree()} exceeds bound {d}")
    out: dict = {}
    by_deg: dict = {}
    for e, c in f.terms.items():
        by_deg.setdefault(sum(e), {})[e] = c
    for deg, part in by_deg.items():
        monos, R = _reynolds_data(deg)
        idx = {m: k for k, m in enumerate(monos)}
        for e, c in part.items():
            j = idx[e]
            for i, m in enumerate(monos):
                if R[i][j]:
                    v = R[i][j] * c
                    out[m] = out[m] + v if m in out else v
    return MPoly(REP_VARS, out)


def is_invariant(f: MPoly) -> bool:
    if f.vars != REP_VARS:
        f = f.extend(REP_VARS)
    return (coaction(f) - f.extend(TENSOR_VARS)).is_zero()


def trace_poly() -> MPoly:
    return MPoly.var(REP_VARS, "a") + MPoly.var(REP_VARS, "d")


def check_reynolds_lemma(I: list, d: int, p: int) -> bool:
    """(I O[R]) n O[X] == I for an ideal I of Q[t] (given by univariate
    coefficient lists, possibly with Cyclo entries), within Q[t].

    The left side is the elimination ideal of I_rep + (t - a - d) + I; the
    right side is I + (f_p). Both are principal, so they are compared by
    their monic generators. ``d`` bounds the degree of the generators of I.
    """
    gens_t = [list(g) for g in I if any(c != 0 for c in g)]
    if any(len(g) - 1 > d for g in gens_t):
        raise DegreeBoundError("generator degree exceeds bound")
    field_one = next((c for g in gens_t for c in g if isinstance(c, Cyclo)), None)
    lift = (lambda c: c * Cyclo.const(field_one.order, 1)) if field_one is not None else (lambda c: c)
    rep = rep_scheme(p, with_trace=True)
    gens = [g.map_coeffs(lift) for g in rep.generators]
    for g in gens_t:
        gens.append(MPoly(CHAR_VARS, {(0, 0, 0, 0, k): lift(c) for k, c in enumerate(g) if c != 0}))
    elim = eliminate(gens, "t")
    lhs = _principal([g.univariate("t") for g in elim])
    fp = [lift(c) for c in char_scheme(p).coefficients()]
    rhs = _principal(gens_t + [fp])
    return lhs == rhs


def _principal(polys: list) -> list:
    """Monic gcd of univariate polynomials over a field (Fraction or Cyclo)."""
    g: list = []
    for f in polys:
        g = _gcd_field(g, _trim(f))
    return g


def _trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def _gcd_field(f, g):
    f, g = _trim(f), _trim(g)
    while g:
        f, g = g, _rem_field(f, g)
    if not f:
        return []
    inv = _inv(f[-1])
    return [c * inv for c in f]


def _rem_field(f, g):
    f = list(f)
    inv = _inv(g[-1])
    while len(f) >= len(g):
        c = f[-1] * inv
        shift = len(f) - len(g)
        for i, x in enumerate(g):
            f[shift + i] = f[shift + i] - c * x
        f = _trim(f)
    return f


def dumps(cs: CharScheme) -> str:
    return json.dumps(cs.to_json(), sort_keys=True)
