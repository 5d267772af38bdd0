"""Skein modules of lens spaces from the genus-one Heegaard splitting.

L(p,q) = V1 u V2, where the meridian (0,1) of V2 is glued to the curve
(p,q) on the boundary of V1 and the longitude (1,0) of V2 to (r,s). Both
handlebodies carry k[z], and S(L(p,q)) is k[z] (x) k[z] modulo

    (e_(Gu) |> z^i) (x) z^j  -  z^i (x) (e_u |> z^j)

for u in {(1,0), (0,1), (1,1)}, G = [[r, p], [s, q]]. The index map of G
reverses the sign of the determinant pairing, so it is an anti-automorphism
of the torus algebra. That is exactly what lets the relations for a product
follow from those for its factors: a (x) (xy |> b) ~ (G(y)G(x) |> a) (x) b.
Hence three generators, imposed at every bidegree, span all relations.

Relations are only written down when every monomial has both degrees <= D.
The quotient is read off from an exact echelon form with a graded order, and
a dimension is accepted only once three truncations D, D+2, D+4 agree.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .annulus import SkeinVector
from .coeffs import Cyclo, EvalTarget, chebyshev_first, chebyshev_unit_start
from .solidtorus import act_basis

GENERATORS = ((1, 0), (0, 1), (1, 1))


class InconclusiveTruncation(RuntimeError):
    """The quotient dimension did not stabilize below the truncation cap."""


class ProjectionOverflow(RuntimeError):
    """A normal form left the certified part of the truncated span."""


class CharacterDomainError(ValueError):
    """The requested trace value is not a point of the character scheme."""


# ---------------------------------------------------------------------------
# gluing data
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GluingData:
    p: int
    q: int
    r: int
    s: int
    mirror: bool = False

    def __post_init__(self):
        if self.p < 0:
            raise ValueError(f"p must be nonnegative, got {self.p}")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"gcd({self.p},{self.q}) != 1")
        if self.p * self.s - self.q * self.r != 1:
            raise ValueError(f"completion ({self.r},{self.s}) fails p*s - q*r = 1")

    @property
    def matrix(self) -> tuple:
        return ((self.r, self.p), (self.s, self.q))

    def image(self, u) -> tuple[int, int]:
        (a, b), (c, d) = self.matrix
        return a * u[0] + b * u[1], c * u[0] + d * u[1]

    @classmethod
    def lens(cls, p: int, q: int, which: int = 0, mirror: bool = False) -> "GluingData":
        """L(p,q) with a small completion; ``which`` = 1 shifts it by (p,q)."""
        r, s = default_completion(p, q)
        return cls(p, q, r + which * p, s + which * q, mirror)

    def alternative(self) -> "GluingData":
        """A second completion, (r +- p, s +- q) with the smaller |r|."""
        if self.p == 0:
            return GluingData(self.p, self.q, self.r, self.s + 1, self.mirror)
        up = (self.r + self.p, self.s + self.q)
        down = (self.r - self.p, self.s - self.q)
        r, s = min(up, down, key=lambda rs: (abs(rs[0]), abs(rs[1])))
        return GluingData(self.p, self.q, r, s, self.mirror)


def default_completion(p: int, q: int) -> tuple[int, int]:
    """(r, s) with p s - q r = 1 and |r| as small as possible."""
    if gcd(p, q) != 1:
        raise ValueError(f"gcd({p},{q}) != 1")
    if p == 0:
        return -q, 0
    best = None
    for r in range(-p, p + 1):
        if (1 + q * r) % p == 0:
            cand = (abs(r), abs((1 + q * r) // p), r)
            if best is None or cand < best:
                best = cand
    r = best[2]
    return r, (1 + q * r) // p


# ---------------------------------------------------------------------------
# relations and sparse echelon form
# ---------------------------------------------------------------------------

def _order_key(m):
    return (m[0] + m[1], m[0])


def _action(a: int, b: int, n: int, t: EvalTarget, mirror: bool) -> SkeinVector:
    return _cached_action(a, b, n, t, mirror)


_ACTION_CACHE: dict = {}


def _cached_action(a, b, n, t, mirror):
    key = (a, b, n, t, mirror)
    v = _ACTION_CACHE.get(key)
    if v is None:
        raw = act_basis(a, b, n)
        if mirror:
            raw = raw.map_coeffs(lambda c: c.conjugate())
        v = raw.map_coeffs(t.evaluate)
        _ACTION_CACHE[key] = v
    return v


def build_relations(g: GluingData, D: int, t: EvalTarget) -> list[dict]:
    """Relation vectors {(i, j): coefficient} with all degrees <= D."""
    if D < 2:
        raise ValueError("truncation must be at least 2")
    rels = []
    for u in GENERATORS:
        gu = g.image(u)
        left_shift, right_shift = abs(gu[0]), abs(u[0])
        for i in range(D + 1 - left_shift):
            left = _action(gu[0], gu[1], i, t, g.mirror)
            for j in range(D + 1 - right_shift):
                right = _action(u[0], u[1], j, t, g.mirror)
                vec: dict = {}
                for k, c in left.coeffs.items():
                    vec[(k, j)] = c
                for k, c in right.coeffs.items():
                    key = (i, k)
                    vec[key] = vec[key] - c if key in vec else -c
                vec = {m: c for m, c in vec.items() if c != 0}
                if vec:
                    rels.append(vec)
    return rels


def _inverse(c):
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


class Echelon:
    """Rows keyed by their leading monomial (largest in the graded order),
    each scaled to leading coefficient 1."""

    def __init__(self):
        self.pivots: dict = {}

    def reduce(self, vec: dict) -> dict:
        row = dict(vec)
        pending = sorted((m for m in row if m in self.pivots), key=_order_key)
        while pending:
            m = pending.pop()
            c = row.get(m)
            if c is None:
                continue
            for k, v in self.pivots[m].items():
                nv = row[k] - c * v if k in row else -c * v
                if nv == 0:
                    row.pop(k, None)
                else:
                    if k not in row and k in self.pivots:
                        pending.append(k)
                        pending.sort(key=_order_key)
                    row[k] = nv
        return row

    def add(self, vec: dict) -> bool:
        row = self.reduce(vec)
        if not row:
            return False
        lead = max(row, key=_order_key)
        inv = _inverse(row[lead])
        self.pivots[lead] = {k: v * inv for k, v in row.items()}
        return True


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

@dataclass
class LensPresentation:
    gluing: GluingData
    D: int
    target: EvalTarget
    basis: list
    echelon: Echelon = field(repr=False)
    certificates: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def normal_form(self, vec: dict) -> dict:
        for (i, j) in vec:
            if i > self.D or j > self.D:
                raise ProjectionOverflow(f"monomial z^{i}(x)z^{j} exceeds truncation {self.D}")
        return self.echelon.reduce(vec)

    def project(self, vec: dict) -> list:
        """Coordinates of ``vec`` in the quotient basis."""
        nf = self.normal_form(vec)
        index = self._index
        out = [self.target.zero()] * self.dim
        for m, c in nf.items():
            if m not in index:
                raise ProjectionOverflow(f"normal form leaves the basis at z^{m[0]}(x)z^{m[1]}")
            out[index[m]] = out[index[m]] + c
        return out

    @property
    def _index(self) -> dict:
        return {m: k for k, m in enumerate(self.basis)}

    def in_relation_span(self, vec: dict) -> bool:
        return not self.normal_form(vec)

    def enlarged(self, D: int) -> "LensPresentation":
        """Same quotient rebuilt at a larger truncation."""
        ech, basis = _eliminate(self.gluing, D, self.target)
        if basis != self.basis:
            raise InconclusiveTruncation(
                f"basis changed when enlarging truncation {self.D} -> {D}")
        return LensPresentation(self.gluing, D, self.target, basis, ech, self.certificates)

    def to_json(self) -> dict:
        g = self.gluing
        return {
            "p": g.p, "q": g.q, "r": g.r, "s": g.s, "mirror": g.mirror,
            "target": str(self.target),
            "N": self.target.N if self.target.kind == "root" else None,
            "D": self.D,
            "dim": self.dim,
            "basis": [list(m) for m in self.basis],
            "certificates": [{"D": d, "dim": k} for d, k in self.certificates],
        }


def _eliminate(g: GluingData, D: int, t: EvalTarget):
    ech = Echelon()
    for vec in build_relations(g, D, t):
        ech.add(vec)
    basis = sorted(((i, j) for i in range(D + 1) for j in range(D + 1)
                    if (i, j) not in ech.pivots), key=_order_key)
    return ech, basis


def quotient_basis(g: GluingData, t: EvalTarget, D: int | None = None,
                   D_max: int = 40) -> LensPresentation:
    """Certified truncated presentation of S(L(p,q)) at ``t``."""
    if D is None:
        D = max(4, g.p + 4)
    history = []
    while D <= D_max:
        ech, basis = _eliminate(g, D, t)
        history.append((D, basis, ech))
        if len(history) >= 3:
            (d0, b0, _), (d1, b1, _), (d2, b2, e2) = history[-3:]
            if b0 == b1 == b2:
                certs = [(d0, len(b0)), (d1, len(b1)), (d2, len(b2))]
                return LensPresentation(g, d2, t, b2, e2, certs)
        D += 2
    raise InconclusiveTruncation(
        f"L({g.p},{g.q}) at {t}: dimension not stable up to D={D_max}: "
        + ", ".join(f"D={d}:{len(b)}" for d, b, _ in history))


# ---------------------------------------------------------------------------
# Frobenius module structure and fibers
# ---------------------------------------------------------------------------

def threaded_polynomial(a: SkeinVector, N: int, family: str = "trace") -> list:
    """Coefficients (low degree first) of Fr(a) in k[z], for rational a."""
    cheb = {"trace": chebyshev_first, "unit": chebyshev_unit_start}[family](N)
    out = [0]
    power = [1]
    for n in range(a.degree() + 1):
        if n:
            power = _poly_mul(power, list(cheb))
        c = a.coeffs.get(n, 0)
        if c:
            out = _poly_add(out, [c * x for x in power])
    return out


def _poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _poly_add(p, q):
    n = max(len(p), len(q))
    return [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]


def _left_multiply(poly, vec: dict) -> dict:
    out: dict = {}
    for (i, j), c in vec.items():
        for k, f in enumerate(poly):
            if f:
                key = (i + k, j)
                v = c * f
                out[key] = out[key] + v if key in out else v
    return {m: c for m, c in out.items() if c != 0}


def module_act(a: SkeinVector, P: LensPresentation, N: int | None = None,
               family: str = "trace") -> tuple[list, LensPresentation]:
    """Matrix of v -> Fr(a) v on P's basis (columns are images of basis vectors).

    Returns the matrix together with the presentation actually used, which
    is enlarged automatically when the threaded polynomial does not fit.
    """
    if N is None:
        N = P.target.N
    poly = threaded_polynomial(a, N, family)
    while True:
        need = max(i for i, _ in P.basis) + len(poly) - 1 if P.basis else 0
        if need > P.D:
            P = P.enlarged(need + 2)
            continue
        try:
            cols = [P.project(_left_multiply(poly, {m: P.target.one()})) for m in P.basis]
            break
        except ProjectionOverflow:
            P = P.enlarged(P.D + 4)
    matrix = [[cols[c][r] for c in range(P.dim)] for r in range(P.dim)]
    return matrix, P


def rank(matrix) -> int:
    """Rank by exact Gaussian elimination over any field."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        inv = _inverse(rows[rk][col])
        rows[rk] = [x * inv for x in rows[rk]]
        for r in range(len(rows)):
            if r != rk and rows[r][col] != 0:
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rk])]
        rk += 1
    return rk


def core_weight(p: int, q: int, w: int = 0) -> int:
    """Spin weight of the core of V1, framed by the Heegaard torus.

    The quadratic form of a spin structure vanishes on curves bounding discs
    with their surface framing, so it vanishes on both meridians (0,1) and
    (p,q). With q(x + y) = q(x) + q(y) + x.y over Z/2 this pins
    q(1,0) = q mod 2 when p is odd. For even p the value is a free choice w.
    """
    return w % 2 if p % 2 == 0 else q % 2


def psi_sign(p: int, q: int, w: int = 0) -> int:
    """Sign in Psi(tau_gamma) = (-1)^(w(gamma)+1) [gamma] for the V1 core."""
    return -1 if core_weight(p, q, w) == 0 else 1


def _to_common(x, L: int):
    if isinstance(x, Cyclo):
        return x.embed(L)
    return Cyclo.const(L, x)


def fiber_dim(P: LensPresentation, t0, w: int = 0, check_point: bool = True) -> int:
    """Dimension of the fiber S / Fr(tau - t0) S at the character point t0."""
    if P.target.kind != "root":
        raise ValueError("fibers are defined at a root of unity")
    p = P.gluing.p
    N = P.target.N
    if check_point:
        from .charvar import char_scheme
        if not char_scheme(p).contains(t0):
            raise CharacterDomainError(f"t0={t0!r} is not a root of f_{p}")
    Zmat, _ = module_act(SkeinVector({1: 1}), P, N)
    order = t0.order if isinstance(t0, Cyclo) else 1
    L = _lcm(P.target.L, order)
    sign = psi_sign(p, P.gluing.q, w)
    M = []
    for r, row in enumerate(Zmat):
        M.append([_to_common(x, L) * sign - (_to_common(t0, L) if r == c else 0)
                  for c, x in enumerate(row)])
    return P.dim - rank(M)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def fiber_report(P: LensPresentation, w: int = 0) -> dict:
    """Fiber dimensions at every closed point, with the sum rule."""
    from .charvar import char_scheme
    cs = char_scheme(P.gluing.p)
    points = []
    for k, t0 in enumerate(cs.points):
        val = t0.to_complex() if isinstance(t0, Cyclo) else complex(t0)
        central = abs(abs(val.real) - 2) < 1e-9
        points.append({
            "index": k,
            "t0_order": t0.order if isinstance(t0, Cyclo) else 1,
            "t0_coords": _coords_json(t0),
            "t0_approx": round(val.real, 12),
            "central": central,
            "fiber_dim": fiber_dim(P, t0, w, check_point=False),
        })
    total = sum(pt["fiber_dim"] for pt in points)
    return {
        **P.to_json(),
        "w": w,
        "reduced": cs.reduced,
        "points": points,
        "sum_rule": {"total_fiber_dim": total, "dim": P.dim,
                     "holds": (not cs.reduced) or total == P.dim},
    }


def _coords_json(x):
    if isinstance(x, Cyclo):
        return [str(c) for c in x.coords]
    return [str(x)]


# ---------------------------------------------------------------------------
# H^1(M; Z/2) action
# ---------------------------------------------------------------------------

def h1_action(chi: int, vec: dict, P: LensPresentation) -> list:
    """chi acting by (-1)^((i+j) chi) on z^i (x) z^j, then projected."""
    if chi % 2 and P.gluing.p % 2:
        raise ValueError("H^1(L(p,q); Z/2) is trivial for odd p")
    signed = {(i, j): (c if (i + j) * chi % 2 == 0 else -c) for (i, j), c in vec.items()}
    return P.project(signed)


def h1_descends(P: LensPresentation, chi: int = 1, limit: int | None = None) -> bool:
    """The sign action maps every stored relation to the relation span."""
    for row in _sample_relations(P, limit):
        signed = {(i, j): (c if (i + j) * chi % 2 == 0 else -c) for (i, j), c in row.items()}
        if not P.in_relation_span(signed):
            return False
    return True


def _sample_relations(P: LensPresentation, limit: int | None):
    rels = build_relations(P.gluing, P.D, P.target)
    if limit is not None:
        rels = [r for r in rels if max(i + j for i, j in r) <= limit]
    return rels


def h1_equivariance(P: LensPresentation, a: SkeinVector, chi: int = 1) -> bool:
    """chi . Fr(a) v == Fr(chi . a) (chi . v) on every basis vector."""
    N = P.target.N
    twisted = SkeinVector({k: (c if k * chi % 2 == 0 else -c) for k, c in a.coeffs.items()})
    M, P2 = module_act(a, P, N)
    Mt, _ = module_act(twisted, P2, N)
    signs = [(-1) ** ((i + j) * chi) for i, j in P2.basis]
    for r in range(P2.dim):
        for c in range(P2.dim):
            if M[r][c] * signs[r] != signs[c] * Mt[r][c]:
                return False
    return True


def frobenius_well_defined(P: LensPresentation, family: str = "trace",
                           degree: int = 1) -> bool:
    """Fr(z^degree) (x) 1 maps low relations into the relation span."""
    N = P.target.N
    poly = threaded_polynomial(SkeinVector({degree: 1}), N, family)
    shift = len(poly) - 1
    big = P.enlarged(P.D + shift + 2)
    bound = P.D - 2
    for row in build_relations(P.gluing, bound, P.target):
        if not big.in_relation_span(_left_multiply(poly, row)):
            return False
    return True


# ---------------------------------------------------------------------------
# classical side
# ---------------------------------------------------------------------------

def verify_classical_iso(g: GluingData, w: int = 0, D: int | None = None) -> dict:
    """Compare S_{+1}(L(p,q)) with the coordinate ring C[t]/(f_p)."""
    from .charvar import char_scheme
    t = EvalTarget.classical()
    P = quotient_basis(g, t, D)
    cs = char_scheme(g.p)
    fp = cs.coefficients()
    sign = psi_sign(g.p, g.q, w)
    # f_p(sign * z) (x) 1
    poly = [c * sign ** k for k, c in enumerate(fp)]
    need = len(poly) - 1
    if need > P.D:
        P = P.enlarged(need + 2)
    residue = P.project(_left_multiply(poly, {(0, 0): Fraction(1)}))
    annihilates = all(x == 0 for x in residue)
    dim_ok = P.dim == len(fp) - 1
    return {
        "p": g.p, "q": g.q, "r": g.r, "s": g.s, "w": w,
        "core_weight": core_weight(g.p, g.q, w),
        "dim": P.dim, "deg_f": len(fp) - 1,
        "dim_matches": dim_ok,
        "f_annihilates_psi_t": annihilates,
        "passed": dim_ok and annihilates,
    }


def dumps(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2)
