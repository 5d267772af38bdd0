"""Framed link diagrams in the annulus and their Kauffman bracket.

A diagram is a cyclic word of slices read left to right (increasing angle).
Strand positions are numbered from 0 at the inner boundary upward. The word
is cut open at a seam; position k on the right edge is glued back to
position k on the left edge.

Crossing conventions:

* ``X+i``: the strand moving from position i+1 down to i passes over.
  Its A-smoothing keeps both strands running straight through.
* ``X-i``: the strand moving from position i up to i+1 passes over.
  Its A-smoothing is the turnback (cap followed by cup).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .coeffs import EvalTarget, HalfLaurent


class DiagramError(ValueError):
    """Malformed annular word."""


@dataclass(frozen=True)
class Crossing:
    i: int
    sign: int

    def token(self) -> str:
        return f"X{'+' if self.sign > 0 else '-'}{self.i}"


@dataclass(frozen=True)
class Cap:
    i: int

    def token(self) -> str:
        return f"CAP{self.i}"


@dataclass(frozen=True)
class Cup:
    i: int

    def token(self) -> str:
        return f"CUP{self.i}"


def slice_counts(s, n_in: int) -> tuple[int, int]:
    """(input strands, output strands) of a slice entered with n_in strands."""
    if isinstance(s, Crossing):
        if s.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {s.sign}")
        if not 0 <= s.i < n_in - 1:
            raise DiagramError(f"crossing at {s.i} out of range for {n_in} strands")
        return n_in, n_in
    if isinstance(s, Cap):
        if not 0 <= s.i < n_in - 1:
            raise DiagramError(f"cap at {s.i} out of range for {n_in} strands")
        return n_in, n_in - 2
    if isinstance(s, Cup):
        if not 0 <= s.i <= n_in:
            raise DiagramError(f"cup at {s.i} out of range for {n_in} strands")
        return n_in, n_in + 2
    raise DiagramError(f"unknown slice {s!r}")


@dataclass(frozen=True)
class AnnularWord:
    """Cyclic slice word with ``n`` strands at the seam.

    ``framing`` is the blackboard-to-surface framing offset recorded by the
    constructors; :func:`resolve` ignores it and :func:`framing_normalize`
    consumes it.
    """

    slices: tuple = ()
    n: int = 0
    free_loops: int = 0
    framing: int = 0

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(self.slices))
        if self.n < 0 or self.free_loops < 0:
            raise DiagramError("strand and loop counts must be nonnegative")
        m = self.n
        for s in self.slices:
            _, m = slice_counts(s, m)
        if m != self.n:
            raise DiagramError(f"word does not close: {self.n} strands in, {m} out")

    @property
    def crossings(self) -> int:
        return sum(isinstance(s, Crossing) for s in self.slices)

    def writhe_signs(self) -> int:
        return sum(s.sign for s in self.slices if isinstance(s, Crossing))

    def rotate(self, k: int = 1) -> "AnnularWord":
        """Move the first k slices to the end (and re-cut the seam).

        Only valid when the strand count at the new seam is n, which holds
        whenever the first k slices are crossings.
        """
        m = self.n
        for s in self.slices[:k]:
            _, m = slice_counts(s, m)
        return AnnularWord(self.slices[k:] + self.slices[:k], m, self.free_loops, self.framing)

    def to_text(self) -> str:
        toks = [f"STRANDS={self.n}"] + [s.token() for s in self.slices]
        if self.free_loops:
            toks.append(f"LOOPS={self.free_loops}")
        if self.framing:
            toks.append(f"FRAMING={self.framing}")
        return ",".join(toks)

    @classmethod
    def from_text(cls, text: str) -> "AnnularWord":
        slices, loops, framing, strands = [], 0, 0, None
        for raw in text.split(","):
            tok = raw.strip()
            if not tok:
                continue
            try:
                if tok.startswith("X+"):
                    slices.append(Crossing(int(tok[2:]), 1))
                elif tok.startswith("X-"):
                    slices.append(Crossing(int(tok[2:]), -1))
                elif tok.startswith("CAP"):
                    slices.append(Cap(int(tok[3:])))
                elif tok.startswith("CUP"):
                    slices.append(Cup(int(tok[3:])))
                elif tok.startswith("LOOPS="):
                    loops = int(tok[6:])
                elif tok.startswith("FRAMING="):
                    framing = int(tok[8:])
                elif tok.startswith("STRANDS="):
                    strands = int(tok[8:])
                else:
                    raise DiagramError(f"unknown token {tok!r}")
            except ValueError as exc:
                if isinstance(exc, DiagramError):
                    raise
                raise DiagramError(f"bad token {tok!r}") from exc
        if strands is None:
            strands = _infer_strands(slices)
        return cls(tuple(slices), strands, loops, framing)


def _infer_strands(slices) -> int:
    """Smallest seam strand count for which the word is well formed."""
    for n in range(0, 2 * len(slices) + 2):
        try:
            m = n
            for s in slices:
                _, m = slice_counts(s, m)
        except DiagramError:
            continue
        if m == n:
            return n
    raise DiagramError("cannot infer strand count; add STRANDS=n")


class SkeinVector:
    """Finitely supported element sum c_k z**k of k[z]."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {int(k): c for k, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def monomial(cls, k: int, c=1) -> "SkeinVector":
        return cls({k: c})

    def degree(self) -> int:
        return max(self.coeffs, default=-1)

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return SkeinVector(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> "SkeinVector":
        return SkeinVector({k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if not isinstance(other, SkeinVector):
            return self.scale(other)
        out = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                out[i + j] = out[i + j] + a * b if i + j in out else a * b
        return SkeinVector(out)

    def map_coeffs(self, f) -> "SkeinVector":
        return SkeinVector({k: f(c) for k, c in self.coeffs.items()})

    def __eq__(self, other):
        if not isinstance(other, SkeinVector):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "SkeinVector(0)"
        return " + ".join(f"({c!r})*z^{k}" for k, c in sorted(self.coeffs.items()))


# ---------------------------------------------------------------------------
# transfer-matrix resolver
# ---------------------------------------------------------------------------

_A = HalfLaurent.A(1)
_AINV = HalfLaurent.A(-1)
_DELTA = HalfLaurent.loop_value()


def _cup(F, i):
    # frontier entries >= 0 are frontier indices, < 0 encode left endpoint -(k+1)
    G = [x + 2 if x >= i else x for x in F]
    return tuple(G[:i]) + (i + 1, i) + tuple(G[i:])


def _cap(F, LL, i):
    """Join frontier positions i, i+1. Returns (F, LL, closed_loop)."""
    x, y = F[i], F[i + 1]
    if x == i + 1:
        F2 = F[:i] + F[i + 2:]
        return tuple(v - 2 if v > i + 1 else v for v in F2), LL, True
    F = list(F)
    if x >= 0 and y >= 0:
        F[x], F[y] = y, x
    elif x >= 0:
        F[x] = y
    elif y >= 0:
        F[y] = x
    else:
        LL = tuple(sorted(LL + (tuple(sorted((-x - 1, -y - 1))),)))
    F2 = F[:i] + F[i + 2:]
    return tuple(v - 2 if v > i + 1 else v for v in F2), LL, False


def _close_graph(F, LL, n) -> tuple[int, int]:
    """Closure by explicit cycle walk on endpoint nodes ('L',k) and ('R',k)."""
    match = {}
    for a, b in LL:
        match[("L", a)] = ("L", b)
        match[("L", b)] = ("L", a)
    for j, x in enumerate(F):
        if x < 0:
            match[("R", j)] = ("L", -x - 1)
            match[("L", -x - 1)] = ("R", j)
        else:
            match[("R", j)] = ("R", x)
    glue = {}
    for k in range(n):
        glue[("L", k)] = ("R", k)
        glue[("R", k)] = ("L", k)
    seen = set()
    winding = contractible = 0
    for k in range(n):
        node = ("L", k)
        if node in seen:
            continue
        total = 0
        cur = node
        while True:
            seen.add(cur)
            nxt = match[cur]
            seen.add(nxt)
            # cross the seam from nxt
            total += 1 if nxt[0] == "R" else -1
            cur = glue[nxt]
            if cur == node:
                break
        if total:
            winding += 1
        else:
            contractible += 1
    return winding, contractible


def resolve_laurent(d: AnnularWord) -> SkeinVector:
    """Kauffman bracket of ``d`` in k[z] with HalfLaurent coefficients."""
    n = d.n
    states = {(tuple(-(k + 1) for k in range(n)), ()): HalfLaurent.const(1)}
    for s in d.slices:
        new = {}

        def push(key, c):
            if key in new:
                v = new[key] + c
                if v.is_zero():
                    del new[key]
                else:
                    new[key] = v
            else:
                new[key] = c

        if isinstance(s, Cup):
            for (F, LL), c in states.items():
                push((_cup(F, s.i), LL), c)
        elif isinstance(s, Cap):
            for (F, LL), c in states.items():
                F2, LL2, loop = _cap(F, LL, s.i)
                push((F2, LL2), c * _DELTA if loop else c)
        else:
            c_id, c_turn = (_A, _AINV) if s.sign > 0 else (_AINV, _A)
            for (F, LL), c in states.items():
                push((F, LL), c * c_id)
                F2, LL2, loop = _cap(F, LL, s.i)
                F2 = _cup(F2, s.i)
                push((F2, LL2), c * c_turn * (_DELTA if loop else 1))
        states = new
    out = {}
    for (F, LL), c in states.items():
        w, loops = _close_graph(F, LL, n)
        term = c * _DELTA ** (loops + d.free_loops)
        out[w] = out[w] + term if w in out else term
    return SkeinVector(out)


def resolve(d: AnnularWord, t: EvalTarget | None = None) -> SkeinVector:
    """Kauffman bracket of ``d`` evaluated at ``t`` (HalfLaurent when t is None)."""
    v = resolve_laurent(d)
    if t is None:
        return v
    return v.map_coeffs(t.evaluate)


def resolve_naive(d: AnnularWord) -> SkeinVector:
    """Reference bracket by full expansion over all 2**c smoothings.

    Each smoothed diagram is read as a graph of strand segments; a closed
    curve is essential exactly when it meets the seam an odd number of times.
    """
    idx = [k for k, s in enumerate(d.slices) if isinstance(s, Crossing)]
    out: dict[int, HalfLaurent] = {}
    for choice in product((0, 1), repeat=len(idx)):
        coeff = HalfLaurent.const(1)
        sl = list(d.slices)
        for k, turn in zip(idx, choice):
            s = sl[k]
            straight_is_A = s.sign > 0
            coeff = coeff * (_A if (turn == 0) == straight_is_A else _AINV)
            sl[k] = ("turn", s.i) if turn else ("id", s.i)
        w, c = _count_curves(sl, d.n)
        term = coeff * _DELTA ** (c + d.free_loops)
        out[w] = out[w] + term if w in out else term
    return SkeinVector(out)


def _count_curves(slices, n):
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    # node (col, pos): strand segment at column col; column 0 is the seam
    m = n
    for col, s in enumerate(slices):
        nxt = col + 1
        if isinstance(s, Cup):
            for p in range(m):
                union((col, p), (nxt, p if p < s.i else p + 2))
            union((nxt, s.i), (nxt, s.i + 1))
            m += 2
        elif isinstance(s, Cap):
            for p in range(m):
                if p < s.i:
                    union((col, p), (nxt, p))
                elif p > s.i + 1:
                    union((col, p), (nxt, p - 2))
            union((col, s.i), (col, s.i + 1))
            m -= 2
        else:
            kind, i = s
            for p in range(m):
                if p not in (i, i + 1):
                    union((col, p), (nxt, p))
            if kind == "id":
                union((col, i), (nxt, i))
                union((col, i + 1), (nxt, i + 1))
            else:
                union((col, i), (col, i + 1))
                union((nxt, i), (nxt, i + 1))
    last = len(slices)
    seam_hits: dict = {}
    for p in range(n):
        union((last, p), (0, p))
    for p in range(n):
        r = find((0, p))
        seam_hits[r] = seam_hits.get(r, 0) + 1
    nodes = {find(x) for x in list(parent)}
    winding = sum(1 for r in nodes if seam_hits.get(r, 0) % 2 == 1)
    return winding, len(nodes) - winding


# ---------------------------------------------------------------------------
# curves on the boundary torus
# ---------------------------------------------------------------------------

_CORE_RADIUS = 0.1234567
_CORE_GAP = 1e-3
_OFFSET = 0.0371


def _sweep_word(a: int, b: int, n: int) -> tuple:
    """Slice word for the (a,b) boundary curve (a >= 1) around n core loops.

    The solid torus is (annulus) x [-1,1]; a meridian disc is the unit disc
    in (r, h). Lap k of the curve sits at meridian angle
    phi_k(t) = b (t + k) / a + offset, i.e. r = cos 2 pi phi, h = sin 2 pi phi.
    Projection forgets h; with the orientation of the page, the sheet with
    smaller h is the one drawn over.
    """
    items = [("lap", k) for k in range(a)] + [("core", i) for i in range(n)]

    def phi(k, t):
        return b * (t + k) / a + _OFFSET

    def rh(item, t):
        kind, k = item
        if kind == "core":
            return _CORE_RADIUS + _CORE_GAP * k, 0.0
        x = 2 * math.pi * phi(k, t)
        return math.cos(x), math.sin(x)

    events = []
    if b != 0:
        span = abs(b) * 2 + 4
        for j in range(a):
            for k in range(j + 1, a):
                for m in range(-span, span + 1):
                    t = (a * (m - 2 * _OFFSET) / b - j - k) / 2
                    if 0 < t < 1:
                        events.append(t)
        for i in range(n):
            c = _CORE_RADIUS + _CORE_GAP * i
            base = math.acos(c) / (2 * math.pi)
            for k in range(a):
                for m in range(-span, span + 1):
                    for f in (base + m, -base + m):
                        t = a * (f - _OFFSET) / b - k
                        if 0 < t < 1:
                            events.append(t)
    events.sort()
    for u, v in zip(events, events[1:]):
        if v - u < 1e-9:
            raise DiagramError("degenerate projection: simultaneous events")

    order = sorted(items, key=lambda it: rh(it, 0.0)[0])
    slices = []
    for t in events:
        before = sorted(items, key=lambda it: rh(it, t - 1e-10)[0])
        after = sorted(items, key=lambda it: rh(it, t + 1e-10)[0])
        assert before == order
        diff = [p for p in range(len(order)) if before[p] != after[p]]
        if len(diff) != 2 or diff[1] != diff[0] + 1:
            raise DiagramError("degenerate projection: non-adjacent swap")
        i = diff[0]
        falling = before[i + 1]
        rising = before[i]
        h_fall = rh(falling, t)[1]
        h_rise = rh(rising, t)[1]
        slices.append(Crossing(i, 1 if h_fall < h_rise else -1))
        order = after
    end = sorted(items, key=lambda it: rh(it, 1.0 - 1e-12)[0])
    assert [x[0] for x in end] == [x[0] for x in order]
    return tuple(slices)


def _meridian_word(n: int) -> tuple:
    """Meridian loop encircling n core strands.

    It starts as a cup above the cores. The sheet with h > 0 sweeps down
    first, passing under every core, and the h < 0 sheet follows, passing
    over; the two meet in a cap below the cores.
    """
    slices = [Cup(n)]
    for i in range(n - 1, -1, -1):
        slices.append(Crossing(i, -1))
    for i in range(n, 0, -1):
        slices.append(Crossing(i, 1))
    slices.append(Cap(0))
    return tuple(slices)


def _normalize_pair(a: int, b: int) -> tuple[int, int]:
    if a < 0 or (a == 0 and b < 0):
        return -a, -b
    return a, b


def action_diagram(a: int, b: int, n: int) -> AnnularWord:
    """(a,b) boundary curve together with n parallel core loops.

    ``a`` counts longitudinal turns and ``b`` meridional turns; the pair is
    taken up to overall sign and must be primitive.
    """
    if (a, b) == (0, 0):
        raise DiagramError("(0,0) is not a curve")
    if n < 0:
        raise DiagramError("core count must be nonnegative")
    a, b = _normalize_pair(a, b)
    if math.gcd(a, b) != 1:
        raise DiagramError(f"({a},{b}) is not primitive; use Chebyshev expansion")
    if a == 0:
        return AnnularWord(_meridian_word(n), n, 0, 0)
    return AnnularWord(_sweep_word(a, b, n), a + n, 0, b)


def torus_curve_diagram(a: int, b: int) -> AnnularWord:
    """The (a,b) boundary curve pushed into the solid torus."""
    return action_diagram(a, b, 0)


def kink_diagram(n_cores: int = 1, sign: int = 1) -> AnnularWord:
    """One core loop carrying a single kink, plus n_cores - 1 plain cores."""
    s = Crossing(0, 1) if sign > 0 else Crossing(0, -1)
    return AnnularWord((Cup(1), s, Cap(1)), n_cores, 0, 0)


def framing_normalize(v: SkeinVector, w: int, t: EvalTarget | None = None) -> SkeinVector:
    """Multiply by (-A^3)**(-w); pass ``t`` when v is already evaluated."""
    if w == 0:
        return v
    return v.scale(writhe_correction(w, t))


def writhe_correction(w: int, t: EvalTarget | None = None):
    f = (-HalfLaurent.A(3)) ** (-w)
    return f if t is None else t.evaluate(f)
