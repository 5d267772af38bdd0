"""Invariant suites shared by the ``verify`` subcommand.

Each suite returns a SuiteResult; none of them raise on a failed check.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import annulus, charvar, heegaard, solidtorus
from .annulus import (AnnularWord, Cap, Crossing, Cup, SkeinVector, resolve_laurent,
                      resolve_naive)
from .coeffs import EvalTarget, HalfLaurent, chebyshev_first
from .torusalg import TorusElement


@dataclass
class SuiteResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "detail": self.detail}


def random_word(rng: random.Random, max_crossings: int = 8, max_strands: int = 5) -> AnnularWord:
    """Random well-formed annular word with at most ``max_crossings`` crossings."""
    n = rng.randint(0, 3)
    m = n
    slices = []
    crossings = 0
    for _ in range(rng.randint(0, 14)):
        options = []
        if m >= 2 and crossings < max_crossings:
            options += ["X", "X"]
        if m >= 2:
            options.append("CAP")
        if m + 2 <= max_strands:
            options.append("CUP")
        if not options:
            break
        kind = rng.choice(options)
        if kind == "X":
            slices.append(Crossing(rng.randrange(m - 1), rng.choice((1, -1))))
            crossings += 1
        elif kind == "CAP":
            slices.append(Cap(rng.randrange(m - 1)))
            m -= 2
        else:
            slices.append(Cup(rng.randrange(m + 1)))
            m += 2
    while m > n:
        slices.append(Cap(rng.randrange(m - 1)))
        m -= 2
    while m < n:
        slices.append(Cup(rng.randrange(m + 1)))
        m += 2
    return AnnularWord(tuple(slices), n, rng.randint(0, 1))


def resolver_oracle(seed: int = 0, count: int = 200) -> SuiteResult:
    rng = random.Random(seed)
    bad = 0
    for _ in range(count):
        d = random_word(rng)
        if resolve_laurent(d) != resolve_naive(d):
            bad += 1
    return SuiteResult("resolver_oracle", bad == 0, count, f"{bad} mismatches")


def _flipped_action(a, b, n):
    """Diagram action with the framing correction applied with the wrong sign;
    non-primitive indices go through e_(dv) = t_d(e_v)."""
    g = gcd(a, b)
    if g == 1:
        d = annulus.action_diagram(a, b, n)
        return annulus.framing_normalize(resolve_laurent(d), -d.framing)
    a0, b0 = a // g, b // g
    out = SkeinVector()
    cur = SkeinVector({n: HalfLaurent.const(1)})
    for i, c in enumerate(chebyshev_first(g)):
        if i:
            nxt = SkeinVector()
            for k, ck in cur.coeffs.items():
                nxt = nxt + _flipped_action(a0, b0, k).scale(ck)
            cur = nxt
        if c:
            out = out + cur.scale(c)
    return out


def action_associativity(max_index: int = 3, max_n: int = 6,
                         flip_framing: bool = False) -> SuiteResult:
    """(x y) |> z^n == x |> (y |> z^n) for generators x and all |a|,|b| <= max_index.

    With ``flip_framing`` the generator actions are recomputed from diagrams
    with the framing correction of the wrong sign; the suite must then fail.
    """
    gens = [(1, 0), (0, 1), (1, 1), (1, -1)]
    others = [(a, b) for a in range(-max_index, max_index + 1)
              for b in range(-max_index, max_index + 1) if (a, b) != (0, 0)]
    checked = bad = 0
    if flip_framing:
        def act(x: TorusElement, v: SkeinVector) -> SkeinVector:
            out = SkeinVector()
            for (a, b), c in x.terms.items():
                if (a, b) == (0, 0):
                    out = out + v.scale(c)
                    continue
                for k, ck in v.coeffs.items():
                    out = out + _flipped_action(a, b, k).scale(ck * c)
            return out
        pairs = [(x, y) for x in gens for y in gens]
        ns = range(0, min(max_n, 3) + 1)
    else:
        act = solidtorus.act_laurent
        pairs = [(x, y) for x in gens for y in others]
        ns = range(0, max_n + 1)
    for n in ns:
        v = SkeinVector({n: HalfLaurent.const(1)})
        for x, y in pairs:
            X, Y = TorusElement.e(*x), TorusElement.e(*y)
            checked += 1
            if act(X * Y, v) != act(X, act(Y, v)):
                bad += 1
    name = "action_associativity" + ("[flipped framing]" if flip_framing else "")
    return SuiteResult(name, bad == 0, checked, f"{bad} failures")


def calibration(flip_framing: bool = False) -> SuiteResult:
    """Unit values and generator actions on the empty skein."""
    sign = -1 if flip_framing else 1
    delta = HalfLaurent.loop_value()
    A = HalfLaurent.A
    checks = []
    kink = annulus.kink_diagram()
    checks.append(resolve_laurent(kink) == SkeinVector({1: -A(3)}))
    checks.append(resolve_laurent(AnnularWord((Cup(0), Cap(0)), 0)) == SkeinVector({0: delta}))
    for (a, b), expected in [((1, 0), SkeinVector({1: A(0)})),
                             ((0, 1), SkeinVector({0: delta})),
                             ((1, 1), SkeinVector({1: -A(-3)})),
                             ((1, -1), SkeinVector({1: -A(3)}))]:
        d = annulus.action_diagram(a, b, 0)
        got = annulus.framing_normalize(resolve_laurent(d), sign * d.framing)
        checks.append(got == expected)
    name = "calibration" + ("[flipped framing]" if flip_framing else "")
    return SuiteResult(name, all(checks), len(checks), f"{checks.count(False)} failures")


LENS_INSTANCES = ((1, 0), (2, 1), (3, 1), (4, 1), (5, 1), (5, 2), (7, 2), (8, 3))


def completion_independence(instances=((2, 1), (3, 1), (5, 2)), Ns=(3,)) -> SuiteResult:
    checked = bad = 0
    for p, q in instances:
        for N in Ns:
            t = EvalTarget.root(N)
            g1 = heegaard.GluingData.lens(p, q)
            g2 = g1.alternative()
            P1, P2 = heegaard.quotient_basis(g1, t), heegaard.quotient_basis(g2, t)
            f1 = [x["fiber_dim"] for x in heegaard.fiber_report(P1)["points"]]
            f2 = [x["fiber_dim"] for x in heegaard.fiber_report(P2)["points"]]
            checked += 1
            if P1.dim != P2.dim or f1 != f2:
                bad += 1
    return SuiteResult("completion_independence", bad == 0, checked, f"{bad} failures")


def h1_equivariance(ps=((2, 1), (4, 1)), N: int = 3) -> SuiteResult:
    checked = bad = 0
    for p, q in ps:
        P = heegaard.quotient_basis(heegaard.GluingData.lens(p, q), EvalTarget.root(N))
        ok = (heegaard.h1_descends(P)
              and heegaard.h1_equivariance(P, SkeinVector({1: 1}))
              and heegaard.h1_equivariance(P, SkeinVector({2: 1})))
        rep = heegaard.fiber_report(P)
        dims = {round(x["t0_approx"]): x["fiber_dim"] for x in rep["points"] if x["central"]}
        ok = ok and dims.get(2) == dims.get(-2)
        checked += 1
        bad += not ok
    return SuiteResult("h1_equivariance", bad == 0, checked, f"{bad} failures")


def reynolds_suite(max_degree: int = 3) -> SuiteResult:
    V = charvar.REP_VARS
    a, b, c, d = (charvar.MPoly.var(V, v) for v in V)
    t = charvar.trace_poly()
    checks = [charvar.reynolds(a) == t * Fraction(1, 2),
              charvar.reynolds(b).is_zero(),
              charvar.reynolds(t) == t]
    for f in [a * a, a * b, b * c, a * d * d, b * b * c]:
        if f.degree() > max_degree:
            continue
        r = charvar.reynolds(f, max_degree)
        checks.append(charvar.reynolds(r, max_degree) == r)
        checks.append(charvar.is_invariant(r))
        if f.degree() + 1 <= max_degree:
            checks.append(charvar.reynolds(t * f, max_degree) == t * r)
    for p in (2, 3):
        for pt in charvar.char_scheme(p).points:
            one = charvar.Cyclo.const(pt.order, 1)
            checks.append(charvar.check_reynolds_lemma([[-pt, one]], 4, p))
    return SuiteResult("reynolds", all(checks), len(checks), f"{checks.count(False)} failures")


def classical_iso(max_p: int = 8) -> SuiteResult:
    instances = [(1, 0)] + [(p, q) for p in range(2, max_p + 1)
                            for q in range(1, p) if gcd(p, q) == 1]
    bad = 0
    for p, q in instances:
        bad += not heegaard.verify_classical_iso(heegaard.GluingData.lens(p, q))["passed"]
    checked = len(instances)
    return SuiteResult("classical_iso", bad == 0, checked, f"{bad} failures")


def run_all(seed: int = 0, quick: bool = False, flip_framing: bool = False) -> list:
    results = [
        calibration(flip_framing),
        resolver_oracle(seed, 60 if quick else 200),
        action_associativity(2 if quick else 3, 3 if quick else 6, flip_framing),
        completion_independence(((2, 1), (3, 1)) if quick else ((2, 1), (3, 1), (5, 2))),
        h1_equivariance(((2, 1),) if quick else ((2, 1), (4, 1))),
        reynolds_suite(),
        classical_iso(5 if quick else 8),
    ]
    return results
