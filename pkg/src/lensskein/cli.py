"""Command-line driver.

Exit codes: 0 success, 2 invalid input, 3 truncation did not stabilize,
4 a verification suite failed.
"""
from __future__ import annotations

import argparse
import json
import sys
from math import gcd

from . import annulus, charvar, heegaard, suites
from .coeffs import (CHEBYSHEV_FAMILIES, EvalTarget, HalfLaurent)

EXIT_OK, EXIT_INVALID, EXIT_TRUNCATION, EXIT_SUITE = 0, 2, 3, 4


class ValidationError(ValueError):
    pass


def _validate(args) -> None:
    p, q = getattr(args, "p", None), getattr(args, "q", None)
    if p is not None:
        if p < 0:
            raise ValidationError(f"--p must be nonnegative, got {p}")
        if q is not None and gcd(p, q) != 1:
            raise ValidationError(f"gcd(p, q) must be 1, got p={p}, q={q}")
    N = getattr(args, "N", None)
    if N is not None and (N < 3 or N % 2 == 0):
        raise ValidationError(f"--N must be odd and >= 3, got {N}")
    w = getattr(args, "w", None)
    if w is not None and w not in (0, 1):
        raise ValidationError(f"--w must be 0 or 1, got {w}")
    D = getattr(args, "trunc", None)
    if D is not None and D < 2:
        raise ValidationError(f"--trunc must be at least 2, got {D}")


def _emit(report: dict, fmt: str, table) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in table(report):
            print(line)


def cmd_lens(args) -> dict:
    g = heegaard.GluingData.lens(args.p, args.q)
    out = {"p": args.p, "q": args.q, "N": args.N, "r": g.r, "s": g.s, "targets": []}
    for t in (EvalTarget.generic(), EvalTarget.classical(), EvalTarget.root(args.N)):
        P = heegaard.quotient_basis(g, t, args.trunc, args.max_trunc)
        out["targets"].append({
            "target": str(t),
            "dim": P.dim,
            "D": P.D,
            "basis": [list(m) for m in P.basis],
            "certificates": [{"D": d, "dim": k} for d, k in P.certificates],
        })
    return out


def _lens_table(r):
    yield f"L({r['p']},{r['q']})  completion (r,s)=({r['r']},{r['s']})"
    for t in r["targets"]:
        cert = ", ".join(f"D={c['D']}:{c['dim']}" for c in t["certificates"])
        yield f"  {t['target']:<22} dim {t['dim']}   [{cert}]"


def cmd_chars(args) -> dict:
    cs = charvar.char_scheme(args.p)
    rep = cs.to_json()
    rep["f_p_str"] = str(cs)
    rep["degree"] = cs.degree
    rep["points_approx"] = [round(x.to_complex().real, 12) for x in cs.points]
    return rep


def _chars_table(r):
    yield f"p={r['p']}  f_p = {r['f_p_str']}  (degree {r['degree']}, reduced={r['reduced']})"
    for k, v in enumerate(r["points_approx"]):
        yield f"  point {k}: t0 = {v:+.12f}"


def cmd_fibers(args) -> dict:
    g = heegaard.GluingData.lens(args.p, args.q)
    P = heegaard.quotient_basis(g, EvalTarget.root(args.N), args.trunc, args.max_trunc)
    return heegaard.fiber_report(P, args.w)


def _fibers_table(r):
    yield (f"L({r['p']},{r['q']}) at {r['target']}: dim {r['dim']}, "
           f"core weight {heegaard.core_weight(r['p'], r['q'], r['w'])}")
    for pt in r["points"]:
        flag = "  central" if pt["central"] else ""
        yield f"  t0 = {pt['t0_approx']:+.12f}  fiber dim {pt['fiber_dim']}{flag}"
    s = r["sum_rule"]
    yield f"  sum rule: {s['total_fiber_dim']} == {s['dim']}: {s['holds']}"


def cmd_verify(args) -> dict:
    results = suites.run_all(args.seed, args.quick, args.inject_fault == "framing")
    return {"seed": args.seed, "quick": args.quick, "inject_fault": args.inject_fault,
            "suites": [r.to_json() for r in results],
            "all_passed": all(r.passed for r in results)}


def _verify_table(r):
    for s in r["suites"]:
        yield f"{'PASS' if s['passed'] else 'FAIL'}  {s['name']:<36} {s['checked']:>5} checks  {s['detail']}"
    yield "all passed" if r["all_passed"] else "FAILURES"


def cmd_chebyshev(args) -> dict:
    fam = CHEBYSHEV_FAMILIES
    return {"n": args.N, "families": {name: [str(c) for c in f(args.N)] for name, f in fam.items()}}


def _cheb_table(r):
    for name, coeffs in r["families"].items():
        terms = [f"{c}*X^{k}" for k, c in enumerate(coeffs) if c != "0"]
        yield f"{name:>6}: " + " + ".join(terms)


def cmd_resolve(args) -> dict:
    d = annulus.AnnularWord.from_text(args.word)
    v = annulus.framing_normalize(annulus.resolve_laurent(d), d.framing)
    rep = {"word": d.to_text(), "crossings": d.crossings,
           "generic": {str(k): _laurent_json(c) for k, c in sorted(v.coeffs.items())}}
    if args.N is not None:
        t = EvalTarget.root(args.N)
        rep["root"] = {"N": args.N, "coeffs": {str(k): [str(x) for x in t.evaluate(c).coords]
                                               for k, c in sorted(v.coeffs.items())}}
    return rep


def _laurent_json(c: HalfLaurent) -> dict:
    return {str(e): str(x) for e, x in c.items()}


def _resolve_table(r):
    yield r["word"]
    for k, terms in r["generic"].items():
        poly = " + ".join(f"{c}*h^{e}" for e, c in terms.items())
        yield f"  z^{k}: {poly}"
    if "root" in r:
        yield f"  at Root(N={r['root']['N']}), coordinates in Q(zeta_N):"
        for k, coords in r["root"]["coeffs"].items():
            yield f"  z^{k}: [{', '.join(coords)}]"


COMMANDS = {
    "lens": (cmd_lens, _lens_table),
    "chars": (cmd_chars, _chars_table),
    "fibers": (cmd_fibers, _fibers_table),
    "verify": (cmd_verify, _verify_table),
    "chebyshev": (cmd_chebyshev, _cheb_table),
    "resolve": (cmd_resolve, _resolve_table),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lensskein",
                                     description="Skein modules of lens spaces at roots of unity.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, p=True, q=True, N=True, w=False, trunc=False):
        if p:
            sp.add_argument("--p", type=int, required=True)
        if q:
            sp.add_argument("--q", type=int, required=True)
        if N:
            sp.add_argument("--N", type=int, default=3)
        if w:
            sp.add_argument("--w", type=int, default=0)
        if trunc:
            sp.add_argument("--trunc", type=int, default=None,
                            help="first truncation degree (default p + 4)")
            sp.add_argument("--max-trunc", type=int, default=40,
                            help="give up (exit 3) beyond this truncation degree")
        sp.add_argument("--format", choices=("table", "json"), default="table")

    common(sub.add_parser("lens", help="dimensions of S(L(p,q))"), trunc=True)
    common(sub.add_parser("chars", help="character scheme of Z/p"), q=False, N=False)
    common(sub.add_parser("fibers", help="fiber dimensions at every character point"),
           w=True, trunc=True)
    v = sub.add_parser("verify", help="run the invariant suites")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--quick", action="store_true")
    v.add_argument("--inject-fault", choices=("framing",), default=None)
    v.add_argument("--format", choices=("table", "json"), default="table")
    c = sub.add_parser("chebyshev", help="both Chebyshev families at index N")
    c.add_argument("--N", type=int, default=3)
    c.add_argument("--format", choices=("table", "json"), default="table")
    r = sub.add_parser("resolve", help="bracket of an annular word")
    r.add_argument("word")
    r.add_argument("--N", type=int, default=None)
    r.add_argument("--format", choices=("table", "json"), default="table")
    return parser


def _fail(code: int, kind: str, message: str) -> int:
    print(json.dumps({"error": kind, "message": message}, sort_keys=True), file=sys.stderr)
    return code


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    run, table = COMMANDS[args.command]
    try:
        if args.command != "chebyshev":
            _validate(args)
        elif args.N < 0:
            raise ValidationError("--N must be nonnegative")
        report = run(args)
    except (ValidationError, annulus.DiagramError, heegaard.CharacterDomainError) as exc:
        return _fail(EXIT_INVALID, "validation", str(exc))
    except heegaard.InconclusiveTruncation as exc:
        return _fail(EXIT_TRUNCATION, "inconclusive_truncation", str(exc))
    _emit(report, args.format, table)
    if args.command == "verify" and not report["all_passed"]:
        return EXIT_SUITE
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
