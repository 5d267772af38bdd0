"""Walk through L(4,1) at a cube root of unity: presentation, character
points, and the fiber over each point.

    python3 demos/lens_fibers.py
"""
from lensskein.charvar import char_scheme
from lensskein.coeffs import EvalTarget
from lensskein.heegaard import GluingData, core_weight, fiber_report, quotient_basis

p, q, N = 4, 1, 3
g = GluingData.lens(p, q)
print(f"L({p},{q}): meridian of V2 -> ({p},{q}), longitude -> ({g.r},{g.s})")

P = quotient_basis(g, EvalTarget.root(N))
print(f"truncation certificates (D, dim): {P.certificates}")
print(f"quotient basis z^i (x) z^j: {P.basis}")

cs = char_scheme(p)
print(f"f_{p}(t) = {cs}   reduced: {cs.reduced}")

for w in (0, 1):
    rep = fiber_report(P, w)
    print(f"\nspin weight of the core: {core_weight(p, q, w)}")
    for pt in rep["points"]:
        tag = "central" if pt["central"] else ""
        print(f"  t0 = {pt['t0_approx']:+.6f}  fiber dim {pt['fiber_dim']}  {tag}")
    print(f"  sum of fibers {rep['sum_rule']['total_fiber_dim']} = dim {rep['dim']}")
