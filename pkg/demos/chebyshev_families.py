"""Which Chebyshev normalisation makes threading well defined?

Threading z by t_N (t_0 = 2) commutes with the gluing relations; the
variant started at T_0 = 1 does not, except in cases too small to notice.

    python3 demos/chebyshev_families.py
"""
from lensskein.coeffs import EvalTarget, chebyshev_first, chebyshev_unit_start
from lensskein.heegaard import GluingData, frobenius_well_defined, quotient_basis

print("t_3 =", chebyshev_first(3), "  T_3 =", chebyshev_unit_start(3))

for p, q in [(1, 0), (2, 1), (3, 1), (5, 2), (8, 3)]:
    P = quotient_basis(GluingData.lens(p, q), EvalTarget.root(3))
    trace = frobenius_well_defined(P, "trace")
    unit = frobenius_well_defined(P, "unit")
    print(f"L({p},{q}): trace family {'ok' if trace else 'BROKEN'}, "
          f"unit family {'ok' if unit else 'BROKEN'}")
