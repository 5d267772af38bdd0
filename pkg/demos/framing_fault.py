"""Flip the sign of the framing correction and watch the suites catch it.

    python3 demos/framing_fault.py
"""
from lensskein import suites

for flip in (False, True):
    print("framing correction", "flipped" if flip else "as implemented")
    for res in (suites.calibration(flip), suites.action_associativity(2, 3, flip)):
        print(f"  {'PASS' if res.passed else 'FAIL'} {res.name}: {res.checked} checks, {res.detail}")
