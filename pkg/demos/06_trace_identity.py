"""The weighted-trace identity for denominator-corrected cyclotomic elements.

Corrected elements are built by inverting polynomial twists of Frobenius
endomorphisms over a rational function field; the identity expressing their
one-level trace is checked exactly, and the engine can also exhibit that the
naive reading of the leading inverse Frobenius (with the function-field twist
included) fails.
"""

from fractions import Fraction as F

from rankin import otsuki_trace_check
from rankin.otsuki import corrected_element
from rankin.poly import PolyRing

families = {2: ([F(1), F(-1)], [F(1), F(0), F(-1)]),
            3: ([F(1), F(-2)], [F(1), F(1)]),
            5: ([F(1), F(-1), F(2)], [F(1), F(3)])}

ring = PolyRing(("tau3",))
nums, den = corrected_element(3, {3: families[3]}, ring)
print("corrected element at level 3 (coordinates over the tau function field):")
for k, n in enumerate(nums):
    print(f"    zeta^{k}: ({n}) / ({den})")

for (m, ell) in ((1, 3), (4, 3), (3, 5)):
    ok, _ = otsuki_trace_check(m, ell, families)
    print(f"trace identity at (m, ell) = ({m}, {ell}):", ok)

ok_naive, _ = otsuki_trace_check(1, 3, {3: families[3]}, literal_reading=True)
print("naive all-twisted reading of the leading Frobenius:", ok_naive)
