"""A tour of the exact coefficient rings.

Everything downstream -- q-expansions, operator identities, local factors --
is computed over these rings, so equality of canonical forms is the only
notion of "equals" the workbench ever uses.
"""

from fractions import Fraction as F

from rankin import CyclotomicField, GroupRing, PolyRing, QuotRing, RatFunc
from rankin.groupring import augment_mod

# multivariate Laurent polynomials: s is invertible, x and y are not
R = PolyRing(("x", "y", "s"), invertible={"s"})
x, y, s = R.vars()
p = (x + y) ** 3 * s ** -2
print("a Laurent polynomial:", p)
print("rational function identity:", RatFunc(x ** 2 - y ** 2, x - y) == x + y)

# cyclotomic fields are stored reduced mod the cyclotomic polynomial
K = CyclotomicField(5)
z = K.zeta()
print("\nzeta_5^2 * zeta_5^3 =", z ** 2 * z ** 3)
print("1/(1 - zeta_5)      =", (K.one() - z).inverse())

# quotient rings make no irreducibility assumptions; inverting a genuine
# zero divisor is an error that names the culprit
Rg = QuotRing([("x", 2, [F(1), F(1)])])   # x^2 = x + 1
xg = Rg.gen("x")
print("\ngolden-ratio ring: 1/x =", xg.inverse(), " minpoly:", xg.minpoly())
Rz = QuotRing([("t", 2, [F(1), F(0)])])   # t^2 = 1, so (t-1)(t+1) = 0
try:
    (Rz.gen("t") - 1).inverse()
except ZeroDivisionError as exc:
    print("zero divisor detected:", exc)

# group rings of (Z/m)^*: convolution product and the augmentation map
G = GroupRing(5)
e = G.bracket(2) * G.bracket(3)
print("\n[2]*[3] in Q[(Z/5)^*] =", e)
print("augmentation of [2]-[3] mod 7:", augment_mod(G.bracket(2) - G.bracket(3), 7))
