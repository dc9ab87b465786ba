"""Hecke double cosets by brute enumeration, and the Iwahori invariants.

The square of the transpose degree-(p+1) correspondence decomposes as the
degree-(p^2+p) coset plus (p+1) copies of a diamond twist of the scalar
coset; the engine finds this by counting products of explicit coset
representatives, with no group theory trusted beyond enumeration.
"""

from fractions import Fraction as F

from rankin import (CongSubgroup, CosetMatrix, coset_reps, iwahori_index,
                    iwahori_invariant, t_prime_square_identity)

G = CongSubgroup.gamma1(5)
reps = coset_reps(G, CosetMatrix((2, 0, 0, 1)))
print("right-coset representatives of the degree-3 coset at level 5:")
for r in reps:
    print("   ", r)

print("\nsquare identity at (N, p) = (5, 2):")
report = t_prime_square_identity(5, 2)
for entry in report["constituents"]:
    print(f"    {entry['cell']}: multiplicity {entry['multiplicity']}, "
          f"degree {entry['degree']}")
print("verdict:", report["holds"], "| diamond constituent is", report["diamond"])

print("\nIwahori indices at p = 3:")
for j in range(3):
    diag = (F(3) ** j, F(0), F(0), F(3) ** -j)
    anti = (F(0), -(F(3) ** -j), F(3) ** j, F(0))
    print(f"    j = {j}: diagonal cell {iwahori_invariant(diag, 3)} index "
          f"{iwahori_index(diag, 3)}, antidiagonal cell "
          f"{iwahori_invariant(anti, 3)} index {iwahori_index(anti, 3)}")
