"""The operator-valued norm-relation engine.

All identities live in the commutative Laurent ring Q[a, b, df, dg, s, p]:
a, b are the transpose degree-(p+1) correspondences on the two factors,
df, dg the paired diamond operators, s the Frobenius of the cyclotomic
coefficient field.  The engine derives composite norms mechanically and
simplifies the stabilized-class projection to a product of Euler-type
binomials -- every step an exact polynomial identity.
"""

from rankin import (derive_composite_norms, pstab_projection_formula,
                    verify_higher_rewrite, verify_sp_rewrite)
from rankin.normrel import derive_A_ell, specialize_to_corestriction
from rankin.operators import second_norm_operator

print("the degree-(p-1) norm operator:")
print("  ", second_norm_operator())

print("\nrewriting through the degree-(p^2+p) coset:", verify_sp_rewrite())
print("higher-layer rewrites:", verify_higher_rewrite())

d2, d3, c2, c3, ok_a, ok_b = derive_composite_norms()
print("\ncomposite norm, two steps, matches closed form:", ok_a)
print("composite norm, three steps, matches closed form:", ok_b)
print("eigenvalue specialization reproduces the corestriction display:",
      specialize_to_corestriction())

result, ok = pstab_projection_formula()
print("\nstabilized-class projection simplifies to the Euler product:", ok)
print("   ", result)

coeffs, cert, ok = derive_A_ell()
print("\ntwisted polynomial congruent to the local polynomial mod (l-1):", ok)
