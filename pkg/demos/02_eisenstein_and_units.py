"""Eisenstein q-expansions, modular units and the identities tying them
together: the dlog identity and the distribution relations.
"""

from fractions import Fraction as F

from rankin import (EisensteinSpec, distribution_check, dlog_matches_weight_two,
                    eisenstein_qexp, siegel_unit_qexp)

# the three Eisenstein families; constant terms are exact special values
for family, k, alpha in (("E", 2, F(0)), ("F", 2, F(1, 5)), ("Etilde", 2, F(1, 2))):
    s = eisenstein_qexp(EisensteinSpec(family, k, alpha), 6)
    print(f"{family}, weight {k}, parameter {alpha}:")
    print("   ", s)

# the modular unit with parameter 1/5: a q-product with a fractional leading
# exponent, and its logarithmic derivative is minus the weight-2 F series
g = siegel_unit_qexp(F(1, 5), None, 12)
print("\nunit with parameter 1/5:")
print("   ", g)
ok, _ = dlog_matches_weight_two(F(1, 5), 100)
print("dlog g = -F identity to q^100:", ok)

# the distribution relations for the three diagonal matrix shapes
for name, M in (("q -> q^m shape", ((2, 0), (0, 1))),
                ("z -> z/m shape", ((1, 0), (0, 2))),
                ("scalar shape", ((2, 0), (0, 2)))):
    ok, wit = distribution_check(0, F(1, 5), M, 7, 60)
    print(f"distribution relation, {name}: {ok} ({wit['factors']} factors)")
