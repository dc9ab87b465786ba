"""The bundled worked example: the level-11 form against the level-26 form
with quadratic nebentypus, studied at p = 17.

The level-11 coefficients are regenerated from the eta-product oracle; the
level-26 data ships with provenance notes and is cross-validated by its
Hecke invariants and by reproducing the exact minimal polynomial of the
ratio of unit roots.
"""

from rankin import (congruence_prime_scan, eta_oracle_level11, hypothesis_report,
                    load_bundled, p_stabilize, rankin_euler_factor,
                    ratio_minpoly_and_root_of_unity, weil_check)

f = load_bundled("f11.eigenform")
g = load_bundled("g26.eigenform")
print("f:", " + ".join(f"{f.a(n)} q^{n}" for n in range(1, 6)), "+ ...")
print("g:", " + ".join(f"({g.a(n)}) q^{n}" for n in range(1, 6)), "+ ...")

eta = eta_oracle_level11(40)
print("\neta-product oracle agrees with the data file:",
      all(f.a(n) == f.ring.coerce(c) for n, c in enumerate(eta, start=1)))

st_f, st_g = p_stabilize(f, 17), p_stabilize(g, 17)
print("ordinary at 17:", st_f.ordinary and st_g.ordinary)
mp, is_ru = ratio_minpoly_and_root_of_unity(st_f, st_g)
print("minimal polynomial of the unit-root ratio:",
      " + ".join(f"({c}) x^{k}" for k, c in enumerate(mp)))
print("root of unity:", is_ru)

window = [p for p in range(5, 51) if all(p % q for q in range(2, p))]
scan = congruence_prime_scan(f, g, [g.character], 100, window)
flagged = sorted({p for p, entries in scan.items()
                  if any(w is None for _, w in entries)})
print("congruence scan flags:", flagged)

fac = rankin_euler_factor(f, g, 3)
print("\nconvolution local factor at 3:", fac)
print("reciprocal-root bound:", weil_check(fac, 3, 2, 2))

print("\nhypothesis checklist at p = 17:")
for key, (status, _) in hypothesis_report(f, g, 17).items():
    print(f"    {key}: {status}")
