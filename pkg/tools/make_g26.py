"""Regenerate the bundled eigenform data files.

The level-11 form comes from the eta-product oracle in the package.

The level-26 form (weight 2, nebentypus the quadratic character of conductor
13, a_2 = i) is reconstructed as follows:

* for l not dividing 26, a_l(g) = a_l(E') * psi(l)^-1 where E' is the
  elliptic curve 338d1: y^2 + x y = x^3 + x^2 + 504 x - 13112 (computed by
  point counting) and psi is the quartic character mod 13 with psi(2) = i
  (g twisted by psi corresponds to E'); the choice psi(2) = i is verified
  against the printed coefficients a_3 = -1, a_5 = -3i;
* a_2 = i (unramified-twist special component at 2);
* a_13 has absolute value sqrt(13), so lies in {+-3+-2i, +-2+-3i}; it is
  pinned by scanning the eight candidates against the Fricke functional
  equation g(-1/(26 tau)) = lam * 26 tau^2 * conj-form(tau) numerically at
  several sample points (the wrong candidates violate it at the 1e-5 level,
  the right one satisfies it to working precision);
* composite indices by multiplicativity and the weight-2 Hecke recursion.

Run:  python tools/make_g26.py  (writes into src/rankin/data/)
"""

import math
import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from rankin.forms import eta_oracle_level11  # noqa: E402

B = 120
HERE = os.path.dirname(os.path.abspath(__file__))
DATA = os.path.join(HERE, "..", "src", "rankin", "data")


def legendre(a, p):
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def ap_curve(p):
    """Trace of Frobenius of y^2 + xy = x^3 + x^2 + 504x - 13112 at a good
    odd prime, via the completed-square quartic h(x) = 4x^3 + 5x^2 + 2016x
    - 52448."""
    total = 0
    for x in range(p):
        h = (4 * x * x * x + 5 * x * x + 2016 * x - 52448) % p
        total += legendre(h, p)
    return -total


def primes_upto(n):
    sieve = bytearray([1]) * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = 0
    return out


def dlog13():
    """index table: 2^ind = x mod 13."""
    t = {}
    v = 1
    for k in range(12):
        t[v] = k
        v = (v * 2) % 13
    return t


IND = dlog13()
I = complex(0, 1)


def psi_bar(l):
    """(-i)^ind(l mod 13) = psi(l)^-1 for the quartic character with
    psi(2) = i."""
    return (-1j) ** (IND[l % 13] % 4)


def gauss_int(z):
    """Round a float complex to the nearest Gaussian integer, asserting it is
    close."""
    zr, zi = round(z.real), round(z.imag)
    assert abs(z - complex(zr, zi)) < 1e-6, z
    return (int(zr), int(zi))


def build_prime_table(a13):
    """a_l(g) as Gaussian-integer pairs for primes l <= B."""
    table = {2: (0, 1), 13: a13}
    for l in primes_upto(B):
        if l in (2, 13):
            continue
        al = ap_curve(l) * psi_bar(l)
        table[l] = gauss_int(al)
    return table


def gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def gadd(x, y):
    return (x[0] + y[0], x[1] + y[1])


def gscale(x, c):
    return (c * x[0], c * x[1])


def chi13(l):
    if l % 13 == 0:
        return 0
    return legendre(l, 13)


def full_table(a13):
    """a_n(g) for n <= B as Gaussian pairs, via recursion/multiplicativity."""
    ap = build_prime_table(a13)
    a = {1: (1, 0)}
    for l in primes_upto(B):
        # prime powers
        chi = 0 if l in (2, 13) else chi13(l)
        prev2, prev1 = (1, 0), ap[l]
        k = 1
        while l ** k <= B:
            a[l ** k] = prev1
            prev2, prev1 = prev1, gadd(gmul(ap[l], prev1), gscale(prev2, -l * chi))
            k += 1
    for n in range(2, B + 1):
        if n in a:
            continue
        for d in range(2, n):
            if n % d == 0 and math.gcd(d, n // d) == 1 and d in a and (n // d) in a:
                a[n] = gmul(a[d], a[n // d])
                break
    return a


def series(a, y, conj=False):
    total = 0j
    for n in range(1, B + 1):
        c = complex(a[n][0], a[n][1])
        if conj:
            c = c.conjugate()
        total += c * math.exp(-2 * math.pi * n * y)
    return total


def fricke_residual(a13):
    """Max residual of g(-1/(26 tau)) = lam 26 tau^2 gbar(tau) over samples."""
    a = full_table(a13)
    y0 = 1 / math.sqrt(26)
    lam = -series(a, y0) / series(a, y0, conj=True)
    assert abs(abs(lam) - 1) < 1e-9
    worst = 0.0
    for c in (1.25, 1.5, 1.75):
        lhs = series(a, y0 / c)
        rhs = -lam * c * c * series(a, c * y0, conj=True)
        worst = max(worst, abs(lhs - rhs) / max(abs(lhs), 1e-30))
    return worst, lam


def find_a13():
    candidates = [(x, y) for x, y in
                  [(3, 2), (3, -2), (-3, 2), (-3, -2),
                   (2, 3), (2, -3), (-2, 3), (-2, -3)]]
    results = {}
    for cand in candidates:
        res, lam = fricke_residual(cand)
        results[cand] = res
    best = min(results, key=results.get)
    ordered = sorted(results.values())
    print("functional-equation residuals:")
    for cand, res in sorted(results.items(), key=lambda kv: kv[1]):
        print(f"  a_13 = {cand[0]}{cand[1]:+d}i : {res:.3e}")
    assert ordered[0] < 1e-10 and ordered[1] > 1e-7, \
        "functional-equation scan is not decisive"
    return best


def gstr(z):
    """Format a Gaussian pair as a polynomial in t (t = i)."""
    x, y = z
    if y == 0:
        return str(x)
    ts = "t" if y == 1 else ("-t" if y == -1 else f"{y}*t")
    if x == 0:
        return ts
    return f"{x}+{ts}".replace("+-", "-")


def sanity(a):
    # printed expansion: q + i q^2 - q^3 - q^4 - 3i q^5
    assert a[1] == (1, 0) and a[2] == (0, 1) and a[3] == (-1, 0)
    assert a[4] == (-1, 0) and a[5] == (0, -3)
    # Weil bound at good primes
    for l in primes_upto(B):
        if l in (2, 13):
            continue
        assert a[l][0] ** 2 + a[l][1] ** 2 <= 4 * l, (l, a[l])
    # a_17 = 3: pins the ratio minimal polynomial at 17
    assert a[17] == (3, 0), a[17]


def write_g26(a, a13):
    lines = [
        "# level-26 weight-2 newform, nebentypus the quadratic character of conductor 13,",
        "# coefficient field Q(i) (t = i), normalized so a_2 = i.",
        "# provenance: a_l for l not dividing 26 by point counting on the elliptic curve",
        "#   y^2 + x*y = x^3 + x^2 + 504*x - 13112 (conductor 338) followed by the quartic",
        "#   twist with psi(2) = i of conductor 13; a_2 from the special fibre at 2;",
        f"#   a_13 = {gstr(a13)} pinned by the Fricke functional-equation scan in tools/make_g26.py;",
        "# composite indices by multiplicativity and the weight-2 Hecke recursion.",
        "level=26 weight=2 charmod=26 field=t^2+1",
        "chargen 7:-1",
    ]
    for n in range(1, B + 1):
        lines.append(f"{n}: {gstr(a[n])}")
    path = os.path.join(DATA, "g26.eigenform")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print("wrote", path)


def write_f11():
    coeffs = eta_oracle_level11(B)
    lines = [
        "# level-11 weight-2 cusp form with rational coefficients (trivial nebentypus mod 11).",
        "# provenance: all coefficients generated by the eta-product oracle",
        "#   q * prod_(n>=1) (1 - q^n)^2 (1 - q^(11n))^2  (rankin.forms.eta_oracle_level11).",
        "level=11 weight=2 charmod=11 field=t",
    ]
    for n, c in enumerate(coeffs, start=1):
        lines.append(f"{n}: {c}")
    path = os.path.join(DATA, "f11.eigenform")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print("wrote", path)


if __name__ == "__main__":
    a13 = find_a13()
    print("selected a_13 =", gstr(a13))
    table = full_table(a13)
    sanity(table)
    write_g26(table, a13)
    write_f11()
