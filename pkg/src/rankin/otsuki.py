"""The weighted-trace identity for denominator-corrected cyclotomic elements.

Elements live in Frac(Q[tau_v : v]) tensor Q(zeta_M), stored as vectors over
the rational-function field in the Q-power basis with one common denominator.

For v dividing M the exponentiation map zeta -> zeta^v is not well defined
Q-linearly on the field (it does not kill the cyclotomic relations), so the
twisted endomorphisms sigma_hat_v (zeta -> zeta^v times tau_v) are realized
on the group-algebra cover Q[Z/M] -- basis all M-th roots of unity, where
they are honest commuting linear maps and F(sigma_hat_v) is invertible
whenever F has constant term 1.  Corrected elements are computed in the
cover and projected to the field; the one-level trace is the orbit sum in
the cover, which intertwines the projection with the Galois trace.  For
l not dividing m the operators at level m act directly on field vectors
(there sigma_hat_l is tau_l times the honest Frobenius).

The verified identity, for families F_l, G_l with constant term 1, l not
dividing m:

    trace down one level of x'_(m l)
        = sigma_l^(-1) F_l(sigma_hat_l)^(-1)
          ((l-1) G_l(sigma_hat_l) - l F_l(sigma_hat_l)) x'_m

with sigma_l^(-1) the plain inverse Frobenius of Q(zeta_m), equivalently
tau_l sigma_hat_l^(-1).  Reading that leading inverse as the hatted operator
inserts a stray tau_l^(-1) and fails; the checker can exhibit this.

All linear algebra is fraction-free (Bareiss/Cramer over the polynomial
ring), so no rational-function normalization is ever needed.
"""

from __future__ import annotations

from .cyclo import euler_phi
from .poly import PolyRing, QQ, cyclotomic_polynomial, poly_divmod


def bareiss_det(mat):
    """Fraction-free determinant of a square MPoly matrix."""
    n = len(mat)
    ring = mat[0][0].ring
    a = [row[:] for row in mat]
    sign = 1
    prev = ring.one()
    for k in range(n - 1):
        if a[k][k].is_zero():
            piv = next((r for r in range(k + 1, n) if not a[r][k].is_zero()), None)
            if piv is None:
                return ring.zero()
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[k][k] * a[i][j] - a[i][k] * a[k][j]
                a[i][j] = num.exact_div(prev)
            a[i][k] = ring.zero()
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def bareiss_solve(mat, rhs):
    """Solve mat * x = rhs over a polynomial ring by Cramer quotients of
    fraction-free determinants; returns (nums, det) with x = nums/det."""
    n = len(rhs)
    det = bareiss_det(mat)
    if det.is_zero():
        raise ZeroDivisionError("singular operator")
    nums = []
    for col in range(n):
        m2 = [[mat[i][j] if j != col else rhs[i] for j in range(n)]
              for i in range(n)]
        nums.append(bareiss_det(m2))
    return nums, det


class CycloCover:
    """The group algebra Q[Z/M] with polynomial tau coefficients; vectors are
    (list of M MPoly, common-denominator MPoly)."""

    def __init__(self, M: int, ring: PolyRing):
        self.M = M
        self.ring = ring

    def basis_vec(self, k: int):
        nums = [self.ring.zero()] * self.M
        nums[k % self.M] = self.ring.one()
        return nums, self.ring.one()

    def sigma_hat(self, v: int, vec):
        nums, den = vec
        t = self.ring.var(f"tau{v}")
        out = [self.ring.zero()] * self.M
        for k, x in enumerate(nums):
            if not x.is_zero():
                j = (k * v) % self.M
                out[j] = out[j] + x * t
        return out, den

    def apply_poly(self, coeffs, v: int, vec):
        nums, den = vec
        out = [x * QQ(coeffs[0]) for x in nums]
        cur = (nums, den)
        for c in coeffs[1:]:
            cur = self.sigma_hat(v, cur)
            if QQ(c):
                out = [a + b * QQ(c) for a, b in zip(out, cur[0])]
        return out, den

    def solve_poly(self, coeffs, v: int, vec):
        """x with F(sigma_hat_v) x = vec; F(0) must be 1.

        The operator permutes the fibres of k -> v k, so the system splits
        into the orbits of multiplication by v on Z/M; each block is solved
        fraction-freely.
        """
        if QQ(coeffs[0]) != 1:
            raise ValueError("polynomial must have constant term 1")
        nums, den = vec
        t = self.ring.var(f"tau{v}")
        # orbit decomposition of the functional graph k -> v k mod M
        remaining = set(range(self.M))
        sol = [None] * self.M
        detprod = self.ring.one()
        while remaining:
            k0 = min(remaining)
            comp = sorted(_component(k0, v, self.M) & remaining)
            remaining -= set(comp)
            idx = {k: i for i, k in enumerate(comp)}
            n = len(comp)
            mat = [[self.ring.zero() for _ in range(n)] for _ in range(n)]
            for i, k in enumerate(comp):
                mat[i][i] = mat[i][i] + 1
            # F(shat) column action: basis e_k -> sum_j coeffs[j] tau^j e_(v^j k)
            for j, c in enumerate(coeffs[1:], start=1):
                if not QQ(c):
                    continue
                tj = t ** j * QQ(c)
                for k in comp:
                    target = (k * pow(v, j, self.M)) % self.M
                    mat[idx[target]][idx[k]] = mat[idx[target]][idx[k]] + tj
            rhs = [nums[k] for k in comp]
            xs, det = bareiss_solve(mat, rhs)
            for k, x in zip(comp, xs):
                sol[k] = (x, det)
            detprod = detprod * det
        # common denominator across blocks
        out = []
        for k in range(self.M):
            x, det = sol[k]
            out.append(x * detprod.exact_div(det))
        return out, den * detprod

    def galois_trace(self, m: int, vec):
        """Orbit sum over the units t = 1 mod m of Z/M."""
        nums, den = vec
        out = [self.ring.zero()] * self.M
        for t in range(1, self.M + 1):
            if _gcd(t, self.M) != 1 or t % m != 1 % m:
                continue
            for k, x in enumerate(nums):
                if not x.is_zero():
                    j = (k * t) % self.M
                    out[j] = out[j] + x
        return out, den


def _component(k0: int, v: int, M: int):
    """Weakly connected component of k0 in the graph k -> v k mod M."""
    comp = {k0}
    frontier = {k0}
    while frontier:
        new = set()
        for k in frontier:
            fwd = (k * v) % M
            if fwd not in comp:
                new.add(fwd)
            for j in range(M):
                if (j * v) % M == k and j not in comp:
                    new.add(j)
        comp |= new
        frontier = new
    return comp


class CycloField:
    """Q(zeta_m) power-basis vectors with polynomial tau coefficients; only
    used with operators at primes NOT dividing m (honest automorphisms)."""

    def __init__(self, m: int, ring: PolyRing):
        self.m = m
        self.phi = euler_phi(m)
        self.modulus = cyclotomic_polynomial(m)
        self.ring = ring

    def power_vector(self, k: int):
        dense = [QQ(0)] * (k % self.m) + [QQ(1)]
        _, r = poly_divmod(dense, self.modulus)
        return list(r) + [QQ(0)] * (self.phi - len(r))

    def frobenius_matrix(self, t: int):
        cols = [self.power_vector(k * t) for k in range(self.phi)]
        return [[cols[j][i] for j in range(self.phi)] for i in range(self.phi)]

    def apply_rational_matrix(self, mat, vec):
        nums, den = vec
        out = []
        for i in range(self.phi):
            acc = self.ring.zero()
            for j in range(self.phi):
                if mat[i][j]:
                    acc = acc + nums[j] * mat[i][j]
            out.append(acc)
        return out, den

    def sigma_hat(self, v: int, vec):
        if _gcd(v, self.m) != 1:
            raise ValueError("field-level twisted Frobenius needs v prime to m")
        nums, den = self.apply_rational_matrix(self.frobenius_matrix(v % self.m), vec)
        t = self.ring.var(f"tau{v}")
        return [x * t for x in nums], den

    def apply_poly(self, coeffs, v: int, vec):
        nums, den = vec
        out = [x * QQ(coeffs[0]) for x in nums]
        cur = (nums, den)
        for c in coeffs[1:]:
            cur = self.sigma_hat(v, cur)
            if QQ(c):
                out = [a + b * QQ(c) for a, b in zip(out, cur[0])]
        return out, den

    def solve_poly(self, coeffs, v: int, vec):
        if QQ(coeffs[0]) != 1:
            raise ValueError("polynomial must have constant term 1")
        nums, den = vec
        n = self.phi
        frob = self.frobenius_matrix(v % self.m)
        t = self.ring.var(f"tau{v}")
        frob_t = [[self.ring.const(frob[i][j]) * t for j in range(n)]
                  for i in range(n)]
        acc = [[self.ring.one() if i == j else self.ring.zero()
                for j in range(n)] for i in range(n)]
        power = [[self.ring.one() if i == j else self.ring.zero()
                  for j in range(n)] for i in range(n)]
        for c in coeffs[1:]:
            power = _mat_mul(frob_t, power)
            if QQ(c):
                for i in range(n):
                    for j in range(n):
                        acc[i][j] = acc[i][j] + power[i][j] * QQ(c)
        xs, det = bareiss_solve(acc, nums)
        return xs, den * det


def _mat_mul(a, b):
    n = len(a)
    ring = a[0][0].ring
    out = [[ring.zero() for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            if a[i][k].is_zero():
                continue
            for j in range(n):
                if not b[k][j].is_zero():
                    out[i][j] = out[i][j] + a[i][k] * b[k][j]
    return out


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _prime_factors(n: int):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def project_to_field(cover: CycloCover, m: int, vec):
    """Project a cover vector to Q(zeta_m) power-basis coordinates via
    e_k -> zeta_M^k, expressed in the zeta_m basis (m | M)."""
    M = cover.M
    field = CycloField(m, cover.ring)
    phiM = euler_phi(M)
    modM = cyclotomic_polynomial(M)
    nums, den = vec
    big = [cover.ring.zero()] * phiM
    for k, x in enumerate(nums):
        if x.is_zero():
            continue
        dense = [QQ(0)] * k + [QQ(1)]
        _, r = poly_divmod(dense, modM)
        for i, c in enumerate(r):
            if c:
                big[i] = big[i] + x * c
    # express in the zeta_m power basis inside Q(zeta_M)
    step = M // m
    cols = []
    for k in range(field.phi):
        dense = [QQ(0)] * ((k * step) % M) + [QQ(1)]
        _, r = poly_divmod(dense, modM)
        cols.append(list(r) + [QQ(0)] * (phiM - len(r)))
    coords = _rational_coordinates(cols, big)
    return coords, den


def _rational_coordinates(cols, total):
    n = len(total)
    d = len(cols)
    a = [[QQ(cols[j][i]) for j in range(d)] for i in range(n)]
    work = list(total)
    pivots = []
    row = 0
    for col in range(d):
        piv = next((r for r in range(row, n) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        work[row], work[piv] = work[piv], work[row]
        pv = a[row][col]
        a[row] = [x / pv for x in a[row]]
        work[row] = work[row] * (1 / pv)
        for r in range(n):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
                work[r] = work[r] - work[row] * f
        pivots.append(col)
        row += 1
    for r in range(row, n):
        if not work[r].is_zero():
            raise ValueError("vector does not lie in the subfield")
    ring = total[0].ring
    sol = [ring.zero()] * d
    for r, col in enumerate(pivots):
        sol[col] = work[r]
    return sol


def corrected_element_cover(cover: CycloCover, m: int, families: dict):
    """x'_m upstairs: product over primes v | m of F_v^(-1) G_v applied to the
    class of zeta_m = e_(M/m)."""
    vec = cover.basis_vec(cover.M // m)
    for v in _prime_factors(m):
        F, G = families[v]
        vec = cover.apply_poly(G, v, vec)
        vec = cover.solve_poly(F, v, vec)
    return vec


def corrected_element(m: int, families: dict, ring: PolyRing):
    """x'_m as a field vector: cover computation projected to Q(zeta_m)."""
    cover = CycloCover(m, ring)
    return project_to_field(cover, m, corrected_element_cover(cover, m, families))


def otsuki_trace_check(m: int, ell: int, families: dict,
                       literal_reading: bool = False):
    """Verify the one-level weighted-trace identity for x'_m.

    ``families`` maps each prime v | m*ell to (F_v, G_v) as rational
    coefficient lists with constant term 1; ell must not divide m and
    phi(m*ell) must be at most 16.  Returns (bool, witness).
    """
    if ell in _prime_factors(m):
        raise ValueError("ell must not divide m")
    M = m * ell
    if euler_phi(M) > 16:
        raise ValueError("phi(m*ell) must be at most 16")
    for v in _prime_factors(M):
        F, G = families[v]
        if QQ(F[0]) != 1 or QQ(G[0]) != 1:
            raise ValueError("family polynomials must have constant term 1")
    ring = PolyRing(tuple(f"tau{v}" for v in sorted(_prime_factors(M))))
    cover = CycloCover(M, ring)
    x_big = corrected_element_cover(cover, M, families)
    lhs = project_to_field(cover, m, cover.galois_trace(m, x_big))
    # right side: field-level operators at level m applied to x'_m
    field = CycloField(m, ring)
    x_small = corrected_element(m, families, ring)
    F, G = families[ell]
    width = max(len(G), len(F))
    diff = [QQ(ell - 1) * (G[i] if i < len(G) else QQ(0))
            - QQ(ell) * (F[i] if i < len(F) else QQ(0)) for i in range(width)]
    rhs = field.apply_poly(diff, ell, x_small)
    rhs = field.solve_poly(F, ell, rhs)
    # plain inverse Frobenius (= tau_ell * hatted inverse)
    ell_inv = pow(ell, -1, m) if m > 1 else 0
    rhs = field.apply_rational_matrix(field.frobenius_matrix(ell_inv), rhs)
    if literal_reading:
        # hatted inverse instead: multiply the left side by tau_ell
        lhs = ([x * ring.var(f"tau{ell}") for x in lhs[0]], lhs[1])
    ok = _vec_equal(lhs, rhs)
    witness = None
    if not ok:
        ln, ld = lhs
        rn, rd = rhs
        for i in range(len(ln)):
            if ln[i] * rd != rn[i] * ld:
                witness = {"basis_index": i,
                           "lhs": f"({ln[i]}) / ({ld})",
                           "rhs": f"({rn[i]}) / ({rd})"}
                break
    return ok, witness


def _vec_equal(x, y):
    xn, xd = x
    yn, yd = y
    return all(a * yd == b * xd for a, b in zip(xn, yn))
