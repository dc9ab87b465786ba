"""Double cosets of congruence subgroups and Iwahori double-coset invariants.

Congruence subgroups are materialized as explicit subsets of SL2(Z/L); for a
coset computation with a determinant-n matrix everything happens modulo
M = L*n, where both the integrality and the reduction of conjugates are
decided.  No group theory beyond enumeration is trusted.

The Iwahori subgroup is the lower-triangular-mod-p one (upper-right entry
divisible by p); its double cosets in SL2(Q_p) are detected by the four
lattice-pair invariants of the standard chain, computed with exact rational
arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import gcd

from .poly import QQ

Mat = tuple  # (a, b, c, d)


def mat_mul(x: Mat, y: Mat) -> Mat:
    return (x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3])


def mat_det(x: Mat):
    return x[0] * x[3] - x[1] * x[2]


def mat_adj(x: Mat) -> Mat:
    return (x[3], -x[1], -x[2], x[0])


def mat_mod(x: Mat, m: int) -> Mat:
    return tuple(v % m for v in x)


ENUMERATION_BOUND = 10 ** 6  # largest |SL2(Z/M)| we are willing to materialize


def sl2_order(m: int) -> int:
    n = m ** 3
    mm, p = m, 2
    while p * p <= mm:
        if mm % p == 0:
            n = n // (p * p) * (p * p - 1)
            while mm % p == 0:
                mm //= p
        p += 1
    if mm > 1:
        n = n // (mm * mm) * (mm * mm - 1)
    return n


def _factor(m: int):
    out = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1
    if m > 1:
        out.append((m, 1))
    return out


def _sl2_part(q: int, condition=None):
    """All of SL2(Z/q) (q a prime power), optionally filtered."""
    out = []
    for a, b, c, d in product(range(q), repeat=4):
        if (a * d - b * c) % q == 1 % q:
            g = (a, b, c, d)
            if condition is None or condition(g):
                out.append(g)
    return out


class CongSubgroup:
    """A subgroup of SL2(Z/L) given by its element list.

    Membership of an integral matrix means determinant 1 and reduction mod L
    in the list.  Construction verifies closure under product and inverse.
    """

    def __init__(self, level: int, elements, check: bool = True):
        self.level = level
        self.elements = frozenset(mat_mod(g, level) for g in elements)
        if check:
            self._closure_certificate()

    def _closure_certificate(self):
        L = self.level
        eye = mat_mod((1, 0, 0, 1), L)
        if eye not in self.elements:
            raise ValueError("subgroup must contain the identity")
        for g in self.elements:
            if mat_mod(mat_adj(g), L) not in self.elements:
                raise ValueError(f"not closed under inverse at {g}")
        sample = list(self.elements)
        for g in sample:
            for h in sample:
                if mat_mod(mat_mul(g, h), L) not in self.elements:
                    raise ValueError(f"not closed under product at {g}, {h}")

    def __len__(self):
        return len(self.elements)

    def __contains__(self, g: Mat) -> bool:
        if mat_det(g) != 1:
            return False
        return mat_mod(g, self.level) in self.elements

    def contains_mod(self, g: Mat) -> bool:
        return mat_mod(g, self.level) in self.elements

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_condition(cls, level: int, condition):
        if sl2_order(level) > ENUMERATION_BOUND:
            raise ValueError(
                f"|SL2(Z/{level})| = {sl2_order(level)} exceeds the enumeration "
                f"bound {ENUMERATION_BOUND}")
        parts = _factor(level)
        per_prime = []
        for q, e in parts:
            per_prime.append(_sl2_part(q ** e))
        elements = []
        for combo in product(*per_prime):
            g = _crt_mats(combo, [q ** e for q, e in parts], level)
            if condition(g):
                elements.append(g)
        return cls(level, elements, check=False)

    @classmethod
    def gamma1(cls, N: int):
        return cls.from_condition(
            N, lambda g: g[0] % N == 1 and g[3] % N == 1 and g[2] % N == 0)

    @classmethod
    def gamma0(cls, N: int):
        return cls.from_condition(N, lambda g: g[2] % N == 0)

    @classmethod
    def gamma_upper0(cls, N: int):
        return cls.from_condition(N, lambda g: g[1] % N == 0)

    @classmethod
    def sl2(cls, N: int = 1):
        return cls.from_condition(N, lambda g: True)

    def to_level(self, M: int) -> "CongSubgroup":
        """The preimage in SL2(Z/M) for L | M (strong approximation)."""
        if M % self.level != 0:
            raise ValueError("target level must be a multiple of the level")
        if sl2_order(M) > ENUMERATION_BOUND:
            raise ValueError(
                f"|SL2(Z/{M})| = {sl2_order(M)} exceeds the enumeration bound "
                f"{ENUMERATION_BOUND}; required bound: reduce L*det^2")
        return CongSubgroup.from_condition(
            M, lambda g: mat_mod(g, self.level) in self.elements)

    def intersect(self, other: "CongSubgroup") -> "CongSubgroup":
        L = self.level * other.level // gcd(self.level, other.level)
        return CongSubgroup.from_condition(
            L, lambda g: (mat_mod(g, self.level) in self.elements and
                          mat_mod(g, other.level) in other.elements))


def _crt_mats(mats, moduli, M):
    out = []
    for i in range(4):
        pairs = [(m[i], q) for m, q in zip(mats, moduli)]
        out.append(_crt_ints(pairs) % M)
    return tuple(out)


def _crt_ints(pairs):
    x, m = 0, 1
    for r, mod in pairs:
        g = pow(m, -1, mod)
        x = x + m * ((g * (r - x)) % mod)
        m *= mod
    return x


def lift_sl2(g: Mat, M: int) -> Mat:
    """An integral SL2(Z) lift of a matrix in SL2(Z/M)."""
    a, b, c, d = mat_mod(g, M)
    # make the bottom row coprime
    cc, dd = c, d
    if cc == 0 and dd == 0:
        raise ValueError("bottom row is zero mod M; determinant not 1")
    if cc == 0:
        cc = M
    t = 0
    while gcd(cc, dd + t * M) != 1:
        t += 1
        if t > 4 * M:
            raise AssertionError("no coprime lift found")
    dd = dd + t * M
    # complete to determinant 1: x*dd - y*cc = 1
    x, y = _xgcd_pair(dd, cc)
    # adjust the top row into the right congruence class:
    # (a, b) = (x, y) + s*(cc, dd) mod M for some s
    s = next((s for s in range(M)
              if (x + s * cc - a) % M == 0 and (y + s * dd - b) % M == 0), None)
    if s is None:
        raise AssertionError("no top-row adjustment found (input not in SL2?)")
    lift = (x + s * cc, y + s * dd, cc, dd)
    assert mat_det(lift) == 1 and mat_mod(lift, M) == (a, b, c % M, d % M)
    return lift


def _xgcd_pair(dd: int, cc: int):
    """x, y with x*dd - y*cc = 1."""
    old_r, r = dd, cc
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r == -1:
        old_s, old_t = -old_s, -old_t
    elif old_r != 1:
        raise ValueError("not coprime")
    return old_s, -old_t


@dataclass(frozen=True)
class CosetMatrix:
    entries: Mat

    def __post_init__(self):
        if mat_det(self.entries) <= 0:
            raise ValueError("coset matrices must have positive determinant")

    @property
    def det(self):
        return mat_det(self.entries)

    def __mul__(self, other):
        return CosetMatrix(mat_mul(self.entries, other.entries))

    def __str__(self):
        a, b, c, d = self.entries
        return f"[{a} {b}; {c} {d}]"

    __repr__ = __str__


def same_right_coset(gamma: CongSubgroup, x: Mat, y: Mat) -> bool:
    """Gamma x = Gamma y for integral matrices of equal determinant."""
    n = mat_det(y)
    if mat_det(x) != n:
        return False
    z = mat_mul(x, mat_adj(y))
    if any(v % n for v in z):
        return False
    z = tuple(v // n for v in z)
    return z in gamma


def coset_reps(gamma: CongSubgroup, alpha: CosetMatrix):
    """Right-coset representatives delta_i with Gamma alpha Gamma equal to the
    disjoint union of the Gamma delta_i."""
    n = alpha.det
    L = gamma.level
    M = L * n
    big = gamma.to_level(M)
    adj = mat_adj(alpha.entries)
    a = alpha.entries

    def in_conjugated(gbar: Mat) -> bool:
        # alpha gbar alpha^-1 integral and in Gamma (mod L)
        w = mat_mul(mat_mul(a, gbar), adj)
        if any(v % n for v in w):
            return False
        w = tuple((v // n) % L for v in w)
        return w in gamma.elements

    H = [g for g in big.elements if in_conjugated(g)]
    # orbit-mark right cosets H\Gamma_M
    seen = set()
    reps_mod = []
    for g in sorted(big.elements):
        if g in seen:
            continue
        reps_mod.append(g)
        for h in H:
            seen.add(mat_mod(mat_mul(h, g), M))
    reps = [CosetMatrix(mat_mul(a, lift_sl2(g, M))) for g in reps_mod]
    # sanity: pairwise inequivalent
    for i in range(len(reps)):
        for j in range(i + 1, len(reps)):
            assert not same_right_coset(gamma, reps[i].entries, reps[j].entries)
    return reps


def double_coset_multiply(gamma: CongSubgroup, alpha: CosetMatrix,
                          beta: CosetMatrix):
    """Product of two double cosets in the abstract algebra.

    Returns a list of (representative, multiplicity, degree) triples, one per
    constituent double coset; multiplicity counting is verified to be constant
    across the right cosets of each constituent.
    """
    da = coset_reps(gamma, alpha)
    db = coset_reps(gamma, beta)
    products = [mat_mul(x.entries, y.entries) for x in da for y in db]
    # group the products into right cosets
    groups = []  # (representative matrix, count)
    for prod_mat in products:
        for k, (rep, cnt) in enumerate(groups):
            if same_right_coset(gamma, prod_mat, rep):
                groups[k] = (rep, cnt + 1)
                break
        else:
            groups.append((prod_mat, 1))
    # group the right cosets into double cosets
    result = []
    remaining = list(groups)
    while remaining:
        rep, cnt = remaining[0]
        cell = coset_reps(gamma, CosetMatrix(rep))
        inside, outside = [], []
        for rep2, cnt2 in remaining:
            if any(same_right_coset(gamma, rep2, c.entries) for c in cell):
                inside.append((rep2, cnt2))
            else:
                outside.append((rep2, cnt2))
        counts = {c for _, c in inside}
        assert len(counts) == 1, "multiplicity not constant on a double coset"
        assert len(inside) == len(cell), \
            "product does not cover a full double coset"
        canonical = min(c.entries for c in cell)
        result.append((CosetMatrix(canonical), counts.pop(), len(cell)))
        remaining = outside
    result.sort(key=lambda t: t[0].entries)
    return result


def same_double_coset(gamma: CongSubgroup, x: CosetMatrix, y: CosetMatrix) -> bool:
    if x.det != y.det:
        return False
    cell = coset_reps(gamma, x)
    return any(same_right_coset(gamma, y.entries, c.entries) for c in cell)


def diamond_matrix(d: int, N: int) -> CosetMatrix:
    """An SL2(Z) matrix congruent to diag(d^-1, d) mod N."""
    dinv = pow(d, -1, N)
    g = lift_sl2((dinv % N, 0, 0, d % N), N)
    return CosetMatrix(g)


def t_prime_square_identity(N: int, p: int):
    """Decompose (T'_p)^2 = S'_p + (p+1) <p^-1> R_p by multiplicity counting.

    T'_p is the double coset of diag(p, 1), S'_p of diag(p^2, 1) and R_p of
    diag(p, p).  Returns a report dict; report['holds'] is the verdict and
    report['diamond'] records which diamond twist the degree-1 constituent
    realizes (it must be the one congruent to diag(p, p^-1}) mod N).
    """
    if N % p == 0:
        raise ValueError("p must not divide the level")
    gamma = CongSubgroup.gamma1(N)
    tp = CosetMatrix((p, 0, 0, 1))
    prod = double_coset_multiply(gamma, tp, tp)
    report = {"level": N, "prime": p, "constituents": []}
    sp = CosetMatrix((p * p, 0, 0, 1))
    # candidate degree-1 cells: p * (matrix congruent to diag(d, d^-1) mod N)
    sigma_fwd = diamond_matrix(pow(p, -1, N), N)   # congruent to diag(p, p^-1)
    sigma_bwd = diamond_matrix(p % N, N)           # congruent to diag(p^-1, p)
    cand_fwd = CosetMatrix(tuple(p * v for v in sigma_fwd.entries))
    cand_bwd = CosetMatrix(tuple(p * v for v in sigma_bwd.entries))
    found_s = found_diamond = None
    diamond_kind = None
    for rep, mult, degree in prod:
        entry = {"rep": str(rep), "multiplicity": mult, "degree": degree}
        if same_double_coset(gamma, rep, sp):
            entry["cell"] = "S'"
            found_s = mult
        elif same_double_coset(gamma, rep, cand_fwd):
            entry["cell"] = "<p^-1> R_p"
            found_diamond = mult
            diamond_kind = "diag(p, p^-1) mod N"
        elif same_double_coset(gamma, rep, cand_bwd):
            entry["cell"] = "<p> R_p"
            found_diamond = mult
            diamond_kind = "diag(p^-1, p) mod N"
        else:
            entry["cell"] = "unexpected"
        report["constituents"].append(entry)
    report["diamond"] = diamond_kind
    report["holds"] = (found_s == 1 and found_diamond == p + 1
                       and len(prod) == 2
                       and diamond_kind == "diag(p, p^-1) mod N")
    report["holds_any_diamond"] = (found_s == 1 and found_diamond == p + 1
                                   and len(prod) == 2)
    return report


# ---------------------------------------------------------------------------
# Iwahori double cosets in SL2(Q_p)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class IwahoriCell:
    kind: str       # "diagonal" | "antidiagonal"
    exponent: int

    def representative(self, p: int):
        j = self.exponent
        pj = QQ(p) ** j
        if self.kind == "diagonal":
            return (pj, QQ(0), QQ(0), 1 / pj)
        return (QQ(0), -1 / pj, pj, QQ(0))

    def __str__(self):
        return f"{self.kind}({self.exponent})"


def _val(x: Fraction, p: int):
    """p-adic valuation of a rational (None for 0)."""
    x = QQ(x)
    if x == 0:
        return None
    v = 0
    n = x.numerator
    while n % p == 0:
        n //= p
        v += 1
    d = x.denominator
    while d % p == 0:
        d //= p
        v -= 1
    return v


def _pair_invariant(g, p: int):
    """The four lattice-pair invariants of g against the standard chain.

    For basis matrices B_i in {identity, diag(p, 1)} the invariant e(i, j) is
    the minimal valuation of the entries of B_i^-1 g B_j; the quadruple
    separates the Iwahori double cosets.
    """
    a, b, c, d = (QQ(v) for v in g)
    if a * d - b * c != 1:
        raise ValueError("matrix must lie in SL2(Q)")

    def emin(mat):
        vals = [_val(x, p) for x in mat if x != 0]
        return min(vals)

    g00 = (a, b, c, d)
    g01 = (a * p, b, c * p, d)
    g10 = (a / p, b / p, c, d)
    g11 = (a, b / p, c * p, d)
    return tuple(emin(m) for m in (g00, g11, g01, g10))


def iwahori_invariant(g, p: int, search_bound: int | None = None) -> IwahoriCell:
    """The Iwahori double-coset invariant of g in SL2(Q_p), found by matching
    the lattice-pair invariants against the cell representatives."""
    inv = _pair_invariant(g, p)
    if search_bound is None:
        vals = [abs(_val(QQ(x), p)) for x in g if QQ(x) != 0]
        search_bound = 2 * max(vals) + 2
    for j in range(-search_bound, search_bound + 1):
        for kind in ("diagonal", "antidiagonal"):
            cell = IwahoriCell(kind, j)
            if _pair_invariant(cell.representative(p), p) == inv:
                return cell
    raise AssertionError("no Iwahori cell matched; reduction bound exceeded")


def iwahori_index(g, p: int, mutate: bool = False) -> int:
    """[U : U cap g^-1 U g] for the lower-triangular-mod-p Iwahori U.

    Computed on the cell representative: conjugating the two unipotent
    one-parameter subgroups locates the thresholds r (upper entry) and s
    (lower entry); the index is p^(r + s - 1).
    """
    cell = iwahori_invariant(g, p)
    rep = cell.representative(p)

    def conj(m):
        ia, ib, ic, id_ = rep
        # rep * m * rep^-1 with rep in SL2: inverse = adjugate
        inv = (id_, -ib, -ic, ia)
        return mat_mul(mat_mul(rep, m), inv)

    # upper unipotent (1, t; 0, 1): in U iff v(t) >= 1
    up = conj((QQ(1), QQ(1), QQ(0), QQ(1)))
    # lower unipotent (1, 0; t, 1): in U iff v(t) >= 0
    low = conj((QQ(1), QQ(0), QQ(1), QQ(1)))

    def threshold(image, base_threshold):
        # image of the unipotent at t = 1; entries linear in t
        if image[1] != 0:
            shift = _val(image[1], p)
            return max(base_threshold, 1 - shift)
        shift = _val(image[2], p)
        return max(base_threshold, 0 - shift)

    r = threshold(up, 1)
    s = threshold(low, 0)
    if mutate:
        return p ** (r + s)
    return p ** (r + s - 1)
