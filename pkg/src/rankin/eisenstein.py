"""Eisenstein q-expansions over cyclotomic fields.

Three families, indexed by a weight k and a cusp parameter alpha = a/N mod 1:

* ``E``      -- coefficient of q^n is sum_{d|n} d^(k-1-j) (n/d)^j
                (zeta^(ad) + (-1)^k zeta^(-ad)), with an optional twist index
                j in [0, k-1] coming from the weight-raising operator;
* ``F``      -- the same with the divisor weights (n/d)^(k-1);
* ``Etilde`` -- weight 2 only, sum_{d|n} d (zeta^(ad) + zeta^(-ad) - 2).

Constant terms are computed exactly: Li_(1-k)(zeta^a) for a nonzero parameter
and -B_k/k for a zero one (and the k = 1 antisymmetrization).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclo import CyclotomicField
from .poly import QQ
from .qseries import QSeries
from .zeta import polylog_negative, zeta_negative

FAMILIES = ("E", "F", "Etilde")


@dataclass(frozen=True)
class EisensteinSpec:
    family: str
    k: int
    alpha: Fraction
    j: int = 0

    def __post_init__(self):
        object.__setattr__(self, "alpha", QQ(self.alpha) % 1)
        validate_spec(self)

    @property
    def conductor(self) -> int:
        return self.alpha.denominator


def validate_spec(spec: EisensteinSpec):
    if spec.family not in FAMILIES:
        raise ValueError(f"unknown family {spec.family!r}; use one of {FAMILIES}")
    if spec.k < 1:
        raise ValueError(f"weight must be >= 1, got {spec.k}")
    if spec.family == "Etilde":
        if spec.k != 2:
            raise ValueError("Etilde family exists only in weight 2")
        if spec.j:
            raise ValueError("Etilde family takes no twist index")
    if spec.family == "F":
        if spec.j:
            raise ValueError("F family takes no twist index")
        if spec.k == 2 and spec.alpha == 0:
            raise ValueError("weight-2 F series requires a nonzero cusp parameter")
    if spec.family == "E":
        if not (0 <= spec.j <= spec.k - 1):
            raise ValueError(
                f"twist index {spec.j} outside the allowed range [0, {spec.k - 1}]")
        if spec.k == 2 and spec.j == 1 and spec.alpha == 0:
            raise ValueError("weight-2 twist-1 E series at parameter 0 is not holomorphic")


def _divisor_sum(n: int, wd: int, wq: int, zeta_pair):
    """sum_{d|n} d^wd (n/d)^wq * zeta_pair(d)."""
    total = None
    d = 1
    while d * d <= n:
        if n % d == 0:
            for dd in {d, n // d}:
                term = zeta_pair(dd) * (QQ(dd) ** wd * QQ(n // dd) ** wq)
                total = term if total is None else total + term
        d += 1
    return total


def eisenstein_qexp(spec: EisensteinSpec, prec: int) -> QSeries:
    """q-expansion with coefficients c_0 .. c_prec in Q(zeta_N)."""
    N = spec.conductor
    F = CyclotomicField(N)
    a = int(spec.alpha * N) % N if N > 1 else 0
    k, j = spec.k, spec.j
    sign = (-1) ** k

    if spec.family == "Etilde":
        def zeta_pair(d):
            return F.zeta(a * d) + F.zeta(-a * d) - 2
        wd, wq = 1, 0
    elif spec.family == "F":
        def zeta_pair(d):
            return F.zeta(a * d) + F.zeta(-a * d) * sign
        wd, wq = 0, k - 1
    else:
        def zeta_pair(d):
            return F.zeta(a * d) + F.zeta(-a * d) * sign
        wd, wq = k - 1 - j, j

    coeffs = [eisenstein_constant(spec, F)]
    for n in range(1, prec + 1):
        coeffs.append(_divisor_sum(n, wd, wq, zeta_pair))
    return QSeries(F, 0, coeffs, normalize=False)


def eisenstein_constant(spec: EisensteinSpec, field=None):
    """Exact constant term of the q-expansion."""
    N = spec.conductor
    F = field if field is not None else CyclotomicField(N)
    a = int(spec.alpha * N) % N if N > 1 else 0
    k, j = spec.k, spec.j

    def zs(kk, sgn=1):
        # sum_{n>=1} zeta^(sgn * a n) n^(kk-1), regularized
        if a % N == 0 or N == 1:
            return F.coerce(zeta_negative(kk)) if kk >= 2 else None
        return polylog_negative(kk - 1, F.zeta(sgn * a))

    if spec.family == "Etilde":
        if a % N == 0 or N == 1:
            return F.zero()
        return zs(2) + QQ(1, 12)

    if k == 1:
        if a % N == 0 or N == 1:
            return F.zero()
        return (zs(1) - zs(1, -1)) * QQ(1, 2)

    if spec.family == "F" or (spec.family == "E" and j == k - 1 and k >= 2):
        return F.coerce(zeta_negative(k))
    if spec.family == "E" and 0 < j < k - 1:
        return F.zero()
    # E family, j = 0, k >= 2
    if a % N == 0 or N == 1:
        return F.coerce(zeta_negative(k))
    return zs(k)


def two_param_eisenstein(alpha, k1: int, k2: int, p: int, prec: int) -> QSeries:
    """The two-parameter family at integer weights (k1, k2): coefficient of
    q^n is sum_{d|n} d^k1 (n/d)^k2 (zeta^(ad) + eps zeta^(-ad)) for p not
    dividing n, and 0 otherwise; eps = -(-1)^(k1+k2).  No constant term."""
    alpha = QQ(alpha) % 1
    N = alpha.denominator
    if p < 2:
        raise ValueError("p must be a prime")
    if N % p == 0:
        raise ValueError(f"p = {p} must not divide the parameter denominator {N}")
    F = CyclotomicField(N)
    a = int(alpha * N) % N if N > 1 else 0
    eps = -((-1) ** (k1 + k2))

    def zeta_pair(d):
        return F.zeta(a * d) + F.zeta(-a * d) * eps

    coeffs = [F.zero()]
    for n in range(1, prec + 1):
        if n % p == 0:
            coeffs.append(F.zero())
        else:
            coeffs.append(_divisor_sum(n, k1, k2, zeta_pair))
    return QSeries(F, 0, coeffs, normalize=False)


def maass_raise(s: QSeries) -> QSeries:
    """Weight-raising on q-expansions: coefficient of q^n is multiplied by n."""
    return s.qdq()


# ---------------------------------------------------------------------------
# Hecke operators on q-expansions
# ---------------------------------------------------------------------------

def _char_value(character, n):
    if character is None:
        return QQ(1)
    if callable(character):
        return character(n)
    return character.value(n)


def _int_series(s: QSeries):
    if s.lead != int(s.lead):
        raise ValueError("Hecke operators need an integral exponent lattice")
    shift = int(s.lead)
    return shift


def hecke_T(s: QSeries, ell: int, weight: int, character, level=None) -> QSeries:
    """a_n -> a_(n ell) + ell^(weight-1) chi(ell) a_(n/ell); output precision
    shrinks to floor(B/ell)."""
    if level is not None and level % ell == 0:
        raise ValueError(
            f"{ell} divides the level {level}; use the U operator instead")
    shift = _int_series(s)
    if shift != 0:
        raise ValueError("T operator implemented for series starting at q^0")
    B = s.prec - 1
    n_out = B // ell
    scale = QQ(ell) ** (weight - 1) * _char_value(character, ell)
    out = []
    for n in range(n_out + 1):
        c = s.coeffs[n * ell]
        if n % ell == 0 and n > 0:
            c = c + s.coeffs[n // ell] * scale
        out.append(c)
    return QSeries(s.ring, 0, out, normalize=False)


def hecke_U(s: QSeries, ell: int) -> QSeries:
    """a_n -> a_(n ell)."""
    if _int_series(s) != 0:
        raise ValueError("U operator implemented for series starting at q^0")
    B = s.prec - 1
    return QSeries(s.ring, 0, [s.coeffs[n * ell] for n in range(B // ell + 1)],
                   normalize=False)


def hecke_V(s: QSeries, ell: int) -> QSeries:
    """q -> q^ell."""
    return s.subst_power(ell)


def diamond(s: QSeries, d: int, character) -> QSeries:
    """Nebentypus action: multiply by chi(d).  diamond(1) is the identity."""
    if d == 1:
        return s
    return s * _char_value(character, d)


def p_depletion(s: QSeries, p: int) -> QSeries:
    """Remove all coefficients with index divisible by p (1 - V_p U_p)."""
    if _int_series(s) != 0:
        raise ValueError("depletion implemented for series starting at q^0")
    out = [c if n % p else s.ring.zero() for n, c in enumerate(s.coeffs)]
    out[0] = s.ring.zero()
    return QSeries(s.ring, 0, out, normalize=False)


def hecke_qexp(s: QSeries, op: str, *, ell=None, d=None, level=None,
               weight=None, character=None) -> QSeries:
    """Dispatcher: op in {'T', 'U', 'V', 'diamond', 'p_depletion'}."""
    if op == "T":
        return hecke_T(s, ell, weight, character, level)
    if op == "U":
        return hecke_U(s, ell)
    if op == "V":
        return hecke_V(s, ell)
    if op == "diamond":
        return diamond(s, d, character)
    if op == "p_depletion":
        return p_depletion(s, ell)
    raise ValueError(f"unknown operator {op!r}")


# ---------------------------------------------------------------------------
# the group-ring-valued twisted form and the universal Gauss sum
# ---------------------------------------------------------------------------

def universal_gauss_sum(n: int, m: int, ring):
    """tau(n, m) = sum over units a mod m of [a]^(-1) zeta_m^(n a), in the
    group ring ``ring`` whose base contains a designated m-th root of unity
    exposed as ``ring.base_zeta(k)``."""
    total = ring.zero()
    for a in ring.units:
        total = total + ring.bracket(pow(a, -1, m) if m > 1 else 1,
                                     ring.base_zeta(n * a))
    return total


class _GmRing:
    """Group ring of (Z/m)^* over Q(zeta_m) tensor the coefficient field of a
    form, with a helper for powers of zeta_m."""

    def __init__(self, m: int, form_ring):
        from .groupring import GroupRing
        from .quotring import QuotRing, join
        from .poly import cyclotomic_polynomial
        phi_m = cyclotomic_polynomial(m)
        deg = len(phi_m) - 1
        lower = [-c for c in phi_m[:-1]]
        zring = QuotRing([("zm", deg, lower)])
        joint, self.embed_z, self.embed_f = join(zring, form_ring, "", "")
        self.joint = joint
        self.m = m
        self.group_ring = GroupRing(m, joint)
        self.units = self.group_ring.units
        self._zm = joint.gen("zm")

    def zero(self):
        return self.group_ring.zero()

    def one(self):
        return self.group_ring.one()

    def coerce(self, x):
        return self.group_ring.coerce(x)

    def bracket(self, a, coeff=None):
        return self.group_ring.bracket(a, coeff)

    def base_zeta(self, k: int):
        return self._zm ** (k % self.m)


def equivariant_gm(form, m: int, prec: int):
    """Group-ring-valued q-expansion with a_n = a_n(form) * tau(n, m).

    Returns (series, ring); the ring is also usable for universal_gauss_sum.
    Built from the defining sum of translates, then cross-checked against the
    Gauss-sum formula coefficient by coefficient.
    """
    ring = _GmRing(m, form.ring)
    coeffs = [ring.zero()]
    for n in range(1, prec + 1):
        an = ring.embed_f(form.a(n))
        # sum over units: [a^-1] * a_n(form) * zeta_m^(n a)
        total = ring.zero()
        for a in ring.units:
            total = total + ring.bracket(pow(a, -1, m) if m > 1 else 1,
                                         an * ring.base_zeta(n * a))
        tau = universal_gauss_sum(n, m, ring)
        assert total == tau * ring.coerce(an), f"Gauss-sum factorization fails at n={n}"
        coeffs.append(total)
    return QSeries(ring, 0, coeffs, normalize=False), ring
