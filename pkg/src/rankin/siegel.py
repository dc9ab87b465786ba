"""Siegel units as exact q-products, their logarithmic derivatives, and the
distribution relations under diagonal matrix actions.

A unit with parameters (alpha, beta) of order dividing L is the product

    q^(B2(<alpha>)/2) * prod_{n>=0} (1 - q^(n+<alpha>) zeta^b)
                      * prod_{n>=1} (1 - q^(n-<alpha>) zeta^(-b))

with zeta = zeta_L, b = L*beta and B2 the second Bernoulli polynomial.  The
leading exponent is pinned by requiring dlog of the parameter-(0, beta) unit
to equal minus the weight-2 divisor-sum series including constant terms.

Only an integral exponent lattice is materialized: the series is built for
g(scale * z), and callers choose ``scale`` so that scale * <alpha> is an
integer.  That is all the distribution relations need.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .cyclo import CyclotomicField
from .eisenstein import EisensteinSpec, eisenstein_qexp
from .poly import QQ
from .qseries import QSeries


def bernoulli2(x: Fraction) -> Fraction:
    """B2(x) = x^2 - x + 1/6."""
    x = QQ(x)
    return x * x - x + QQ(1, 6)


def siegel_scaled(alpha, beta, field: CyclotomicField, prec: int,
                  scale: int = 1) -> QSeries:
    """q-expansion of the Siegel unit with parameters (alpha, beta), evaluated
    at scale*z, over ``field`` = Q(zeta_L) with L divisible by the orders of
    alpha and beta; requires scale * <alpha> integral."""
    alpha = QQ(alpha) % 1
    beta = QQ(beta) % 1
    if alpha == 0 and beta == 0:
        raise ValueError("Siegel unit undefined at zero parameter")
    L = field.L
    if (beta * L) % 1 != 0:
        raise ValueError(f"second parameter not of order dividing {L}")
    b = int(beta * L) % L
    a_frac = alpha
    t = scale * a_frac
    if t % 1 != 0:
        raise ValueError(f"scale {scale} does not clear the fractional exponent {a_frac}")
    t = int(t)
    lead = bernoulli2(a_frac) / 2 * scale
    s = QSeries.one(field, prec + 1)
    # n = 0 factor: (1 - q^(scale*alpha) zeta^b)
    if t == 0:
        s = s * (field.one() - field.zeta(b))
    else:
        s = s.mul_one_minus(field.zeta(b), t)
    n = 1
    while True:
        e1 = scale * n + t
        e2 = scale * n - t
        if e1 > prec and e2 > prec:
            break
        if 0 < e1 <= prec:
            s = s.mul_one_minus(field.zeta(b), e1)
        if 0 < e2 <= prec:
            s = s.mul_one_minus(field.zeta(-b), e2)
        n += 1
    return QSeries(field, lead, s.coeffs, unit=True, normalize=False)


def siegel_scaled_c(alpha, beta, field, prec, scale, c: int) -> QSeries:
    """The integral modification: g(alpha,beta)^(c^2) / g(c*alpha, c*beta)."""
    orders = (QQ(alpha) % 1).denominator, (QQ(beta) % 1).denominator
    if gcd(c, 6 * orders[0] * orders[1]) != 1:
        raise ValueError(f"c = {c} must be coprime to 6 and the parameter orders")
    g = siegel_scaled(alpha, beta, field, prec, scale)
    gc = siegel_scaled(c * QQ(alpha), c * QQ(beta), field, prec, scale)
    return (g ** (c * c)) / gc


def siegel_unit_qexp(alpha, c: int | None = None, prec: int = 50) -> QSeries:
    """The unit with parameter pair (0, alpha) on the standard exponent
    lattice, over Q(zeta_N) with N the order of alpha; with ``c`` given,
    returns the c-modified unit."""
    alpha = QQ(alpha) % 1
    if alpha == 0:
        raise ValueError("Siegel unit undefined at zero parameter")
    N = alpha.denominator
    field = CyclotomicField(N)
    if c is None:
        return siegel_scaled(0, alpha, field, prec, 1)
    return siegel_scaled_c(0, alpha, field, prec, 1, c)


def dlog_matches_weight_two(alpha, prec: int = 200, via_division: bool = False):
    """Check dlog g_(0,alpha) = -F^(2)_alpha as series with constant terms.

    Since the unit series is invertible, the identity is equivalent to the
    division-free form q dg/dq = -F * g, which is what is checked by default;
    ``via_division`` computes dlog literally instead.  Returns (bool, witness).
    """
    alpha = QQ(alpha) % 1
    g = siegel_unit_qexp(alpha, None, prec)
    rhs = -eisenstein_qexp(EisensteinSpec("F", 2, alpha), prec)
    if via_division:
        lhs, rhs2 = g.dlog(), rhs
    else:
        lhs, rhs2 = g.qdq(), (rhs * g).truncate(g.prec)
    ok = lhs == rhs2
    witness = None
    if not ok:
        for n in range(min(lhs.prec, rhs2.prec)):
            if lhs.coeffs[n] != rhs2.coeffs[n]:
                witness = {"exponent": n, "lhs": str(lhs.coeffs[n]),
                           "rhs": str(rhs2.coeffs[n])}
                break
    return ok, witness


_SUPPORTED_SHAPES = "diagonal matrices diag(u, v) with positive integer entries (including scalars)"


def distribution_check(alpha, beta, M, c: int, prec: int = 60):
    """Check the unit-distribution identity for the action of a 2x2 matrix.

    M must be diag(u, v) with positive integer entries; the identity checked
    (after clearing denominators in the exponent lattice by z -> v z) is

        cg_(alpha,beta)(u z) = prod cg_(alpha', beta')(v z)

    over the uv pairs with (v alpha', u beta') = (alpha, beta).  Only
    alpha = 0 is supported (the q-model of the units at the zero cusp).
    Returns (bool, witness).
    """
    alpha = QQ(alpha) % 1
    beta = QQ(beta) % 1
    u, v = _diag_entries(M)
    if alpha != 0:
        raise ValueError("only alpha = 0 is supported in the q-expansion model")
    if beta == 0:
        raise ValueError("Siegel unit undefined at zero parameter")
    N = beta.denominator
    bnum = int(beta * N) % N
    if gcd(c, 6 * u * v * N) != 1:
        raise ValueError(f"c = {c} must be coprime to 6 and the orders involved")
    L = u * N
    field = CyclotomicField(L)
    lhs = siegel_scaled_c(0, beta, field, prec, u, c)
    rhs = None
    for i in range(v):
        for j in range(u):
            factor = siegel_scaled_c(QQ(i, v), QQ(bnum + j * N, u * N),
                                     field, prec, v, c)
            rhs = factor if rhs is None else (rhs * factor).truncate(prec + 1)
    ok = lhs == rhs
    witness = {"factors": u * v, "lead_lhs": str(lhs.lead), "lead_rhs": str(rhs.lead)}
    if not ok:
        if lhs.lead != rhs.lead:
            witness["mismatch"] = "leading exponent"
        else:
            for n in range(min(lhs.prec, rhs.prec)):
                if lhs.coeffs[n] != rhs.coeffs[n]:
                    witness["mismatch"] = {"index": n, "lhs": str(lhs.coeffs[n]),
                                           "rhs": str(rhs.coeffs[n])}
                    break
    return ok, witness


def _diag_entries(M):
    if isinstance(M, int):
        return M, M
    rows = list(M)
    if len(rows) == 2 and all(len(list(r)) == 2 for r in rows):
        (a, b), (cc, d) = [list(r) for r in rows]
        if b == 0 and cc == 0 and a >= 1 and d >= 1:
            return int(a), int(d)
    raise ValueError(f"unsupported matrix shape; supported: {_SUPPORTED_SHAPES}")
