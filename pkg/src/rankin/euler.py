"""Local factors of the convolution of two eigenforms: the good-prime
degree-4 polynomial, numeric Weil bounds, the ordinary interpolation factors
with their functional-equation symmetry, and the bad-level Dirichlet
correction polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .poly import MPoly, PolyRing, QQ, RatFunc
from .quotring import QuotRing, join


class BadPrimeError(ValueError):
    pass


@dataclass
class EulerFactor:
    """1 + c1 X + ... + c_d X^d with coefficients in an exact ring."""

    coefficients: list
    ring: object = None

    def __post_init__(self):
        c0 = self.coefficients[0]
        if not (c0 == 1 or (hasattr(c0, "is_zero") and (c0 - 1).is_zero())):
            raise ValueError("constant term of a local factor must be 1")

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __eq__(self, other):
        if not isinstance(other, EulerFactor):
            return NotImplemented
        n = max(len(self.coefficients), len(other.coefficients))
        for i in range(n):
            a = self.coefficients[i] if i < len(self.coefficients) else 0
            b = other.coefficients[i] if i < len(other.coefficients) else 0
            if not (a == b):
                return False
        return True

    def __call__(self, x):
        total = None
        xp = None
        for i, c in enumerate(self.coefficients):
            term = c if i == 0 else (c * xp)
            total = term if total is None else total + term
            xp = x if xp is None else xp * x
        return total

    def __str__(self):
        parts = ["1"]
        for i, c in enumerate(self.coefficients[1:], start=1):
            parts.append(f"({c})*X^{i}")
        return " + ".join(parts)


def hecke_polynomial(form, p: int):
    """X^2 - a_p X + p^(k-1) eps(p), as [c0, c1, c2] over the coefficient
    ring of the form; rejects p dividing the level."""
    if form.level % p == 0:
        raise BadPrimeError(
            f"p = {p} divides the level {form.level}: the quadratic is not "
            "defined (that slot carries a U-eigenvalue, not a factor)")
    ap = form.a(p)
    eps = form.char_value(p)
    c0 = eps * QQ(p) ** (form.weight - 1)
    return [c0, -ap, form.ring.one()]


def joint_coefficient_ring(f, g):
    """The tensor of the two coefficient rings with transport maps."""
    joint, mf, mg = join(f.ring, g.ring, "f_", "g_")
    return joint, mf, mg


def rankin_euler_factor(f, g, p: int) -> EulerFactor:
    """The degree-4 good-prime factor of the pair, over the joint ring:

        1 - A B X + (p^(l-1) A^2 eg + p^(k-1) ef B^2 - 2 p^(k+l-2) ef eg) X^2
          - p^(k+l-2) ef A eg B X^3 + p^(2k+2l-4) ef^2 eg^2 X^4

    with A = a_p(f), B = a_p(g), ef = eps_f(p), eg = eps_g(p).
    """
    if (f.level * g.level) % p == 0:
        raise BadPrimeError(
            f"p = {p} divides the level of one of the forms; bad factors must "
            "be supplied by the caller")
    joint, mf, mg = joint_coefficient_ring(f, g)
    k, l = f.weight, g.weight
    A, B = mf(f.a(p)), mg(g.a(p))
    ef, eg = mf(f.char_value(p)), mg(g.char_value(p))
    pk, pl, pkl = QQ(p) ** (k - 1), QQ(p) ** (l - 1), QQ(p) ** (k + l - 2)
    coeffs = [joint.one(),
              -(A * B),
              A * A * eg * pl + ef * B * B * pk - ef * eg * (2 * pkl),
              -(ef * A * eg * B) * pkl,
              (ef * ef * eg * eg) * pkl ** 2]
    fac = EulerFactor(coeffs, joint)
    assert _factored_form_agrees(f, g, p, fac), "dual-path factor check failed"
    return fac


def splitting_ring(f, g, p: int):
    """Extend the joint coefficient ring by the two Hecke-polynomial roots
    rx, ry; returns (ring, lift, rx, ry, A, B) with A = a_p(f), B = a_p(g)
    transported, so the conjugate roots are A - rx and B - ry."""
    joint, mf, mg = joint_coefficient_ring(f, g)
    k, l = f.weight, g.weight
    A, B = mf(f.a(p)), mg(g.a(p))
    ef, eg = mf(f.char_value(p)), mg(g.char_value(p))

    rel_rx = {e + (1, 0): c for e, c in A.rep.terms.items()}
    for e, c in (ef * (-(QQ(p) ** (k - 1)))).rep.terms.items():
        rel_rx[e + (0, 0)] = rel_rx.get(e + (0, 0), QQ(0)) + c
    rel_ry = {e + (0, 1): c for e, c in B.rep.terms.items()}
    for e, c in (eg * (-(QQ(p) ** (l - 1)))).rep.terms.items():
        rel_ry[e + (0, 0)] = rel_ry.get(e + (0, 0), QQ(0)) + c
    gens = [(n, joint.degrees[n],
             {e + (0, 0): c for e, c in joint.rewrites[n].terms.items()})
            for n in joint.gen_names]
    gens.append(("rx", 2, {e: c for e, c in rel_rx.items() if c}))
    gens.append(("ry", 2, {e: c for e, c in rel_ry.items() if c}))
    # reorder exponents: existing gens keep positions, rx/ry appended
    ext = QuotRing(gens)

    def lift(x):
        return ext.from_poly(ext.poly_ring.from_terms(
            {e + (0, 0): c for e, c in x.rep.terms.items()}))

    return ext, lift, ext.gen("rx"), ext.gen("ry"), lift(A), lift(B)


def _factored_form_agrees(f, g, p, fac):
    """Recompute the factor as the product of (1 - root_f root_g X) over the
    four root pairs in the splitting ring of the two quadratics."""
    ext, lift, rx, ry, A, B = splitting_ring(f, g, p)
    prod = [ext.one()]
    for rf in (rx, A - rx):
        for rg in (ry, B - ry):
            lam = rf * rg
            new = [ext.zero()] * (len(prod) + 1)
            for i, c in enumerate(prod):
                new[i] = new[i] + c
                new[i + 1] = new[i + 1] - c * lam
            prod = new
    for c_expanded, c_direct in zip(prod, fac.coefficients):
        if not (c_expanded == lift(c_direct)):
            return False
    return True


def weil_check(factor: EulerFactor, p: int, k: int, l: int, tol: float = 1e-9) -> bool:
    """All reciprocal roots satisfy |lambda| <= p^((k+l-2)/2) (1+tol), at every
    complex embedding of the coefficient ring.  Embeddings and roots are both
    computed at 50-digit working precision so the default tolerance is
    meaningful."""
    import mpmath
    ring = factor.ring
    with mpmath.workdps(50):
        bound = mpmath.mpf(p) ** (mpmath.mpf(k + l - 2) / 2) * (1 + mpmath.mpf(tol))
        embeddings = _mp_embeddings(ring) if ring is not None else [{}]
        for emb in embeddings:
            coeffs = []
            for c in factor.coefficients:
                if isinstance(c, (int, Fraction)):
                    coeffs.append(mpmath.mpc(QQ(c).numerator) / QQ(c).denominator)
                else:
                    coeffs.append(_embed(c, emb))
            # reciprocal roots: the ascending coefficient list read
            # leading-first is X^d P(1/X), monic since the constant term is 1
            while len(coeffs) > 1 and abs(coeffs[-1]) < mpmath.mpf(10) ** -40:
                coeffs.pop()
            d = len(coeffs) - 1
            if d == 0:
                continue
            comp = mpmath.zeros(d)
            for i in range(1, d):
                comp[i, i - 1] = 1
            for i in range(d):
                comp[i, d - 1] = -coeffs[d - i]
            lams, _ = mpmath.eig(comp)
            if any(abs(lam) > bound for lam in lams):
                return False
    return True


def _mp_embeddings(ring):
    """All homomorphisms of a QuotRing into C at mpmath working precision."""
    import mpmath
    embeddings = [{}]
    for name in ring.gen_names:
        d = ring.degrees[name]
        low = ring.rewrites[name]
        new = []
        for emb in embeddings:
            coeffs = [mpmath.mpc(0)] * (d + 1)
            coeffs[d] = mpmath.mpc(1)
            for kk, cf in low.coefficients_in(name).items():
                coeffs[kk] -= _embed_mpoly_mp(cf, emb)
            roots = mpmath.polyroots(list(reversed(coeffs)), maxsteps=200,
                                     extraprec=80)
            for r in roots:
                e2 = dict(emb)
                e2[name] = r
                new.append(e2)
        embeddings = new
    return embeddings


def _embed_mpoly_mp(p: MPoly, emb):
    import mpmath
    total = mpmath.mpc(0)
    for e, c in p.terms.items():
        t = mpmath.mpc(c.numerator) / c.denominator
        for i, k in enumerate(e):
            if k:
                t *= emb[p.ring.names[i]] ** k
        total += t
    return total


def _embed(c, emb):
    """Embed a QuotElt with the generator images in ``emb``."""
    import mpmath
    total = mpmath.mpc(0)
    for e, coeff in c.rep.terms.items():
        t = mpmath.mpc(coeff.numerator) / coeff.denominator
        for name, kk in zip(c.ring.gen_names, e):
            if kk:
                t *= emb[name] ** kk
        total += t
    return total


# ---------------------------------------------------------------------------
# interpolation factors and the functional-equation symmetry
# ---------------------------------------------------------------------------

SYM_RING = PolyRing(("al", "be", "ga", "de", "p"), invertible={"p"})
_AL, _BE, _GA, _DE, _P = SYM_RING.vars()


@dataclass
class InterpFactors:
    modification: RatFunc          # 1 - beta/(p alpha)
    modification_star: RatFunc     # 1 - beta/alpha
    convolution: RatFunc           # four-binomial factor at twist j

    def as_tuple(self):
        return self.modification, self.modification_star, self.convolution


def _binom(num: MPoly, den: MPoly) -> RatFunc:
    return RatFunc(den - num, den)


def interpolation_factors(j: int, k: int = 2, l: int = 2) -> InterpFactors:
    """The three ordinary interpolation factors, symbolic in the four Hecke
    roots; j enters as an integer exponent of p."""
    al, be, ga, de, p = _AL, _BE, _GA, _DE, _P

    def pw(n: int) -> RatFunc:
        return RatFunc(p ** n, SYM_RING.one())

    e_f = _binom(be, p * al)
    e_star = _binom(be, al)
    e_conv = ((1 - pw(-j) * be * ga) * (1 - pw(-j) * be * de)
              * (1 - pw(j - 1) / (al * ga)) * (1 - pw(j - 1) / (al * de)))
    return InterpFactors(e_f, e_star, e_conv)


def _star_subs(k: int, l: int):
    """The dual-form substitution on the root symbols."""
    return {"al": RatFunc(_P ** (k - 1), _BE), "be": RatFunc(_P ** (k - 1), _AL),
            "ga": RatFunc(_P ** (l - 1), _DE), "de": RatFunc(_P ** (l - 1), _GA),
            "p": RatFunc.from_poly(_P)}


def _subs_ratfunc(r: RatFunc, sub: dict) -> RatFunc:
    num = r.num.subs(sub)
    den = r.den.subs(sub)
    num = num if isinstance(num, RatFunc) else RatFunc.from_poly(SYM_RING.coerce(num))
    den = den if isinstance(den, RatFunc) else RatFunc.from_poly(SYM_RING.coerce(den))
    return num / den

def functional_symmetry_check(k: int, l: int, j: int,
                              literal_reading: bool = False,
                              mutate_shift: int = 0) -> bool:
    """Symbol-level symmetry under passing to the dual forms:

    * the ordinary modification factor is invariant;
    * its level-lowering variant is invariant;
    * the convolution factor at twist k+l-1-j maps to the one at twist j;
    * hence the interpolation ratio built from them is identically 1.

    ``literal_reading`` instead tests the (false) claim that the starred
    variant equals the unstarred modification factor; ``mutate_shift`` offsets
    the dual twist index.
    """
    star = _star_subs(k, l)
    fac = interpolation_factors(j, k, l)
    fac_dual_j = interpolation_factors(k + l - 1 - j + mutate_shift, k, l)
    e_f_star = _subs_ratfunc(fac.modification, star)
    e_star_star = _subs_ratfunc(fac.modification_star, star)
    conv_star = _subs_ratfunc(fac.convolution, star)
    if literal_reading:
        return e_star_star == fac.modification
    ok = (e_f_star == fac.modification
          and e_star_star == fac.modification_star
          and conv_star == fac_dual_j.convolution)
    if not ok:
        return False
    # the full ratio: [conv(k+l-1-j) / (mod * mod_star)] * [dual of the same at j]
    ratio = (fac_dual_j.convolution / (fac.modification * fac.modification_star)) \
        * ((e_f_star * e_star_star) / conv_star)
    return ratio == RatFunc.from_poly(SYM_RING.one())


# ---------------------------------------------------------------------------
# the Dirichlet correction polynomial at bad levels
# ---------------------------------------------------------------------------

class CorrectionPolynomial:
    """A polynomial in the variables {x_p : p | N} with coefficients in the
    joint coefficient ring; stored as {exponent tuple: element}."""

    def __init__(self, primes, terms, one):
        self.primes = tuple(primes)
        self.terms = terms
        self._one = one

    def is_one(self):
        z = tuple(0 for _ in self.primes)
        return set(self.terms) == {z} and self.terms[z] == self._one

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            mono = "*".join(f"x{p}^{k}" if k > 1 else f"x{p}"
                            for p, k in zip(self.primes, e) if k)
            cs = str(c)
            if any(op in cs for op in (" + ", " - ")):
                cs = f"({cs})"
            parts.append(f"{cs}*{mono}" if mono else cs)
        return " + ".join(parts)

    __repr__ = __str__


def local_correction(fstream, gstream, N: int, bad_factors: dict,
                     guard: int = 8, ring=None):
    """Certify that the bad-level correction is a polynomial.

    ``fstream``/``gstream`` map (p, r) to a_(p^r) of the two test vectors in a
    common ring (``ring``, defaulting to the rationals); ``bad_factors`` maps
    each prime p | N to the local-factor coefficient list [1, c1, ...] in that
    ring.  For each p the series sum_r a_(p^r)(f) a_(p^r)(g) x^r is multiplied
    by the factor; the result must vanish in degrees
    (deg(factor) + dilation shifts, guard].

    Returns (CorrectionPolynomial, certified: bool, residuals: dict).
    """
    one = ring.one() if ring is not None else QQ(1)
    primes = sorted(_prime_divisors(N))
    certified = True
    residuals = {}
    local_polys = []
    for p in primes:
        if p not in bad_factors:
            raise ValueError(f"no local factor supplied for p = {p}")
        fac = bad_factors[p]
        series = [fstream(p, r) * gstream(p, r) for r in range(guard + 1)]
        prod = []
        for i in range(guard + 1):
            acc = None
            for j, c in enumerate(fac):
                if j > i:
                    break
                term = c * series[i - j]
                acc = term if acc is None else acc + term
            prod.append(acc)
        shift = _stream_shift(fstream, p, guard) + _stream_shift(gstream, p, guard)
        dbound = (len(fac) - 1) + shift
        if dbound + 1 > guard:
            raise ValueError(f"guard {guard} too small at p = {p}: "
                             f"need at least {dbound + 2}")
        tail = [i for i in range(dbound + 1, guard + 1) if not _is_zero(prod[i])]
        if tail:
            certified = False
            residuals[p] = {
                "error": "polynomiality not certified",
                "first_nonzero_degree": tail[0],
                "series_head": [str(prod[i]) for i in range(tail[0] + 1)]}
        local_polys.append({i: prod[i] for i in range(dbound + 1)
                            if not _is_zero(prod[i])})
    terms = {tuple([0] * len(primes)): one}
    for idx, loc in enumerate(local_polys):
        new = {}
        for e1, v1 in terms.items():
            for k, v2 in loc.items():
                e = list(e1)
                e[idx] += k
                e = tuple(e)
                v = v1 * v2
                new[e] = new[e] + v if e in new else v
        terms = {e: v for e, v in new.items() if not _is_zero(v)}
    return CorrectionPolynomial(primes, terms, one), certified, residuals


def _stream_shift(stream, p, guard):
    """Index of the first nonzero prime-power coefficient (oldform dilation)."""
    for r in range(guard + 1):
        if not _is_zero(stream(p, r)):
            return r
    return 0


def _prime_divisors(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _is_zero(x):
    if x is None:
        return True
    if isinstance(x, (int, Fraction)):
        return x == 0
    return x.is_zero()
