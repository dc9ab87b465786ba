"""Eigenform data model: line-oriented ingestion with invariant validation,
the level-11 eta-product oracle, stabilization at a good prime with exact
valuations, the root-ratio minimal polynomial, the congruence scan over a
prime window, and the hypothesis checklist for the bundled pair.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .poly import QQ, poly_divmod
from .quotring import QuotRing, QuotElt, join


class FormDataError(ValueError):
    pass


# ---------------------------------------------------------------------------
# Dirichlet characters
# ---------------------------------------------------------------------------

class DirichletChar:
    """A character modulo M given by its values on a generating set of units.

    Values live in the coefficient ring of the form (ring elements or plain
    rationals); the full table on (Z/M)^* is built by closure and the
    construction fails if the given values are not a homomorphism.
    """

    def __init__(self, modulus: int, gen_values: dict, ring=None):
        self.modulus = modulus
        self.ring = ring
        self.gen_values = dict(gen_values)
        one = ring.one() if ring is not None else QQ(1)
        self._one = one
        units = [a for a in range(1, max(modulus, 2)) if gcd(a, modulus) == 1]
        if modulus == 1:
            units = [1]
        if not gen_values:
            # the trivial character
            self._table = {u % modulus if modulus > 1 else 1: one for u in units}
            self._one = one
            return
        table = {1 % modulus if modulus > 1 else 1: one}
        frontier = list(table)
        for _ in range(len(units) + 1):
            new = []
            for u in list(table):
                for g, val in self.gen_values.items():
                    w = (u * g) % modulus if modulus > 1 else 1
                    value = table[u] * val
                    if w in table:
                        if not (table[w] == value):
                            raise FormDataError(
                                f"character values are not multiplicative at {w}")
                    else:
                        table[w] = value
                        new.append(w)
            if not new:
                break
        if set(table) != set(u % modulus if modulus > 1 else 1 for u in units):
            raise FormDataError("given units do not generate the unit group")
        self._table = table

    def value(self, n: int):
        """chi(n); 0 on non-units."""
        if self.modulus == 1:
            return self._one
        n = n % self.modulus
        if gcd(n, self.modulus) != 1:
            return QQ(0)
        return self._table[n]

    def __call__(self, n: int):
        return self.value(n)

    def is_trivial(self) -> bool:
        return all(v == self._one for v in self._table.values())

    def order(self) -> int:
        for k in range(1, len(self._table) + 1):
            if all(_pow_val(v, k) == self._one for v in self._table.values()):
                return k
        raise AssertionError("no order found")


def _pow_val(v, k):
    out = v
    for _ in range(k - 1):
        out = out * v
    return out


def quadratic_character(p: int, modulus: int) -> dict:
    """Generator values of the quadratic-residue character of the odd prime p,
    regarded modulo ``modulus`` (p | modulus); helper for building data."""
    gens = _unit_group_generators(modulus)
    return {g: QQ(1) if pow(g % p, (p - 1) // 2, p) == 1 else QQ(-1)
            for g in gens}


def _unit_group_generators(m: int):
    """A (small, possibly redundant) generating set of (Z/m)^*."""
    units = [a for a in range(1, m) if gcd(a, m) == 1] or [1]
    gens = []
    generated = {1 % m if m > 1 else 1}
    for u in units:
        if u in generated:
            continue
        gens.append(u)
        frontier = set(generated)
        for _ in range(len(units)):
            new = {(x * g) % m for x in generated for g in gens} - generated
            if not new:
                break
            generated |= new
        if len(generated) == len(units):
            break
    return gens or [1]


# ---------------------------------------------------------------------------
# the Eigenform container
# ---------------------------------------------------------------------------

@dataclass
class Eigenform:
    level: int
    weight: int
    character: DirichletChar
    ring: QuotRing
    coefficients: dict            # n -> QuotElt
    provenance: list = field(default_factory=list)
    field_poly: list = field(default_factory=list)   # dense, monic, in t

    @property
    def bound(self) -> int:
        return max(self.coefficients)

    def a(self, n: int) -> QuotElt:
        if n in self.coefficients:
            return self.coefficients[n]
        return self._extended(n)

    def _extended(self, n: int) -> QuotElt:
        """Multiplicativity plus the prime-power recursion, beyond the table."""
        out = self.ring.one()
        for p, e in _factorize(n):
            out = out * self.prime_power(p, e)
        return out

    def prime_power(self, p: int, r: int) -> QuotElt:
        """a_(p^r) from a_p by the Hecke recursion (chi(p) = 0 when p | level
        makes this a_p^r automatically)."""
        if r == 0:
            return self.ring.one()
        if p ** r in self.coefficients:
            return self.coefficients[p ** r]
        ap = self.a(p)
        scale = self.char_value(p) * QQ(p) ** (self.weight - 1)
        prev2, prev1 = self.ring.one(), ap
        for _ in range(r - 1):
            prev2, prev1 = prev1, ap * prev1 - scale * prev2
        return prev1

    def char_value(self, n: int) -> QuotElt:
        v = self.character.value(n)
        if isinstance(v, (int, Fraction)):
            return self.ring.coerce(v)
        return v

    def validate(self, full: bool = True):
        """Check a_1 = 1, multiplicativity on coprime pairs, and the
        prime-power recursion on the stored range."""
        B = self.bound
        if 1 not in self.coefficients or not (self.coefficients[1] == 1):
            raise FormDataError("a_1 must be 1")
        for p in _primes_upto(B):
            r = 2
            while p ** r <= B:
                expect = self.prime_power_direct(p, r)
                if not (self.coefficients[p ** r] == expect):
                    raise FormDataError(
                        f"Hecke recursion fails at (p, r) = ({p}, {r})")
                r += 1
        if full:
            for m in range(2, B + 1):
                for n in range(2, B // m + 1):
                    if gcd(m, n) == 1:
                        if not (self.coefficients[m * n]
                                == self.coefficients[m] * self.coefficients[n]):
                            raise FormDataError(
                                f"multiplicativity fails at ({m}, {n})")
        return True

    def prime_power_direct(self, p: int, r: int) -> QuotElt:
        """Recursion value computed from the stored a_p only."""
        ap = self.coefficients[p]
        scale = self.char_value(p) * QQ(p) ** (self.weight - 1)
        prev2, prev1 = self.ring.one(), ap
        for _ in range(r - 1):
            prev2, prev1 = prev1, ap * prev1 - scale * prev2
        return prev1

    def gen_element(self):
        name = self.ring.gen_names[0]
        return self.ring.gen(name)


def _factorize(n: int):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1
    if n > 1:
        out.append((n, 1))
    return out


def _primes_upto(B: int):
    if B < 2:
        return []
    sieve = bytearray([1]) * (B + 1)
    out = []
    for p in range(2, B + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, B + 1, p):
                sieve[q] = 0
    return out


# ---------------------------------------------------------------------------
# the line-oriented file format
# ---------------------------------------------------------------------------

_HEADER_RE = re.compile(r"(\w+)=([^\s]+)")


def parse_eigenform(text: str) -> Eigenform:
    """Parse the documented format:

        # comments carry provenance notes
        level=N weight=k charmod=M field=<monic polynomial in t>
        chargen a:<value>        (zero or more)
        n: <polynomial in t>     (coefficient lines)
    """
    header = None
    chargens = {}
    coeff_lines = []
    provenance = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            provenance.append(line[1:].strip())
            continue
        if header is None:
            header = dict(_HEADER_RE.findall(line))
            for key in ("level", "weight", "charmod", "field"):
                if key not in header:
                    raise FormDataError(f"line {lineno}: missing header key {key}")
            continue
        if line.startswith("chargen"):
            body = line[len("chargen"):].strip()
            g, _, val = body.partition(":")
            chargens[int(g)] = val.strip()
            continue
        m = re.match(r"^(\d+)\s*:\s*(.+)$", line)
        if not m:
            raise FormDataError(f"line {lineno}: cannot parse {line!r}")
        coeff_lines.append((lineno, int(m.group(1)), m.group(2).strip()))
    if header is None:
        raise FormDataError("missing header line")
    field_poly = _parse_univariate(header["field"])
    if field_poly[-1] != 1:
        raise FormDataError("field polynomial must be monic")
    deg = len(field_poly) - 1
    if deg == 0:
        raise FormDataError("field polynomial must involve t")
    ring = QuotRing([("t", deg, [-c for c in field_poly[:-1]])])
    char_values = {g: _poly_in_t(ring, _parse_univariate(v))
                   for g, v in chargens.items()}
    character = DirichletChar(int(header["charmod"]), char_values, ring)
    coeffs = {}
    for lineno, n, val in coeff_lines:
        try:
            coeffs[n] = _poly_in_t(ring, _parse_univariate(val))
        except Exception as exc:
            raise FormDataError(f"line {lineno}: bad value {val!r}: {exc}") from exc
    form = Eigenform(int(header["level"]), int(header["weight"]), character,
                     ring, coeffs, provenance, field_poly)
    expected = set(range(1, max(coeffs) + 1))
    if set(coeffs) != expected:
        missing = sorted(expected - set(coeffs))[:5]
        raise FormDataError(f"missing coefficient indices {missing}")
    form.validate()
    return form


def _poly_in_t(ring: QuotRing, dense):
    return ring.from_dense(ring.gen_names[0], dense)


def _parse_univariate(s: str):
    """Parse sums of rational multiples of powers of t into a dense list."""
    s = s.replace(" ", "")
    if not s:
        raise ValueError("empty value")
    tokens = re.findall(r"[+-]?[^+-]+", s)
    out = {}
    for tok in tokens:
        sign = -1 if tok.startswith("-") else 1
        tok = tok.lstrip("+-")
        if "t" in tok:
            coef_part, _, pow_part = tok.partition("t")
            coef = QQ(coef_part.rstrip("*")) if coef_part.rstrip("*") else QQ(1)
            power = int(pow_part[1:]) if pow_part.startswith("^") else 1
        else:
            coef = QQ(tok)
            power = 0
        out[power] = out.get(power, QQ(0)) + sign * coef
    deg = max(out)
    return [out.get(k, QQ(0)) for k in range(deg + 1)]


def format_value(x: QuotElt) -> str:
    """Canonical printing of a coefficient as a polynomial in t."""
    name = x.ring.gen_names[0]
    by_pow = {}
    for e, c in x.rep.terms.items():
        by_pow[e[0]] = c
    if not by_pow:
        return "0"
    parts = []
    for k in sorted(by_pow):
        c = by_pow[k]
        if k == 0:
            parts.append(str(c))
        else:
            tpow = "t" if k == 1 else f"t^{k}"
            if c == 1:
                parts.append(tpow)
            elif c == -1:
                parts.append(f"-{tpow}")
            else:
                parts.append(f"{c}*{tpow}")
    return "+".join(parts).replace("+-", "-")


def serialize_eigenform(form: Eigenform) -> str:
    lines = [f"# {note}" for note in form.provenance]
    fp = "+".join(
        (f"{c}" if k == 0 else ("t" if k == 1 else f"t^{k}") if c == 1 else
         f"{c}*" + ("t" if k == 1 else f"t^{k}"))
        for k, c in enumerate(form.field_poly) if c
    ).replace("+-", "-")
    lines.append(f"level={form.level} weight={form.weight} "
                 f"charmod={form.character.modulus} field={fp}")
    for g in sorted(form.character.gen_values):
        lines.append(f"chargen {g}:{format_value(form.character.gen_values[g])}"
                     if hasattr(form.character.gen_values[g], 'rep') else
                     f"chargen {g}:{form.character.gen_values[g]}")
    for n in sorted(form.coefficients):
        lines.append(f"{n}: {format_value(form.coefficients[n])}")
    return "\n".join(lines) + "\n"


def ingest(path) -> Eigenform:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_eigenform(fh.read())


def bundled_path(name: str):
    from importlib.resources import files
    return files("rankin.data").joinpath(name)


def load_bundled(name: str) -> Eigenform:
    return parse_eigenform(bundled_path(name).read_text())


# ---------------------------------------------------------------------------
# the eta-product oracle for the level-11 form
# ---------------------------------------------------------------------------

def eta_oracle_level11(prec: int):
    """Coefficients a_1..a_prec of q prod (1-q^n)^2 (1-q^(11n))^2, by direct
    truncated product expansion over the integers."""
    B = prec
    series = [0] * (B + 1)
    series[0] = 1
    for n in range(1, B + 1):
        for rep in (n, n, 11 * n, 11 * n):
            if rep > B:
                continue
            for i in range(B, rep - 1, -1):
                series[i] -= series[i - rep]
    return [series[n - 1] for n in range(1, B + 1)]


# ---------------------------------------------------------------------------
# p-adic places and stabilization
# ---------------------------------------------------------------------------

class PadicPlace:
    """A prime above p in a quotient ring, fixed by the smallest-root
    convention: for each generator in order, the smallest root mod p of its
    defining polynomial (which must be separable with a root mod p)."""

    def __init__(self, ring: QuotRing, p: int):
        self.ring = ring
        self.p = p
        self.roots = {}
        for name in ring.gen_names:
            d = ring.degrees[name]
            low = ring.rewrites[name]
            coeffs = [QQ(0)] * (d + 1)
            coeffs[d] = QQ(1)
            for k, cf in low.coefficients_in(name).items():
                val = self._reduce_mpoly(cf, p)
                coeffs[k] = coeffs[k] - val
            roots = [r for r in range(p) if _eval_mod(coeffs, r, p) == 0]
            sep = [r for r in roots if _eval_mod(_derivative(coeffs), r, p) != 0]
            if not sep:
                raise FormDataError(
                    f"no simple root mod {p} for {name}; place not supported")
            self.roots[name] = min(sep)
        self._lifted = dict(self.roots)
        self._lift_prec = 1

    def _reduce_mpoly(self, mp, p, prec_pow=None):
        mod = p if prec_pow is None else prec_pow
        total = 0
        roots = self.roots if prec_pow is None else self._lifted
        for e, c in mp.terms.items():
            if c.denominator % p == 0:
                raise FormDataError("denominator not prime to p in reduction")
            t = c.numerator * pow(c.denominator, -1, mod)
            for name, k in zip(self.ring.gen_names, e):
                if k:
                    t *= pow(roots[name], k, mod)
            total += t
        return total % mod

    def _ensure_precision(self, k: int):
        while self._lift_prec < k:
            mod = self.p ** (2 * self._lift_prec)
            # one Newton step per generator doubles the precision
            lifted = {}
            for name in self.ring.gen_names:
                h, hp = self._gen_poly_mod(name, mod, lifted)
                r = self._lifted[name]
                fr = _eval_int(h, r, mod)
                fpr = _eval_int(hp, r, mod)
                r = (r - fr * pow(fpr, -1, mod)) % mod
                lifted[name] = r
            self._lifted = lifted
            self._lift_prec *= 2

    def _gen_poly_mod(self, name, mod, lifted_prefix):
        """Defining polynomial of ``name`` with earlier-generator coefficients
        evaluated at already-lifted roots, mod ``mod``; returns (h, h')."""
        d = self.ring.degrees[name]
        low = self.ring.rewrites[name]
        h = [0] * (d + 1)
        h[d] = 1
        roots = dict(self._lifted)
        roots.update(lifted_prefix)
        for k, cf in low.coefficients_in(name).items():
            total = 0
            for e, c in cf.terms.items():
                if c.denominator % self.p == 0:
                    raise FormDataError("denominator not prime to p")
                t = c.numerator * pow(c.denominator, -1, mod)
                for nm, kk in zip(self.ring.gen_names, e):
                    if kk:
                        t *= pow(roots[nm], kk, mod)
                total += t
            h[k] = (h[k] - total) % mod
        hp = [(i * h[i]) % mod for i in range(1, d + 1)]
        return h, hp

    def reduce(self, x: QuotElt, k: int = 1) -> int:
        """The image of x in Z/p^k (denominators must be prime to p)."""
        self._ensure_precision(k)
        return self._reduce_mpoly(x.rep, self.p, self.p ** k)

    def valuation(self, x: QuotElt, max_prec: int = 64):
        """v_p of x at this place; None for (the image of) zero."""
        if x.is_zero():
            return None
        den_v = 0
        scale = 1
        for _, c in x.rep.terms.items():
            d = c.denominator
            while d % self.p == 0:
                d //= self.p
                den_v += 1
        num = x * (QQ(self.p) ** den_v) if den_v else x
        k = 4
        while k <= max_prec:
            val = self.reduce(num, k)
            if val % (self.p ** k):
                v = 0
                while val % self.p == 0:
                    val //= self.p
                    v += 1
                return v - den_v
            k *= 2
        raise FormDataError(
            f"valuation of {x} exceeds precision {max_prec} (zero divisor?)")


def _eval_mod(coeffs, r, p):
    total = 0
    for c in reversed(coeffs):
        total = (total * r + c.numerator * pow(c.denominator, -1, p)) % p
    return total


def _eval_int(coeffs, r, mod):
    total = 0
    for c in reversed(coeffs):
        total = (total * r + c) % mod
    return total


def _derivative(coeffs):
    return [QQ(i) * c for i, c in enumerate(coeffs)][1:]


@dataclass
class Stabilization:
    """The two roots of X^2 - a_p X + p^(k-1) chi(p) in a quadratic extension
    of the coefficient ring, with exact slope data at a chosen place."""

    p: int
    ring: QuotRing
    alpha: QuotElt
    beta: QuotElt
    slopes: tuple
    ordinary: bool
    root_valuations: tuple | None
    place_root: int | None

    def summary(self):
        return {"p": self.p, "slopes": [str(s) for s in self.slopes],
                "ordinary": self.ordinary,
                "root_valuations": (None if self.root_valuations is None
                                    else [str(v) for v in self.root_valuations]),
                "place_root": self.place_root}


def p_stabilize(form: Eigenform, p: int) -> Stabilization:
    if form.level % p == 0:
        raise FormDataError(f"p = {p} divides the level {form.level}")
    ap = form.a(p)
    const = form.char_value(p) * QQ(p) ** (form.weight - 1)
    # extended ring: adjoin s with s^2 = a_p s - const
    gens = [(n, form.ring.degrees[n],
             {e + (0,): c for e, c in form.ring.rewrites[n].terms.items()})
            for n in form.ring.gen_names]
    rel = {e + (1,): c for e, c in ap.rep.terms.items()}
    for e, c in (-const).rep.terms.items():
        key = e + (0,)
        rel[key] = rel.get(key, QQ(0)) + c
    gens.append(("s", 2, {e: c for e, c in rel.items() if c}))
    ext = QuotRing(gens)

    def lift(x):
        return ext.from_poly(ext.poly_ring.from_terms(
            {e + (0,) : c for e, c in x.rep.terms.items()}))

    alpha = ext.gen("s")
    beta = lift(ap) - alpha
    if form.weight == 2:
        # good-prime weight-2 roots are always distinct
        disc = ap * ap - 4 * const
        assert not disc.is_zero(), f"repeated Hecke roots at p = {p}"
    # Newton polygon of X^2 - a_p X + const: vertices (0, k-1), (1, v(a_p)), (2, 0)
    place = PadicPlace(form.ring, p)
    vap = place.valuation(ap) if not ap.is_zero() else None
    km1 = QQ(form.weight - 1)
    if vap is not None and vap == 0:
        slopes = (QQ(0), km1)
    elif vap is None or 2 * vap >= km1:
        slopes = (km1 / 2, km1 / 2)
    else:
        slopes = (QQ(vap), km1 - vap)
    ordinary = slopes[0] == 0
    root_vals = None
    place_root = None
    if ordinary:
        ext_place = PadicPlace(ext, p)
        place_root = ext_place.roots["s"]
        root_vals = (ext_place.valuation(alpha), ext_place.valuation(beta))
        assert sorted(root_vals) == [0, int(km1)], root_vals
    return Stabilization(p, ext, alpha, beta, slopes, ordinary, root_vals, place_root)


# ---------------------------------------------------------------------------
# the root-ratio minimal polynomial and the root-of-unity verdict
# ---------------------------------------------------------------------------

def ratio_minpoly_and_root_of_unity(st_f: Stabilization, st_g: Stabilization):
    """Minimal polynomial over Q of alpha/gamma in the joint quotient ring of
    the two stabilizations, and whether that ratio is a root of unity."""
    if st_f.p != st_g.p:
        raise ValueError("stabilizations at different primes")
    if st_f is st_g:
        # the same chosen root twice: the ratio is 1 in the one ring
        x = st_f.ring.one()
    else:
        joint, mf, mg = join(st_f.ring, st_g.ring, "f_", "g_")
        gamma = mg(st_g.alpha)
        if gamma.is_zero():
            raise ZeroDivisionError("zero stabilization root")
        x = mf(st_f.alpha) * gamma.inverse()
    mp = x.minpoly()
    return mp, is_root_of_unity_poly(mp)


def is_root_of_unity_poly(mp) -> bool:
    """A monic rational polynomial annihilates a root of unity only if it is
    integral; then test divisibility of x^M - 1 over the degree-based bound."""
    if any(c.denominator != 1 for c in mp):
        return False
    d = len(mp) - 1
    bound = 2 * d * d + 2
    for M in range(1, bound + 1):
        xm = [QQ(-1)] + [QQ(0)] * (M - 1) + [QQ(1)]
        _, r = poly_divmod(xm, mp)
        if not r:
            return True
    return False


# ---------------------------------------------------------------------------
# residue fields of degree <= 2 and the congruence scan
# ---------------------------------------------------------------------------

class _Fq:
    """F_p[T]/(T^2 + aT + b) (or F_p when modulus is linear)."""

    def __init__(self, p: int, modulus):
        self.p = p
        self.modulus = modulus  # None for F_p, else (a, b) monic quadratic

    def elt(self, u, v=0):
        return (u % self.p, v % self.p)

    def add(self, x, y):
        return ((x[0] + y[0]) % self.p, (x[1] + y[1]) % self.p)

    def neg(self, x):
        return ((-x[0]) % self.p, (-x[1]) % self.p)

    def mul(self, x, y):
        p = self.p
        u = x[0] * y[0]
        v = x[0] * y[1] + x[1] * y[0]
        w = x[1] * y[1]
        if w:
            a, b = self.modulus
            # T^2 = -aT - b
            v -= w * a
            u -= w * b
        return (u % p, v % p)

    def eq(self, x, y):
        return x[0] % self.p == y[0] % self.p and x[1] % self.p == y[1] % self.p


def residue_places(form: Eigenform, p: int):
    """Places above p of the coefficient field (degree <= 2) as
    (label, residue field, reduction map QuotElt -> element)."""
    deg = form.ring.dimension
    if deg == 1:
        fq = _Fq(p, None)

        def red(x, fq=fq):
            return fq.elt(_rat_mod(x.rep.constant_value(), p))
        return [("rational", fq, red)]
    if deg != 2:
        raise FormDataError("congruence scan supports coefficient fields of degree <= 2")
    name = form.ring.gen_names[0]
    low = form.ring.rewrites[name]
    c1 = -_low_coeff(low, name, 1)
    c0 = -_low_coeff(low, name, 0)
    # minimal polynomial T^2 + c1 T + c0
    a1, a0 = _rat_mod(c1, p), _rat_mod(c0, p)
    roots = sorted({r for r in range(p) if (r * r + a1 * r + a0) % p == 0})
    if roots:
        out = []
        tag = "t->" if len(roots) == 2 else "ramified t->"
        for r in roots:
            fq = _Fq(p, None)

            def red(x, r=r, fq=fq):
                total = 0
                for e, c in x.rep.terms.items():
                    total += _rat_mod(c, p) * pow(r, e[0], p)
                return fq.elt(total)
            out.append((f"{tag}{r}", fq, red))
        return out
    # inert: residue field F_p^2
    fq = _Fq(p, (a1, a0))

    def red(x, fq=fq):
        u = v = 0
        for e, c in x.rep.terms.items():
            cv = _rat_mod(c, p)
            if e[0] == 0:
                u += cv
            elif e[0] == 1:
                v += cv
            else:
                raise AssertionError("unreduced element")
        return fq.elt(u, v)
    return [("inert", fq, red)]


def _low_coeff(low, name, k):
    c = low.coefficients_in(name).get(k)
    if c is None:
        return QQ(0)
    return c.constant_value()


def _rat_mod(c: Fraction, p: int) -> int:
    if c.denominator % p == 0:
        raise FormDataError(f"denominator of {c} not prime to {p}")
    return c.numerator * pow(c.denominator, -1, p) % p


def congruence_prime_scan(f: Eigenform, g: Eigenform, splitting_chars,
                          bound: int, window):
    """For each prime p in ``window`` and each place above p of the joint
    coefficient data, search v <= bound, v prime, chi(v) = 1 for every chi in
    ``splitting_chars``, with a_v(f) not congruent to +-a_v(g); report the
    witness found or flag the place.

    The first form must have rational coefficients.  Returns
    {p: [(place label, witness v or None)]}.
    """
    if f.ring.dimension != 1:
        raise FormDataError("scan expects the first form to have rational coefficients")
    vs = [v for v in _primes_upto(bound)
          if all(chi.value(v) == 1 for chi in splitting_chars)]
    report = {}
    for p in window:
        entries = []
        for label, fq, red in residue_places(g, p):
            witness = None
            for v in vs:
                try:
                    x = fq.elt(_rat_mod(f.a(v).rep.constant_value(), p))
                except FormDataError:
                    continue
                y = red(g.a(v))
                if not fq.eq(x, y) and not fq.eq(x, fq.neg(y)):
                    witness = v
                    break
            entries.append((label, witness))
        report[p] = entries
    return report


# ---------------------------------------------------------------------------
# the hypothesis checklist
# ---------------------------------------------------------------------------

def hypothesis_report(f: Eigenform, g: Eigenform, p: int,
                      scan_bound: int = 100) -> dict:
    """Evaluate the decidable items of the running hypothesis list for a pair
    of weight-2 forms at a prime p; items needing Galois-image input are
    reported as external assertions."""
    out = {}
    out["i_not_cm"] = ("EXTERNAL", "user-asserted: neither form has CM")
    out["ii_not_twist"] = ("EXTERNAL", "user-asserted: f is not a twist of g")
    prod_mod = f.character.modulus * g.character.modulus // gcd(
        f.character.modulus, g.character.modulus)
    nontrivial = False
    for n in range(2, prod_mod + 1):
        if gcd(n, prod_mod) != 1:
            continue
        vf, vg = f.character.value(n), g.character.value(n)
        if not (_times(vf, vg) == 1):
            nontrivial = True
            break
    out["iii_char_nontrivial"] = ("PASS" if nontrivial else "FAIL",
                                  f"product character modulo {prod_mod}")
    out["iv_p_at_least_5"] = ("PASS" if p >= 5 else "FAIL", f"p = {p}")
    good = f.level % p != 0 and g.level % p != 0
    out["v_p_good"] = ("PASS" if good else "FAIL",
                       f"levels {f.level}, {g.level}")
    if not good:
        return out
    split_ok, split_note = _splitting_check(f, g, p)
    out["vi_place_split"] = ("PASS" if split_ok else "FAIL", split_note)
    chi_list = [g.character] if not g.character.is_trivial() else []
    scan = congruence_prime_scan(f, g, chi_list, scan_bound, [p])
    witnesses = scan[p]
    ok8 = all(w is not None for _, w in witnesses)
    out["viii_coefficient_separation"] = (
        "PASS" if ok8 else "FAIL",
        {label: w for label, w in witnesses})
    try:
        st_f = p_stabilize(f, p)
        out["ix_f_ordinary"] = ("PASS" if st_f.ordinary else "FAIL",
                                st_f.summary())
        st_g = p_stabilize(g, p)
        if st_f.ordinary and st_g.ordinary:
            mp, is_ru = ratio_minpoly_and_root_of_unity(st_f, st_g)
            out["x_ratio_not_root_of_unity"] = (
                "PASS" if not is_ru else "FAIL",
                {"minpoly": [str(c) for c in mp], "root_of_unity": is_ru})
        else:
            out["x_ratio_not_root_of_unity"] = ("FAIL", "no unit root available")
    except FormDataError as exc:
        out.setdefault("ix_f_ordinary", ("FAIL", str(exc)))
        out.setdefault("x_ratio_not_root_of_unity", ("FAIL", str(exc)))
    return out


def _times(a, b):
    return a * b


def _splitting_check(f: Eigenform, g: Eigenform, p: int):
    """All defining data acquires a simple root mod p: the coefficient fields
    and (in the ordinary case) the Hecke quadratics of both stabilizations."""
    try:
        PadicPlace(f.ring, p)
        PadicPlace(g.ring, p)
        for form in (f, g):
            st = p_stabilize(form, p)
            if st.ordinary:
                PadicPlace(st.ring, p)
            else:
                return False, f"Hecke polynomial at {p} has no unit root"
        return True, "coefficient fields and Hecke quadratics split mod p"
    except FormDataError as exc:
        return False, str(exc)
