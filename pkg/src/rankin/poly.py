"""Exact multivariate (Laurent) polynomials and rational functions over Q.

Coefficients are ``fractions.Fraction``.  Variables flagged as invertible may
carry negative exponents; all other exponents are >= 0.  Equality of rational
functions is decided by cross-multiplication, so it never depends on gcd
reduction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd

QQ = Fraction


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


class PolyRing:
    """A polynomial ring Q[x1, ..., xn] with a set of invertible variables."""

    def __init__(self, names, invertible=()):
        self.names = tuple(names)
        if len(set(self.names)) != len(self.names):
            raise ValueError("duplicate variable names")
        self.invertible = frozenset(invertible)
        unknown = self.invertible - set(self.names)
        if unknown:
            raise ValueError(f"invertible names not in ring: {sorted(unknown)}")
        self.index = {n: i for i, n in enumerate(self.names)}
        self.nvars = len(self.names)
        self._zero_exp = (0,) * self.nvars

    def __repr__(self):
        inv = f", invertible={sorted(self.invertible)}" if self.invertible else ""
        return f"PolyRing({list(self.names)}{inv})"

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.names == other.names
                and self.invertible == other.invertible)

    def __hash__(self):
        return hash((self.names, self.invertible))

    # -- constructors ------------------------------------------------------

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return MPoly(self, {self._zero_exp: QQ(1)})

    def const(self, c) -> "MPoly":
        c = _frac(c)
        return MPoly(self, {self._zero_exp: c} if c else {})

    def var(self, name, power: int = 1) -> "MPoly":
        i = self.index[name]
        if power < 0 and name not in self.invertible:
            raise ValueError(f"{name} is not invertible")
        e = [0] * self.nvars
        e[i] = power
        return MPoly(self, {tuple(e): QQ(1)})

    def vars(self):
        return tuple(self.var(n) for n in self.names)

    def from_terms(self, terms) -> "MPoly":
        out = {}
        for e, c in terms.items():
            c = _frac(c)
            if c:
                out[tuple(e)] = out.get(tuple(e), QQ(0)) + c
        return MPoly(self, {e: c for e, c in out.items() if c})

    def coerce(self, x) -> "MPoly":
        if isinstance(x, MPoly):
            if x.ring is not self and x.ring != self:
                raise TypeError("MPoly from a different ring")
            return x
        return self.const(x)


class MPoly:
    """Sparse multivariate polynomial; ``terms`` maps exponent tuples to Fraction."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- basics ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {self.ring._zero_exp: QQ(1)}

    def is_constant(self) -> bool:
        return not self.terms or set(self.terms) == {self.ring._zero_exp}

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return self.terms.get(self.ring._zero_exp, QQ(0))

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self.ring.coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, QQ(0)) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return self.ring.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        other = self.ring.coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, QQ(0)) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return MPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            inv = self.monomial_inverse()
            return inv ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def monomial_inverse(self) -> "MPoly":
        """Inverse of a single-term polynomial whose variables are invertible."""
        if len(self.terms) != 1:
            raise ValueError("only monomials are invertible in a polynomial ring")
        (e, c), = self.terms.items()
        for i, k in enumerate(e):
            if k and self.ring.names[i] not in self.ring.invertible:
                raise ValueError(f"variable {self.ring.names[i]} is not invertible")
        return MPoly(self.ring, {tuple(-k for k in e): 1 / c})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _frac(other)
            return MPoly(self.ring, {e: v / c for e, v in self.terms.items()})
        other = self.ring.coerce(other)
        return RatFunc(self, other)

    def __rtruediv__(self, other):
        return RatFunc(self.ring.coerce(other), self)

    # -- structure ----------------------------------------------------------

    def degree(self, name: str) -> int:
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=0)

    def min_degree(self, name: str) -> int:
        i = self.ring.index[name]
        return min((e[i] for e in self.terms), default=0)

    def coefficients_in(self, name: str) -> dict:
        """Split into {exponent of ``name``: MPoly not involving ``name``}."""
        i = self.ring.index[name]
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            e0 = e[:i] + (0,) + e[i + 1:]
            d = out.setdefault(k, {})
            d[e0] = d.get(e0, QQ(0)) + c
        return {k: MPoly(self.ring, {e: c for e, c in d.items() if c})
                for k, d in out.items()}

    def coefficient_of(self, name: str, power: int) -> "MPoly":
        return self.coefficients_in(name).get(power, self.ring.zero())

    def shift(self, name: str, k: int) -> "MPoly":
        i = self.ring.index[name]
        return MPoly(self.ring, {e[:i] + (e[i] + k,) + e[i + 1:]: c
                                 for e, c in self.terms.items()})

    def clear_laurent(self):
        """Multiply by a monomial so all exponents are >= 0; return (poly, shifts)."""
        shifts = [0] * self.ring.nvars
        for e in self.terms:
            for i, k in enumerate(e):
                shifts[i] = min(shifts[i], k)
        if not any(shifts):
            return self, tuple(shifts)
        out = {tuple(a - s for a, s in zip(e, shifts)): c for e, c in self.terms.items()}
        return MPoly(self.ring, out), tuple(shifts)

    def leading(self):
        """Lex-leading (exponent, coefficient) pair."""
        e = max(self.terms)
        return e, self.terms[e]

    def content(self) -> Fraction:
        if not self.terms:
            return QQ(0)
        num = reduce(gcd, (abs(c.numerator) for c in self.terms.values()))
        den = reduce(lambda a, b: a * b // gcd(a, b),
                     (c.denominator for c in self.terms.values()))
        return QQ(num, den)

    def exact_div(self, other: "MPoly") -> "MPoly":
        """Exact division; raises ValueError if the quotient is not polynomial."""
        other = self.ring.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        a, sa = self.clear_laurent()
        b, sb = other.clear_laurent()
        q = _exact_div_poly(a, b)
        shifts = tuple(x - y for x, y in zip(sa, sb))
        for i, k in enumerate(shifts):
            if k:
                q = q.shift(self.ring.names[i], k)
        return q

    def divisible_by(self, other: "MPoly") -> bool:
        try:
            self.exact_div(other)
            return True
        except ValueError:
            return False

    def subs(self, values: dict):
        """Evaluate with ``values`` mapping names to Fraction/int/MPoly/RatFunc.

        Unmapped variables stay symbolic (result an MPoly/RatFunc over self.ring)
        only when every mapped value lies in self.ring; otherwise all variables
        must be mapped.
        """
        vals = {}
        symbolic_target = None
        for n in self.ring.names:
            if n in values:
                v = values[n]
                if isinstance(v, (int, Fraction)):
                    v = _frac(v)
                vals[n] = v
            else:
                symbolic_target = self.ring
                vals[n] = self.ring.var(n)
        if symbolic_target is None and all(isinstance(v, Fraction) for v in vals.values()):
            total = QQ(0)
            for e, c in self.terms.items():
                t = c
                for i, k in enumerate(e):
                    if k:
                        t *= vals[self.ring.names[i]] ** k
                total += t
            return total
        acc = None
        for e, c in self.terms.items():
            t = None
            for i, k in enumerate(e):
                if k:
                    f = _pow_any(vals[self.ring.names[i]], k)
                    t = f if t is None else t * f
            term = c if t is None else t * c
            acc = term if acc is None else acc + term
        if acc is None:
            first = next(iter(values.values()))
            if isinstance(first, MPoly):
                return first.ring.zero()
            if isinstance(first, RatFunc):
                return RatFunc(first.num.ring.zero(), first.num.ring.one())
            return QQ(0)
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            facs = []
            for i, k in enumerate(e):
                if k == 0:
                    continue
                v = self.ring.names[i]
                facs.append(v if k == 1 else f"{v}^{k}")
            mono = "*".join(facs)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"{c}*{mono}")
        s = " + ".join(parts)
        return s.replace("+ -", "- ")

    __repr__ = __str__


def _pow_any(v, k: int):
    if isinstance(v, Fraction):
        return v ** k
    return v ** k


def _exact_div_poly(a: MPoly, b: MPoly) -> MPoly:
    """Exact division of honest polynomials (no negative exponents)."""
    ring = a.ring
    q = {}
    rem = dict(a.terms)
    eb, cb = b.leading()
    while rem:
        ea = max(rem)
        ca = rem[ea]
        eq = tuple(x - y for x, y in zip(ea, eb))
        if any(k < 0 for k in eq):
            raise ValueError("not divisible")
        cq = ca / cb
        q[eq] = q.get(eq, QQ(0)) + cq
        for e2, c2 in b.terms.items():
            e = tuple(x + y for x, y in zip(eq, e2))
            s = rem.get(e, QQ(0)) - cq * c2
            if s:
                rem[e] = s
            else:
                rem.pop(e, None)
    return MPoly(ring, q)


class RatFunc:
    """Quotient of two MPoly.  Canonical form: denominator content 1 and
    lex-leading denominator coefficient positive; invertible-variable monomial
    factors are moved out of the denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly, normalize: bool = True):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if normalize:
            num, den = _normalize_ratfunc(num, den)
        self.num = num
        self.den = den

    @classmethod
    def from_poly(cls, p: MPoly) -> "RatFunc":
        return cls(p, p.ring.one(), normalize=False)

    def ring(self):
        return self.num.ring

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other) -> "RatFunc":
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, MPoly):
            return RatFunc.from_poly(other)
        return RatFunc.from_poly(self.num.ring.const(other))

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return (self.inverse()) ** (-n)
        return RatFunc(self.num ** n, self.den ** n)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, MPoly)):
            other = self._coerce(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        raise TypeError("RatFunc is unhashable")

    def subs(self, values: dict) -> Fraction:
        n = self.num.subs(values)
        d = self.den.subs(values)
        return n / d

    def __str__(self):
        if self.den.is_one():
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


def _normalize_ratfunc(num: MPoly, den: MPoly):
    ring = num.ring
    if num.is_zero():
        return num, ring.one()
    # move invertible-variable monomial content of the denominator into num
    for i, n in enumerate(ring.names):
        if n in ring.invertible:
            k = min(e[i] for e in den.terms)
            if k:
                den = den.shift(n, -k)
                num = num.shift(n, -k)
    # full cancellation when one divides the other
    try:
        q = num.exact_div(den)
        return q, ring.one()
    except (ValueError, ZeroDivisionError):
        pass
    # content + sign normalization
    c = den.content()
    e, lead = den.leading()
    if lead < 0:
        c = -c
    if c != 1:
        den = MPoly(ring, {e2: v / c for e2, v in den.terms.items()})
        num = MPoly(ring, {e2: v / c for e2, v in num.terms.items()})
    return num, den


# ---------------------------------------------------------------------------
# dense univariate helpers over Fraction (lists, index = degree)
# ---------------------------------------------------------------------------

def poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def poly_add(p, q):
    r = [QQ(0)] * max(len(p), len(q))
    for i, c in enumerate(p):
        r[i] += c
    for i, c in enumerate(q):
        r[i] += c
    return poly_trim(r)


def poly_neg(p):
    return [-c for c in p]


def poly_mul(p, q):
    if not p or not q:
        return []
    r = [QQ(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                r[i + j] += a * b
    return poly_trim(r)


def poly_divmod(p, q):
    """Division with remainder in Q[x]."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [QQ(x) for x in p]
    d = len(q) - 1
    lead = q[-1]
    quot = [QQ(0)] * max(0, len(r) - d)
    while len(r) - 1 >= d and r:
        if not r[-1]:
            r.pop()
            continue
        k = len(r) - 1 - d
        c = r[-1] / lead
        quot[k] = c
        for j, b in enumerate(q):
            r[k + j] -= c * b
        r = poly_trim(r)
    return poly_trim(quot), poly_trim(r)


def poly_gcd(p, q):
    a, b = [QQ(x) for x in p], [QQ(x) for x in q]
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def poly_xgcd(p, q):
    """Return (g, u, v) with u*p + v*q = g, g monic."""
    a, b = [QQ(x) for x in p], [QQ(x) for x in q]
    ua, va = [QQ(1)], []
    ub, vb = [], [QQ(1)]
    while b:
        qt, r = poly_divmod(a, b)
        a, b = b, r
        ua, ub = ub, poly_add(ua, poly_neg(poly_mul(qt, ub)))
        va, vb = vb, poly_add(va, poly_neg(poly_mul(qt, vb)))
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
        ua = [c / lead for c in ua]
        va = [c / lead for c in va]
    return a, ua, va


def poly_pow_mod(p, n, m):
    """p(x)^n mod m(x)."""
    result = [QQ(1)]
    base = poly_divmod(p, m)[1]
    while n:
        if n & 1:
            result = poly_divmod(poly_mul(result, base), m)[1]
        base = poly_divmod(poly_mul(base, base), m)[1]
        n >>= 1
    return result


_CYCLO_CACHE = {}


def cyclotomic_polynomial(n: int):
    """The n-th cyclotomic polynomial as a dense Fraction list."""
    if n in _CYCLO_CACHE:
        return list(_CYCLO_CACHE[n])
    p = [QQ(-1)] + [QQ(0)] * (n - 1) + [QQ(1)]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            p, r = poly_divmod(p, cyclotomic_polynomial(d))
            assert not r
    _CYCLO_CACHE[n] = list(p)
    return p
