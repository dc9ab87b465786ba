"""Finite-dimensional quotient rings Q[g1, ..., gr]/(h1, ..., hr).

Each generator g_i carries a monic defining polynomial h_i whose lower-order
coefficients may involve earlier generators, so towers like
Q[i][s]/(s^2 - a*s + c) are supported.  No irreducibility is assumed:
inversion is a linear solve and fails exactly on zero divisors.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .poly import MPoly, PolyRing, QQ


class ZeroDivisor(ZeroDivisionError):
    """Raised when inverting a genuine zero divisor in a quotient ring."""


class QuotRing:
    """Quotient ring with ordered generators and monic defining polynomials."""

    def __init__(self, gens):
        """``gens``: list of (name, degree, lower) where the relation is
        name**degree = lower, and ``lower`` is given as {exponent tuple over
        all PREVIOUS generators and this one: Fraction} with this generator's
        exponent < degree.  For convenience ``lower`` may also be a dense list
        of Fractions [c0, c1, ...] meaning c0 + c1*g + ... (coefficients
        rational)."""
        names = [g[0] for g in gens]
        self.poly_ring = PolyRing(tuple(names))
        self.gen_names = tuple(names)
        self.degrees = {}
        self.rewrites = {}
        for idx, (name, degree, lower) in enumerate(gens):
            if degree < 1:
                raise ValueError(f"degree of {name} must be >= 1")
            self.degrees[name] = degree
            if isinstance(lower, list):
                terms = {}
                for k, c in enumerate(lower):
                    if QQ(c):
                        e = [0] * len(names)
                        e[idx] = k
                        terms[tuple(e)] = QQ(c)
                low = self.poly_ring.from_terms(terms)
            else:
                low = self.poly_ring.from_terms(lower)
            if low.degree(name) >= degree:
                raise ValueError(f"relation for {name} is not reduced")
            for later in names[idx + 1:]:
                if low.degree(later) > 0:
                    raise ValueError(f"relation for {name} involves later generator {later}")
            self.rewrites[name] = low
        self.dimension = 1
        for name in self.gen_names:
            self.dimension *= self.degrees[name]
        self._basis = None

    def __repr__(self):
        rels = ", ".join(f"{n}^{self.degrees[n]}" for n in self.gen_names)
        return f"QuotRing(Q[{', '.join(self.gen_names)}]; {rels})" if self.gen_names else "QuotRing(Q)"

    # -- constructors --------------------------------------------------------

    def zero(self):
        return QuotElt(self, self.poly_ring.zero())

    def one(self):
        return QuotElt(self, self.poly_ring.one())

    def coerce(self, x):
        if isinstance(x, QuotElt):
            if x.ring is self:
                return x
            raise TypeError("element of a different quotient ring")
        return QuotElt(self, self.poly_ring.const(QQ(x)))

    def gen(self, name):
        return QuotElt(self, self.poly_ring.var(name))

    def from_poly(self, p: MPoly):
        return QuotElt(self, self._reduce(p))

    def from_dense(self, name, coeffs):
        """c0 + c1*g + c2*g^2 + ... for a single generator ``name``."""
        p = self.poly_ring.zero()
        for k, c in enumerate(coeffs):
            p = p + self.poly_ring.var(name, k) * QQ(c)
        return self.from_poly(p)

    # -- reduction -----------------------------------------------------------

    def _reduce(self, p: MPoly) -> MPoly:
        for name in reversed(self.gen_names):
            d = self.degrees[name]
            low = self.rewrites[name]
            while p.degree(name) >= d:
                split = p.coefficients_in(name)
                acc = p.ring.zero()
                for k, coeff in split.items():
                    if k < d:
                        acc = acc + coeff * p.ring.var(name, k)
                    else:
                        acc = acc + coeff * p.ring.var(name, k - d) * low
                p = acc
        return p

    def basis(self):
        """Monomial basis as exponent tuples, in a fixed order."""
        if self._basis is None:
            ranges = [range(self.degrees[n]) for n in self.gen_names]
            self._basis = [tuple(e) for e in product(*ranges)]
        return self._basis

    def to_vector(self, x: "QuotElt"):
        idx = {e: i for i, e in enumerate(self.basis())}
        v = [QQ(0)] * self.dimension
        for e, c in x.rep.terms.items():
            v[idx[e]] = c
        return v

    def from_vector(self, v):
        terms = {e: QQ(c) for e, c in zip(self.basis(), v) if QQ(c)}
        return QuotElt(self, self.poly_ring.from_terms(terms))

    def complex_embeddings(self):
        """All ring homomorphisms to C, as dicts name -> complex root."""
        import numpy as np
        embeddings = [{}]
        for name in self.gen_names:
            d = self.degrees[name]
            low = self.rewrites[name]
            new = []
            for emb in embeddings:
                # h(g) = g^d - low, coefficients embedded via emb
                coeffs = [0j] * (d + 1)
                coeffs[d] = 1.0 + 0j
                for k, cf in low.coefficients_in(name).items():
                    coeffs[k] -= complex(_embed_mpoly(cf, emb))
                roots = np.roots(list(reversed(coeffs)))
                for r in roots:
                    e2 = dict(emb)
                    e2[name] = complex(r)
                    new.append(e2)
            embeddings = new
        return embeddings


def _embed_mpoly(p: MPoly, emb: dict) -> complex:
    total = 0j
    for e, c in p.terms.items():
        t = complex(float(c.numerator) / float(c.denominator))
        for i, k in enumerate(e):
            if k:
                t *= emb[p.ring.names[i]] ** k
        total += t
    return total


class QuotElt:
    """Element of a QuotRing, stored as a reduced MPoly in the generators."""

    __slots__ = ("ring", "rep")

    def __init__(self, ring: QuotRing, rep: MPoly):
        self.ring = ring
        self.rep = rep

    def is_zero(self):
        return self.rep.is_zero()

    def __bool__(self):
        return bool(self.rep)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.coerce(other)
        if not isinstance(other, QuotElt):
            return NotImplemented
        return self.ring is other.ring and self.rep == other.rep

    def __hash__(self):
        return hash((id(self.ring), frozenset(self.rep.terms.items())))

    def __add__(self, other):
        other = self.ring.coerce(other)
        return QuotElt(self.ring, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return QuotElt(self.ring, -self.rep)

    def __sub__(self, other):
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other):
        return self.ring.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuotElt(self.ring, self.rep * QQ(other))
        if not isinstance(other, QuotElt):
            return NotImplemented
        return QuotElt(self.ring, self.ring._reduce(self.rep * other.rep))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuotElt(self.ring, self.rep * (1 / QQ(other)))
        return self * self.ring.coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.ring.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self) -> "QuotElt":
        ring = self.ring
        basis = ring.basis()
        n = ring.dimension
        # columns: self * basis monomial, as vectors
        cols = []
        for e in basis:
            mono = QuotElt(ring, ring.poly_ring.from_terms({e: QQ(1)}))
            cols.append(ring.to_vector(self * mono))
        # solve sum_j x_j * cols[j] = e_1
        mat = [[cols[j][i] for j in range(n)] for i in range(n)]
        rhs = [QQ(1)] + [QQ(0)] * (n - 1)
        sol = _solve_linear(mat, rhs)
        if sol is None:
            raise ZeroDivisor(f"{self} is a zero divisor in {ring}")
        return ring.from_vector(sol)

    def minpoly(self):
        """Monic minimal polynomial over Q of multiplication by this element,
        as a dense Fraction list (constant first)."""
        ring = self.ring
        n = ring.dimension
        rows = []  # reduced echelon rows: (vector, expression in power basis)
        power = ring.one()
        reprs = []
        for d in range(n + 1):
            v = ring.to_vector(power)
            reprs.append(v)
            # attempt to express v as a combination of previous powers
            mat = [[reprs[j][i] for j in range(d)] for i in range(n)]
            sol = _solve_linear_overdetermined(mat, v)
            if sol is not None:
                # power^d = sum sol[j] * power^j  ->  minpoly
                coeffs = [-c for c in sol] + [QQ(1)]
                return coeffs
            power = power * self
        raise AssertionError("no minimal polynomial found (impossible)")

    def __str__(self):
        return str(self.rep)

    __repr__ = __str__


def _solve_linear(mat, rhs):
    """Solve a square system exactly; None if singular (no unique solution)."""
    n = len(rhs)
    a = [row[:] + [rhs[i]] for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[i][n] for i in range(n)]


def _solve_linear_overdetermined(mat, rhs):
    """Solve mat * x = rhs with mat (n x d), exactly; None if inconsistent."""
    n = len(rhs)
    d = len(mat[0]) if mat and mat[0] else 0
    if d == 0:
        return None if any(rhs) else []
    a = [mat[i][:] + [rhs[i]] for i in range(n)]
    pivots = []
    row = 0
    for col in range(d):
        piv = next((r for r in range(row, n) if a[r][col]), None)
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        pv = a[row][col]
        a[row] = [x / pv for x in a[row]]
        for r in range(n):
            if r != row and a[r][col]:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[row])]
        pivots.append(col)
        row += 1
    for r in range(row, n):
        if a[r][d]:
            return None
    # free coordinates (if any) set to zero
    sol = [QQ(0)] * d
    for r, col in enumerate(pivots):
        sol[col] = a[r][d]
    return sol


def minpoly(x: QuotElt):
    """Monic minimal polynomial over Q of (multiplication by) a quotient-ring
    element, as a dense coefficient list, constant term first.  In an ambient
    ring with zero divisors this is the least common annihilator across the
    components, so it may factor; the element is always a root."""
    return x.minpoly()


def join(r1: QuotRing, r2: QuotRing, prefix1: str = "", prefix2: str = ""):
    """Tensor two quotient rings over Q; returns (ring, map1, map2).

    Second-ring generator names are prefixed on collision.
    """
    rename1 = {n: prefix1 + n for n in r1.gen_names}
    taken = set(rename1.values())
    rename2 = {}
    for n in r2.gen_names:
        new = prefix2 + n
        k = 0
        while new in taken:
            k += 1
            new = f"{prefix2 or 'g'}{k}_{n}"
        rename2[n] = new
        taken.add(new)
    gen_order = [rename1[n] for n in r1.gen_names] + [rename2[n] for n in r2.gen_names]
    gens = []
    for n in r1.gen_names:
        gens.append((rename1[n], r1.degrees[n],
                     _terms_as_named(r1.rewrites[n], r1, rename1, gen_order)))
    for n in r2.gen_names:
        gens.append((rename2[n], r2.degrees[n],
                     _terms_as_named(r2.rewrites[n], r2, rename2, gen_order)))
    joint = QuotRing(gens)

    def transport(x, src, rename):
        terms = _terms_as_named(x.rep, src, rename, gen_order)
        return QuotElt(joint, joint.poly_ring.from_terms(terms))

    return joint, (lambda x: transport(x, r1, rename1)), (lambda x: transport(x, r2, rename2))


def _terms_as_named(p: MPoly, src: QuotRing, rename: dict, gen_order: list):
    """Re-key an MPoly's terms into the exponent layout of ``gen_order``."""
    pos = {n: i for i, n in enumerate(gen_order)}
    out = {}
    for e, c in p.terms.items():
        new_e = [0] * len(gen_order)
        for n, k in zip(src.gen_names, e):
            if k:
                new_e[pos[rename[n]]] = k
        out[tuple(new_e)] = out.get(tuple(new_e), QQ(0)) + c
    return {e: c for e, c in out.items() if c}
