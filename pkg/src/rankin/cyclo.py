"""Cyclotomic fields Q(zeta_L) with exact arithmetic.

Elements are stored reduced modulo the L-th cyclotomic polynomial, so equality
is a structural check on coefficient vectors.  The fixed complex embedding
sends the generator to exp(2*pi*i/L).
"""

from __future__ import annotations

import cmath
from fractions import Fraction

from .poly import (QQ, cyclotomic_polynomial, poly_divmod, poly_trim,
                   poly_xgcd)


def _as_int(c):
    return c.numerator if c.denominator == 1 else c


def euler_phi(n: int) -> int:
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            result *= (p - 1) * p ** (e - 1)
        p += 1
    if m > 1:
        result *= m - 1
    return result


class CyclotomicField:
    """Q(zeta_L), represented as Q[x]/(Phi_L(x))."""

    _cache: dict = {}

    def __new__(cls, L: int):
        if L in cls._cache:
            return cls._cache[L]
        self = super().__new__(cls)
        cls._cache[L] = self
        return self

    def __init__(self, L: int):
        if getattr(self, "_ready", False):
            return
        if L < 1:
            raise ValueError("conductor must be positive")
        self.L = L
        self.phi = euler_phi(L)
        self.modulus = cyclotomic_polynomial(L)
        # x^k reduced mod Phi_L for 0 <= k < L, as dense vectors of length phi
        self._powers = []
        for k in range(L):
            xk = [QQ(0)] * k + [QQ(1)]
            _, r = poly_divmod(xk, self.modulus)
            self._powers.append(self._pad(r))
        # reduction rows for the product range 0 <= k <= 2 phi - 2;
        # cyclotomic reduction has integer entries, stored as ints so that
        # integral arithmetic stays on the fast integer path
        self._powers = [tuple(_as_int(c) for c in row) for row in self._powers]
        self._redrows = []
        for k in range(2 * self.phi - 1):
            xk = [QQ(0)] * k + [QQ(1)]
            _, r = poly_divmod(xk, self.modulus)
            self._redrows.append(tuple(_as_int(c) for c in self._pad(r)))
        self._ready = True

    def _pad(self, coeffs):
        return tuple(list(coeffs) + [QQ(0)] * (self.phi - len(coeffs)))

    def __repr__(self):
        return f"Q(zeta_{self.L})"

    # -- constructors --------------------------------------------------------

    def zero(self):
        return CycloElt(self, (0,) * self.phi)

    def one(self):
        return self.zeta(0)

    def coerce(self, x):
        if isinstance(x, CycloElt):
            if x.field is self:
                return x
            raise TypeError(f"element of {x.field}, expected {self}")
        x = x if isinstance(x, int) else QQ(x)
        v = [0] * self.phi
        v[0] = x
        return CycloElt(self, tuple(v))

    def zeta(self, k: int = 1):
        """zeta_L^k."""
        return CycloElt(self, self._powers[k % self.L])

    def from_coeffs(self, coeffs):
        coeffs = [QQ(c) for c in coeffs]
        if len(coeffs) > self.phi:
            _, r = poly_divmod(coeffs, self.modulus)
            coeffs = list(r)
        return CycloElt(self, self._pad(coeffs))

    def reduce(self, dense):
        _, r = poly_divmod(dense, self.modulus)
        return CycloElt(self, self._pad(r))

    def galois(self, t: int):
        """The automorphism zeta -> zeta^t as a callable (t coprime to L)."""
        from math import gcd
        if gcd(t, self.L) != 1:
            raise ValueError(f"{t} is not a unit modulo {self.L}")
        images = [self._powers[(k * t) % self.L] for k in range(self.phi)]

        def sigma(x: "CycloElt") -> "CycloElt":
            v = [QQ(0)] * self.phi
            for k, c in enumerate(x.coeffs):
                if c:
                    img = images[k]
                    for i in range(self.phi):
                        v[i] += c * img[i]
            return CycloElt(self, tuple(v))

        return sigma

    def complex_root(self) -> complex:
        return cmath.exp(2j * cmath.pi / self.L)


class CycloElt:
    """Element of a CyclotomicField, reduced mod Phi_L."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self):
        return all(not c for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.coerce(other)
        if not isinstance(other, CycloElt):
            return NotImplemented
        return self.field is other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.L, self.coeffs))

    def __add__(self, other):
        other = self.field.coerce(other)
        return CycloElt(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloElt(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self.field.coerce(other))

    def __rsub__(self, other):
        return self.field.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloElt(self.field, tuple(a * other for a in self.coeffs))
        if not isinstance(other, CycloElt):
            return NotImplemented
        phi = self.field.phi
        conv = [0] * (2 * phi - 1)
        bs = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(bs):
                    if b:
                        conv[i + j] += a * b
        out = conv[:phi]
        rows = self.field._redrows
        for k in range(phi, 2 * phi - 1):
            c = conv[k]
            if c:
                row = rows[k]
                for i in range(phi):
                    r = row[i]
                    if r:
                        out[i] += c * r
        return CycloElt(self.field, tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = QQ(other)
            return CycloElt(self.field, tuple(a / c for a in self.coeffs))
        return self * self.field.coerce(other).inverse()

    def __rtruediv__(self, other):
        return self.field.coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def inverse(self) -> "CycloElt":
        if self.is_zero():
            raise ZeroDivisionError(f"0 is not invertible in {self.field}")
        g, u, _ = poly_xgcd(poly_trim(list(self.coeffs)), self.field.modulus)
        if len(g) != 1:
            raise ZeroDivisionError(
                f"non-unit {self} in {self.field}: gcd with modulus is {g}")
        inv = [c / g[0] for c in u]
        return self.field.reduce(inv)

    def conjugate(self) -> "CycloElt":
        """Complex conjugation zeta -> zeta^-1."""
        return self.field.galois(-1 % self.field.L if self.field.L > 1 else 1)(self) \
            if self.field.L > 2 else self

    def to_complex(self) -> complex:
        z = self.field.complex_root()
        return sum(float(c) * z ** k for k, c in enumerate(self.coeffs))

    def rational_part(self):
        """The element as a Fraction, if it is rational."""
        if any(self.coeffs[1:]):
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __str__(self):
        name = f"z_{self.field.L}"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                v = name if k == 1 else f"{name}^{k}"
                if c == 1:
                    parts.append(v)
                elif c == -1:
                    parts.append(f"-{v}")
                else:
                    parts.append(f"{c}*{v}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"

    __repr__ = __str__
