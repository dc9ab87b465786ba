"""The truncated-series container itself: precision bookkeeping, unit
inversion, exponent-lattice alignment, and ring axioms on random series."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankin.cyclo import CyclotomicField
from rankin.qseries import PrecisionError, QSeries

K = CyclotomicField(1)


def series(coeffs, lead=0, unit=False):
    return QSeries(K, lead, [K.coerce(c) for c in coeffs], unit=unit)


rational = st.fractions(min_value=-5, max_value=5,
                        max_denominator=6)


@st.composite
def random_series(draw, n=6, unit=False):
    coeffs = [draw(rational) for _ in range(n)]
    if unit:
        c0 = draw(rational.filter(lambda x: x != 0))
        coeffs[0] = c0
    return series(coeffs, unit=unit)


class TestAxioms:
    @given(random_series(), random_series(), random_series())
    @settings(max_examples=25, deadline=None)
    def test_distributivity_and_associativity(self, a, b, c):
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a

    @given(random_series(unit=True))
    @settings(max_examples=25, deadline=None)
    def test_unit_inverse(self, a):
        assert (a * a.inverse()).truncate(a.prec) == QSeries.one(K, a.prec)

    @given(random_series(unit=True), random_series(unit=True))
    @settings(max_examples=20, deadline=None)
    def test_dlog_is_additive(self, a, b):
        assert (a * b).dlog() == a.dlog() + b.dlog()


class TestPrecision:
    def test_coefficient_beyond_window(self):
        s = series([1, 2, 3])
        assert s.coefficient(2) == K.coerce(3)
        with pytest.raises(PrecisionError):
            s.coefficient(3)

    def test_off_lattice_coefficient_is_zero(self):
        s = series([1, 2], lead=F(1, 12))
        assert s.coefficient(0).is_zero()
        assert s.coefficient(F(1, 12) + 1) == K.coerce(2)

    def test_multiplication_window(self):
        a = series([1] * 10)
        b = series([1] * 4)
        assert (a * b).prec == 4

    def test_incompatible_lattices_rejected(self):
        a = series([1, 2], lead=F(1, 12))
        b = series([1, 2], lead=F(1, 7))
        with pytest.raises(ValueError, match="lattice"):
            a + b

    def test_aligned_fractional_lattices_add(self):
        a = series([1, 2], lead=F(1, 12))
        b = series([5, 7], lead=F(13, 12))
        s = a + b
        assert s.coefficient(F(1, 12)) == K.coerce(1)
        assert s.coefficient(F(13, 12)) == K.coerce(7)

    def test_subst_power_scales_lead(self):
        a = series([1, 2, 3], lead=F(1, 2))
        b = a.subst_power(2)
        assert b.lead == 1
        assert b.coefficient(3) == K.coerce(2)

    def test_qdq_uses_exact_exponents(self):
        a = series([1, 2], lead=F(1, 12))
        d = a.qdq()
        assert d.coefficient(F(1, 12)) == K.coerce(F(1, 12))
        assert d.coefficient(F(13, 12)) == K.coerce(2 * F(13, 12))
