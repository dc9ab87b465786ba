"""Local factors, Weil bounds, interpolation factors and the correction
polynomial."""

from fractions import Fraction as F

import pytest

from rankin.euler import (BadPrimeError, EulerFactor, functional_symmetry_check,
                          hecke_polynomial, interpolation_factors,
                          joint_coefficient_ring, local_correction,
                          rankin_euler_factor, weil_check)
from rankin.forms import load_bundled


@pytest.fixture(scope="module")
def pair():
    return load_bundled("f11.eigenform"), load_bundled("g26.eigenform")


@pytest.fixture(scope="module")
def streams(pair):
    f, g = pair
    joint, mf, mg = joint_coefficient_ring(f, g)

    def fstream(p, r):
        return mf(f.prime_power(p, r))

    def gstream(p, r):
        return mg(g.prime_power(p, r))

    return joint, mf, mg, fstream, gstream


class TestHeckePolynomial:
    def test_level11_at_2(self, pair):
        f, _ = pair
        c0, c1, c2 = hecke_polynomial(f, 2)
        assert c0 == f.ring.coerce(2) and c1 == f.ring.coerce(2)

    def test_ap_zero_weight2(self, pair):
        f, _ = pair
        # a_19 vanishes, so the quadratic is X^2 + 19
        c0, c1, c2 = hecke_polynomial(f, 19)
        assert c0 == f.ring.coerce(19)
        assert c1.is_zero()

    def test_level26_at_5(self, pair):
        _, g = pair
        c0, c1, _ = hecke_polynomial(g, 5)
        t = g.ring.gen("t")
        assert c1 == 3 * t           # -a_5 = 3i
        assert c0 == g.ring.coerce(-5)  # 5 * (5/13) = -5

    def test_bad_prime_rejected(self, pair):
        f, g = pair
        with pytest.raises(BadPrimeError):
            hecke_polynomial(f, 11)
        with pytest.raises(BadPrimeError):
            hecke_polynomial(g, 13)


class TestRankinFactor:
    def test_degree_four_and_constant_one(self, pair):
        fac = rankin_euler_factor(*pair, 3)
        assert fac.degree == 4
        assert fac.coefficients[0] == fac.ring.one()

    def test_explicit_value_at_3(self, pair):
        # a_3(f) = a_3(g) = -1 and both characters take value 1 at 3
        fac = rankin_euler_factor(*pair, 3)
        vals = [c.rep.constant_value() for c in fac.coefficients]
        assert vals == [1, -1, -12, -9, 81]

    def test_zero_coefficients_shape(self, pair):
        # with a_p = 0 on both sides and trivial characters the display
        # collapses to 1 - 2p^2 X^2 + p^4 X^4; emulate by direct formula
        from rankin.quotring import QuotRing
        R = QuotRing([("t", 1, [F(0)])])

        class Dummy:
            level, weight, ring = 1, 2, R

            def a(self, n):
                return R.zero() if n == 5 else R.one()

            def char_value(self, n):
                return R.one()

        fac = rankin_euler_factor(Dummy(), Dummy(), 5)
        vals = [c.rep.constant_value() for c in fac.coefficients]
        assert vals == [1, 0, -2 * 25, 0, 5 ** 4]

    def test_bad_prime_rejected(self, pair):
        with pytest.raises(BadPrimeError):
            rankin_euler_factor(*pair, 13)


class TestWeil:
    @pytest.mark.parametrize("p", [3, 5, 7, 17, 19, 23, 29, 31, 37, 41, 43, 47])
    def test_good_primes(self, pair, p):
        fac = rankin_euler_factor(*pair, p)
        assert weil_check(fac, p, 2, 2, 1e-9)

    def test_vacuous_degree_zero(self):
        assert weil_check(EulerFactor([F(1)], None), 3, 2, 2) is True

    def test_adversarial_factor_fails(self):
        assert weil_check(EulerFactor([F(1), F(-9)], None), 3, 2, 2) is False


class TestInterpolationFactors:
    def test_beta_zero_gives_one(self):
        from rankin.euler import SYM_RING
        from rankin.poly import RatFunc
        fac = interpolation_factors(1)
        val = fac.modification.num.subs({"be": F(0)})
        den = fac.modification.den.subs({"be": F(0)})
        assert RatFunc(val, den) == RatFunc.from_poly(SYM_RING.one())

    def test_star_factor_unit_at_bundled_data(self):
        # f at p = 17: alpha = unit root, beta/alpha has valuation 1, so
        # 1 - beta/alpha is a unit at the chosen place
        from rankin.forms import PadicPlace, load_bundled, p_stabilize
        f = load_bundled("f11.eigenform")
        st = p_stabilize(f, 17)
        place = PadicPlace(st.ring, 17)
        # take alpha the unit root (swap if needed)
        a, b = st.alpha, st.beta
        if place.valuation(a) != 0:
            a, b = b, a
        val = place.valuation(st.ring.one() - b * a.inverse())
        assert val == 0

    @pytest.mark.parametrize("k", range(1, 6))
    def test_symmetry_sweep(self, k):
        for l in range(1, k + 1):
            for j in range(0, k + 1):
                assert functional_symmetry_check(k, l, j)

    def test_literal_star_reading_is_false(self):
        assert functional_symmetry_check(2, 2, 1, literal_reading=True) is False

    def test_shifted_twist_fails(self):
        assert functional_symmetry_check(4, 2, 2, mutate_shift=1) is False

    def test_expanded_product_form(self):
        # at twist 1 the convolution factor times (al ga)(al de) is
        # (1 - be ga/p)(1 - be de/p)(al ga - 1)(al de - 1)
        from rankin.euler import SYM_RING
        from rankin.poly import RatFunc
        al, be, ga, de, p = SYM_RING.vars()
        fac = interpolation_factors(1)
        lhs = fac.convolution * RatFunc.from_poly(al * ga * al * de)
        expect = (RatFunc(p - be * ga, p) * RatFunc(p - be * de, p)
                  * RatFunc.from_poly((al * ga - 1) * (al * de - 1)))
        assert lhs == expect


def _bad_factors(streams):
    joint, mf, mg, fstream, gstream = streams
    f, g = load_bundled("f11.eigenform"), load_bundled("g26.eigenform")
    one = joint.one()
    a2g, a11g, a13g = mg(g.a(2)), mg(g.a(11)), mg(g.a(13))
    a2f, a11f, a13f = mf(f.a(2)), mf(f.a(11)), mf(f.a(13))
    return {
        2: [one, -(a2g * a2f), a2g * a2g * 2],
        11: [one, -(a11f * a11g), a11f * a11f * mg(g.char_value(11)) * 11],
        13: [one, -(a13g * a13f), a13g * a13g * 13],
    }


class TestLocalCorrection:
    def test_coprime_newform_pair_gives_one(self, streams):
        joint, mf, mg, fstream, gstream = streams
        C, certified, residuals = local_correction(
            fstream, gstream, 286, _bad_factors(streams), 8, joint)
        assert certified and C.is_one(), residuals

    def test_trivial_level(self, streams):
        joint, *_, fstream, gstream = streams
        C, certified, _ = local_correction(fstream, gstream, 1, {}, 8, joint)
        assert certified and C.is_one()

    def test_oldform_dilation_still_polynomial(self, streams):
        joint, mf, mg, fstream, gstream = streams
        g = load_bundled("g26.eigenform")

        def gstream11(p, r):
            if p == 11:
                return mg(g.prime_power(11, r - 1)) if r >= 1 else joint.zero()
            return gstream(p, r)

        C, certified, _ = local_correction(
            fstream, gstream11, 286, _bad_factors(streams), 8, joint)
        assert certified
        assert C.degree() == 1  # C = x11

    def test_wrong_factor_not_certified(self, streams):
        joint, mf, mg, fstream, gstream = streams
        bad = dict(_bad_factors(streams))
        wrong = list(bad[11])
        wrong[2] = wrong[2] * 7
        bad[11] = wrong
        C, certified, residuals = local_correction(
            fstream, gstream, 11, {11: wrong}, 8, joint)
        assert not certified
        assert residuals[11]["error"] == "polynomiality not certified"

    def test_multiplicative_across_primes(self, streams):
        # use a dilated test vector so the correction is a nontrivial monomial
        joint, mf, mg, fstream, gstream = streams
        g = load_bundled("g26.eigenform")

        def gstream11(p, r):
            if p == 11:
                return mg(g.prime_power(11, r - 1)) if r >= 1 else joint.zero()
            return gstream(p, r)

        bad = _bad_factors(streams)
        C_all, cert, _ = local_correction(fstream, gstream11, 286, bad, 8, joint)
        assert cert
        combined = {}
        for idx, p in enumerate((2, 11, 13)):
            Cp, certp, _ = local_correction(fstream, gstream11, p, {p: bad[p]},
                                            8, joint)
            assert certp
            if not combined:
                combined = {(k[0], 0, 0): v for k, v in Cp.terms.items()}
                continue
            new = {}
            for e1, v1 in combined.items():
                for (k,), v2 in Cp.terms.items():
                    e = list(e1)
                    e[idx] = k
                    new[tuple(e)] = v1 * v2
            combined = new
        assert dict(C_all.terms) == combined
