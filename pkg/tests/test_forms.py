"""Eigenform ingestion, the eta oracle, stabilization, the root-ratio minimal
polynomial, the congruence scan and the hypothesis checklist."""

from fractions import Fraction as F
from math import gcd

import pytest

from rankin.forms import (DirichletChar, FormDataError, eta_oracle_level11,
                          congruence_prime_scan, hypothesis_report,
                          is_root_of_unity_poly, load_bundled, parse_eigenform,
                          p_stabilize, ratio_minpoly_and_root_of_unity,
                          serialize_eigenform)


@pytest.fixture(scope="module")
def f11():
    return load_bundled("f11.eigenform")


@pytest.fixture(scope="module")
def g26():
    return load_bundled("g26.eigenform")


class TestIngestion:
    def test_first_coefficients(self, f11, g26):
        assert [f11.a(n).rep.constant_value() for n in range(1, 6)] == [1, -2, -1, 2, 1]
        t = g26.ring.gen("t")
        assert g26.a(2) == t
        assert g26.a(3) == -g26.ring.one()
        assert g26.a(4) == -g26.ring.one()
        assert g26.a(5) == -3 * t

    def test_round_trip_bit_exact(self, f11, g26):
        for form in (f11, g26):
            text = serialize_eigenform(form)
            assert serialize_eigenform(parse_eigenform(text)) == text

    def test_multiplicativity_violation_detected(self, f11):
        text = serialize_eigenform(f11)
        lines = text.splitlines()
        out = []
        for line in lines:
            if line.startswith("6:"):
                out.append("6: 7")
            else:
                out.append(line)
        with pytest.raises(FormDataError, match=r"recursion|multiplicativity"):
            parse_eigenform("\n".join(out))

    def test_recursion_violation_reports_witness(self, f11):
        text = serialize_eigenform(f11)
        out = [("4: 5" if line.startswith("4:") else line)
               for line in text.splitlines()]
        with pytest.raises(FormDataError, match=r"\(2, 2\)"):
            parse_eigenform("\n".join(out))

    def test_character_values(self, g26):
        chi = g26.character
        assert chi.value(3) == F(1)    # 3 = 4^2 mod 13 is a square
        assert chi.value(7) == F(-1)
        assert chi.value(13) == 0 and chi.value(2) == 0

    def test_bad_homomorphism_rejected(self, g26):
        with pytest.raises(FormDataError):
            DirichletChar(26, {7: F(2)}, g26.ring)

    def test_parse_error_reports_line(self):
        text = "level=11 weight=2 charmod=11 field=t\n1: 1\n2: zzz\n"
        with pytest.raises(FormDataError, match="line 3"):
            parse_eigenform(text)

    def test_missing_index_reported(self):
        text = "level=11 weight=2 charmod=11 field=t\n1: 1\n3: -1\n"
        with pytest.raises(FormDataError, match="missing coefficient"):
            parse_eigenform(text)


class TestEtaOracle:
    def test_matches_bundled_form(self, f11):
        eta = eta_oracle_level11(f11.bound)
        for n, c in enumerate(eta, start=1):
            assert f11.a(n) == f11.ring.coerce(c)

    def test_multiplicative_to_200(self):
        eta = eta_oracle_level11(200)
        for m in range(2, 201):
            for n in range(2, 200 // m + 1):
                if gcd(m, n) == 1:
                    assert eta[m * n - 1] == eta[m - 1] * eta[n - 1]

    def test_bad_prime_power_recursion(self):
        eta = eta_oracle_level11(121)
        assert eta[121 - 1] == eta[11 - 1] ** 2


class TestStabilization:
    def test_ordinary_at_17(self, f11, g26):
        st_f = p_stabilize(f11, 17)
        st_g = p_stabilize(g26, 17)
        assert st_f.ordinary and st_g.ordinary
        assert sorted(st_f.root_valuations) == [0, 1]
        assert sorted(st_g.root_valuations) == [0, 1]

    def test_root_relations(self, f11):
        st = p_stabilize(f11, 17)
        ap = None
        # alpha + beta = a_p and alpha beta = p (weight 2, trivial nebentypus)
        s = st.alpha + st.beta
        prod = st.alpha * st.beta
        assert s == st.ring.coerce(-2)
        assert prod == st.ring.coerce(17)

    def test_nonordinary_slopes(self, f11):
        # a_19(f11) = 0: both slopes 1/2
        assert f11.a(19).is_zero()
        st = p_stabilize(f11, 19)
        assert not st.ordinary
        assert st.slopes == (F(1, 2), F(1, 2))

    def test_bad_prime_rejected(self, f11):
        with pytest.raises(FormDataError):
            p_stabilize(f11, 11)


class TestRatioMinpoly:
    def test_bundled_pair_at_17(self, f11, g26):
        mp, is_ru = ratio_minpoly_and_root_of_unity(
            p_stabilize(f11, 17), p_stabilize(g26, 17))
        assert mp == [F(1), F(6, 17), F(-21, 17), F(6, 17), F(1)]
        assert is_ru is False

    def test_same_form_gives_one(self, f11):
        st = p_stabilize(f11, 17)
        mp, is_ru = ratio_minpoly_and_root_of_unity(st, st)
        assert mp == [F(-1), F(1)] and is_ru is True

    def test_quartic_cyclotomic_detected(self):
        assert is_root_of_unity_poly([F(1), F(0), F(1)]) is True      # x^2 + 1
        assert is_root_of_unity_poly([F(1), F(-1), F(1)]) is True     # x^2 - x + 1
        assert is_root_of_unity_poly([F(1), F(6, 17), F(-21, 17), F(6, 17), F(1)]) is False
        assert is_root_of_unity_poly([F(-2), F(1)]) is False


class TestCongruenceScan:
    def test_window_7_to_50_all_witnessed(self, f11, g26):
        window = [p for p in range(7, 51) if all(p % q for q in range(2, p))]
        rep = congruence_prime_scan(f11, g26, [g26.character], 100, window)
        flagged = {p for p, entries in rep.items()
                   if any(w is None for _, w in entries)}
        assert flagged == set()

    def test_only_5_flagged_when_included(self, f11, g26):
        window = [5] + [p for p in range(7, 51) if all(p % q for q in range(2, p))]
        rep = congruence_prime_scan(f11, g26, [g26.character], 100, window)
        flagged = {p for p, entries in rep.items()
                   if any(w is None for _, w in entries)}
        assert flagged == {5}

    def test_identical_forms_always_flagged(self, f11):
        rep = congruence_prime_scan(f11, f11, [], 50, [7, 11, 13])
        assert all(w is None for entries in rep.values() for _, w in entries)

    def test_witnesses_monotone_in_bound(self, f11, g26):
        small = congruence_prime_scan(f11, g26, [g26.character], 40, [17, 29])
        large = congruence_prime_scan(f11, g26, [g26.character], 100, [17, 29])
        for p in (17, 29):
            for (l1, w1), (l2, w2) in zip(small[p], large[p]):
                if w1 is not None:
                    assert w2 == w1


class TestHypothesisReport:
    def test_bundled_pair_at_17(self, f11, g26):
        rep = hypothesis_report(f11, g26, 17)
        decidable = {k: v for k, v in rep.items() if v[0] != "EXTERNAL"}
        assert all(v[0] == "PASS" for v in decidable.values()), decidable
        assert rep["i_not_cm"][0] == "EXTERNAL"

    def test_fails_viii_at_5(self, f11, g26):
        rep = hypothesis_report(f11, g26, 5)
        assert rep["viii_coefficient_separation"][0] == "FAIL"

    def test_fails_iv_at_3(self, f11, g26):
        rep = hypothesis_report(f11, g26, 3)
        assert rep["iv_p_at_least_5"][0] == "FAIL"
