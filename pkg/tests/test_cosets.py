"""Double-coset algebra over congruence subgroups and Iwahori invariants."""

from fractions import Fraction as F

import pytest

from rankin.cosets import (CongSubgroup, CosetMatrix, IwahoriCell, coset_reps,
                           double_coset_multiply, iwahori_index,
                           iwahori_invariant, same_right_coset,
                           t_prime_square_identity)


class TestCosetReps:
    def test_classical_degree_level_one(self):
        reps = coset_reps(CongSubgroup.sl2(1), CosetMatrix((1, 0, 0, 3)))
        assert len(reps) == 4

    def test_identity_coset(self):
        G = CongSubgroup.gamma1(5)
        assert len(coset_reps(G, CosetMatrix((1, 0, 0, 1)))) == 1

    def test_degree_three_with_lattice_oracle(self):
        # oracle: the row spans mod 2 realize the three index-2 subgroups of
        # (Z/2)^2, pairwise distinct
        G = CongSubgroup.gamma1(5)
        reps = coset_reps(G, CosetMatrix((1, 0, 0, 2)))
        assert len(reps) == 3
        spans = set()
        for x in reps:
            a, b, c, d = x.entries
            spans.add(frozenset({(0, 0), (a % 2, b % 2), (c % 2, d % 2),
                                 ((a + c) % 2, (b + d) % 2)}))
        assert len(spans) == 3

    def test_reps_pairwise_inequivalent_and_in_double_coset(self):
        G = CongSubgroup.gamma1(5)
        alpha = CosetMatrix((2, 0, 0, 1))
        reps = coset_reps(G, alpha)
        for i, x in enumerate(reps):
            for y in reps[i + 1:]:
                assert not same_right_coset(G, x.entries, y.entries)

    def test_enumeration_bound_error(self):
        G = CongSubgroup.gamma1(5)
        with pytest.raises(ValueError, match="bound"):
            coset_reps(G, CosetMatrix((64, 0, 0, 1)))


class TestHeckeSquare:
    @pytest.mark.parametrize("N,p", [(5, 2), (7, 2), (5, 3)])
    def test_square_identity(self, N, p):
        report = t_prime_square_identity(N, p)
        assert report["holds"], report
        cells = {e["cell"]: (e["multiplicity"], e["degree"])
                 for e in report["constituents"]}
        assert cells["S'"] == (1, p * p + p)
        assert cells["<p^-1> R_p"] == (p + 1, 1)

    def test_multiplication_by_identity(self):
        G = CongSubgroup.gamma1(5)
        eye = CosetMatrix((1, 0, 0, 1))
        prod = double_coset_multiply(G, eye, CosetMatrix((2, 0, 0, 1)))
        assert len(prod) == 1
        rep, mult, degree = prod[0]
        assert mult == 1 and degree == 3

    def test_associativity_small(self):
        G = CongSubgroup.gamma1(4)
        a = CosetMatrix((2, 0, 0, 1))
        eye = CosetMatrix((1, 0, 0, 1))
        left = double_coset_multiply(G, a, eye)
        right = double_coset_multiply(G, eye, a)
        assert [(m, d) for _, m, d in left] == [(m, d) for _, m, d in right]

    def test_associativity_on_triple(self):
        # (T' T') T' = T' (T' T') as formal combinations of double cosets
        from rankin.cosets import same_double_coset
        G = CongSubgroup.gamma1(5)
        t = CosetMatrix((2, 0, 0, 1))

        def multiply_combo(combo, beta):
            out = []
            for rep, mult in combo:
                for rep2, mult2, _ in double_coset_multiply(G, rep, beta):
                    for k, (r, m) in enumerate(out):
                        if same_double_coset(G, r, rep2):
                            out[k] = (r, m + mult * mult2)
                            break
                    else:
                        out.append((rep2, mult * mult2))
            return out

        square = [(rep, mult) for rep, mult, _ in double_coset_multiply(G, t, t)]
        left = multiply_combo(square, t)
        # right is T' * (T' T'): multiply each square constituent by t on the left
        right = []
        for rep, mult in square:
            for rep2, mult2, _ in double_coset_multiply(G, t, rep):
                for k, (r, m) in enumerate(right):
                    if same_double_coset(G, r, rep2):
                        right[k] = (r, m + mult * mult2)
                        break
                else:
                    right.append((rep2, mult * mult2))
        assert len(left) == len(right)
        for rep, mult in left:
            match = [m for r, m in right if same_double_coset(G, r, rep)]
            assert match == [mult]


class TestIwahori:
    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("j", [0, 1, 2, 3])
    def test_index_table(self, p, j):
        diag = (F(p) ** j, F(0), F(0), F(p) ** -j)
        assert iwahori_index(diag, p) == p ** abs(2 * j)
        anti = (F(0), -(F(p) ** -j), F(p) ** j, F(0))
        assert iwahori_index(anti, p) == p ** abs(2 * j + 1)

    def test_identity_index(self):
        assert iwahori_index((F(1), F(0), F(0), F(1)), 7) == 1

    def test_four_distinct_cells(self):
        p, j = 3, 1
        reps = [(F(p) ** -j, F(0), F(0), F(p) ** j),
                (F(0), -(F(p) ** -j), F(p) ** j, F(0)),
                (F(p) ** j, F(0), F(0), F(p) ** -j),
                (F(0), -(F(p) ** j), F(p) ** -j, F(0))]
        cells = {iwahori_invariant(m, p) for m in reps}
        assert len(cells) == 4

    def test_cell_indices_match_degree_pattern(self):
        # the four cells over the Cartan cell at j=1 carry indices
        # {p^2, p, p, 1}-patterned degrees
        p = 3
        reps = [(F(p) ** -1, F(0), F(0), F(p)),
                (F(0), -(F(p) ** -1), F(p), F(0)),
                (F(p), F(0), F(0), F(p) ** -1),
                (F(0), -F(p), F(p) ** -1, F(0))]
        idx = sorted(iwahori_index(m, p) for m in reps)
        assert idx == [3, 3 ** 2, 3 ** 2, 3 ** 3]

    def test_invariance_under_random_iwahori_multiplication(self):
        import random
        rng = random.Random(7)
        p = 2
        base = (F(0), -F(1, 2), F(2), F(0))
        cell0 = iwahori_invariant(base, p)
        assert cell0 == IwahoriCell("antidiagonal", 1)
        for _ in range(8):
            # random Iwahori elements: unipotents and diagonal units mod p^3
            def rand_u():
                c = rng.randrange(-p ** 3, p ** 3)
                b = p * rng.randrange(-p ** 2, p ** 2)
                ad = 1 + b * c
                # build (a b; c d) in SL2 with b in pZ: take (1, b; c, 1 + bc)
                return (F(1), F(b), F(c), F(1 + b * c))
            u1, u2 = rand_u(), rand_u()
            m = _mat_mul3(u1, base, u2)
            assert iwahori_invariant(m, p) == cell0

    def test_rejects_non_sl2(self):
        with pytest.raises(ValueError):
            iwahori_invariant((F(2), F(0), F(0), F(2)), 2)


def _mat_mul3(a, b, c):
    def mul(x, y):
        return (x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3])
    return mul(mul(a, b), c)
