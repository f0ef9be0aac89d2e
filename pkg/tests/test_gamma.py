from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gammans.errors import UnsupportedRankError
from gammans.gamma import (
    GLWeight,
    coefficients_module,
    cusp_pair_domain,
    first_nonzero_cusp_pair,
    gamma_cohomology,
    gl2_h1,
    gl2_normal_form,
    gl_invariants_wedge,
    hairy_dim,
    pad_first_row,
    parabolic_projection,
    schur_dim,
    schur_weyl_wedge,
    symplectic_detection,
    theorem_2mn_summand,
    vcd,
    w_module,
)
from gammans.partitions import Partition, partitions_of
from gammans.rep_ring import ModuleSum, parse_module_sum

P = ModuleSum.irreducible


def ssyt_count(lam, N):
    """Brute force: semistandard fillings of lam with entries 1..N."""
    lam = tuple(lam)
    cells = [(i, j) for i in range(len(lam)) for j in range(lam[i])]
    filling = {}

    def rec(k):
        if k == len(cells):
            return 1
        i, j = cells[k]
        lo = 1
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        total = 0
        for v in range(lo, N + 1):
            filling[(i, j)] = v
            total += rec(k + 1)
        return total

    return rec(0)


class TestGammaCohomology:
    def test_examples(self):
        assert gamma_cohomology(1, 3, 2) == P((1, 1, 1))
        h = gamma_cohomology(2, 5, 4)
        assert h == P((3, 2)) + P((2, 2, 1)) and h.dimension == 10
        h = gamma_cohomology(2, 10, 7)
        assert h == parse_module_sum("(6,1^4) + (5,2,1^3) + (5,1^5) + (4,2,1^4)")
        assert h.dimension == 1050

    def test_degenerate_signatures(self):
        assert gamma_cohomology(1, 0, 0) == P(())
        assert gamma_cohomology(1, 0, 1).is_zero()
        assert gamma_cohomology(0, 5, 0) == P((5,))
        assert gamma_cohomology(0, 5, 1).is_zero()
        assert gamma_cohomology(2, 4, -1).is_zero()
        assert gamma_cohomology(2, -1, 0).is_zero()

    def test_unsupported_rank(self):
        with pytest.raises(UnsupportedRankError):
            gamma_cohomology(3, 0, 0)

    def test_rank_two_zero_column(self):
        for s in range(21):
            for m in range(6):
                assert gamma_cohomology(2, s, 4 * m + 2).is_zero()

    def test_rank_one_odd_and_dims(self):
        for s in range(1, 21):
            for i in range(s + 3):
                expect = comb(s - 1, i) if i % 2 == 0 and i <= s - 1 else 0
                assert gamma_cohomology(1, s, i).dimension == expect

    def test_vanishing_above_vcd(self):
        for n in (1, 2):
            for s in range(16):
                for i in range(vcd(n, s) + 1, vcd(n, s) + 6):
                    assert gamma_cohomology(n, s, i).is_zero()

    def test_closed_form_dimension(self):
        for m in range(6):
            for s in range(4 * m, 21):
                expect = factorial(s) // (factorial(s - 4 * m) * factorial(2 * m + 1) * factorial(2 * m))
                assert gamma_cohomology(2, s, 4 * m).dimension == expect

    def test_aut_out_consistency(self):
        assert gl2_h1(1, 0).dim == 0
        for k in range(12):
            assert gamma_cohomology(2, 1, k).dimension == gamma_cohomology(2, 0, k).dimension

    def test_row_bound_in_invariant_column(self):
        # (2^2m) plus a horizontal strip: at most 2m+1 rows, so at most three in degree 4
        for s in range(21):
            for m in range(6):
                assert all(len(lam) <= 2 * m + 1 for lam in gamma_cohomology(2, s, 4 * m).support())
        assert max(len(lam) for lam in gamma_cohomology(2, 9, 4).support()) == 3

    def test_representation_stability(self):
        for n in (1, 2):
            for i in range(9):
                for s in range(3 * i, 20):
                    assert gamma_cohomology(n, s + 1, i) == pad_first_row(gamma_cohomology(n, s, i))

    def test_parabolic_projection(self):
        # W_4 has a single nonzero layer, a full one
        assert parabolic_projection(4, 5) == gamma_cohomology(2, 4, 5)
        assert parabolic_projection(4, 4).is_zero()


class TestWModule:
    def test_examples(self):
        assert w_module(2).flattened.is_zero()
        assert w_module(8).flattened == parse_module_sum("(2,1^6) + (2^3,1^2)")
        assert w_module(10).flattened == parse_module_sum("(1^10) + (2,1^8) + (2^3,1^4)")

    def test_layers(self):
        w = w_module(12)
        assert [l.i for l in w.layers] == list(range(6))
        assert [l.kind for l in w.layers] == ["cusp", "full"] * 3
        assert [l.weight for l in w.layers] == [14, 12, 10, 8, 6, 4]
        assert all(l.partition == Partition((2,) * l.i + (1,) * (12 - 2 * l.i)) for l in w.layers)

    def test_shape(self):
        for q in range(0, 31, 2):
            for lam in w_module(q).flattened.support():
                assert lam[0] <= 2

    def test_odd_q(self):
        with pytest.raises(ValueError):
            w_module(3)


class TestGLSide:
    def test_schur_weyl(self):
        assert schur_weyl_wedge(2, 2) == [(GLWeight((2,)), (1, 1)), (GLWeight((1, 1)), (2,))]
        assert schur_weyl_wedge(1, 5) == [(GLWeight((5,)), (1,) * 5)]
        assert [w.parts for w, _ in schur_weyl_wedge(2, 4)] == [(4,), (3, 1), (2, 2)]

    def test_coefficients_module(self):
        terms = coefficients_module(2, 4, 2)
        assert terms[0] == (GLWeight((2,)), P((3, 1)) + P((2, 1, 1)))
        assert terms[1] == (GLWeight((1, 1)), P((4,)) + P((3, 1)) + P((2, 2)))
        assert coefficients_module(2, 3, 4) == []

    def test_normal_form(self):
        assert gl2_normal_form((1, 1)) == (0, 1)
        assert gl2_normal_form((7,)) == (7, 0)
        assert gl2_normal_form((3, 1)) == (2, 1)
        assert GLWeight((3, 1)).normal_form == (2, 1)
        with pytest.raises(UnsupportedRankError):
            gl2_normal_form((1, 1, 1))

    @given(st.integers(0, 30), st.integers(0, 30))
    def test_normal_form_round_trip(self, r, ell):
        lam = tuple(p for p in (r + ell, ell) if p)
        assert gl2_normal_form(lam) == (r, ell)

    def test_gl2_h1(self):
        assert gl2_h1(3, 5).kind == "zero" and gl2_h1(3, 5).dim == 0
        assert gl2_h1(2, 0) == ("cusp", 4, 0)
        assert gl2_h1(10, 1) == ("full", 12, 2)

    def test_invariants(self):
        assert gl_invariants_wedge(2, 4) == P((2, 2))
        assert gl_invariants_wedge(2, 6).is_zero()
        assert gl_invariants_wedge(3, 6) == P((3, 3))
        assert gl_invariants_wedge(2, 0) == P(())


class TestDerivedFormulas:
    def test_2mn_examples(self):
        assert theorem_2mn_summand(3, 1, 9) == 1
        assert theorem_2mn_summand(3, 1, 7) == 0
        assert theorem_2mn_summand(1, 2, 6) == 1
        with pytest.raises(ValueError):
            theorem_2mn_summand(2, 1, 3)

    def test_2mn_matches_rank_one_table(self):
        # the summand P_(s-2m,1^2m) is all of H^2m(Gamma_1,s)
        for m in range(1, 4):
            for s in range(2 * m + 1, 12):
                assert gamma_cohomology(1, s, 2 * m) == P((s - 2 * m,) + (1,) * (2 * m))

    def test_schur_dim(self):
        assert schur_dim((2, 1), 2) == 2
        for N in range(6):
            for k in range(6):
                assert schur_dim((1,) * k, N) == comb(N, k)
                if N:
                    assert schur_dim((k,) if k else (), N) == comb(N + k - 1, k)

    def test_schur_dim_against_ssyt(self):
        for n in range(7):
            for lam in partitions_of(n):
                for N in range(4):
                    assert schur_dim(lam, N) == ssyt_count(lam, N)

    def test_hairy_examples(self):
        h = hairy_dim(1, 3, 1, 2)
        assert h.dimension == 4 and h.terms == [(GLWeight((3,)), 1)]
        h = hairy_dim(2, 4, 1, 2)
        assert h.dimension == 3 and h.terms == [(GLWeight((3, 1)), 1)]
        assert hairy_dim(1, 3, 9, 2).dimension == 0
        assert hairy_dim(1, 3, -1, 2).dimension == 0

    def test_hairy_symmetric_powers(self):
        for k in range(4):
            for N in range(1, 5):
                assert hairy_dim(1, 2 * k + 1, 1, N).dimension == comb(N + 2 * k, 2 * k + 1)

    def test_symplectic_detection(self):
        assert symplectic_detection(1, 1, 0) == (1, (3,))
        assert symplectic_detection(2, 1, 1) == (5, (3, 3, 1))
        for n in range(1, 4):
            for d in range(3):
                assert symplectic_detection(n, 0, d) == (3 * n + d - 2, (1,) * (n + d))

    def test_cusp_pairs(self):
        assert cusp_pair_domain(2).total == 0
        dom = cusp_pair_domain(6)
        assert dom.total == 1 and dom.target == (26, 15)
        assert [l for l in dom.layers if l[3]] == [(1, 12, "full", 1)]
        dom = cusp_pair_domain(10)
        assert dom.total == 3
        assert [l[0] for l in dom.layers if l[3]] == [1, 3, 5]
        assert first_nonzero_cusp_pair() == 6
