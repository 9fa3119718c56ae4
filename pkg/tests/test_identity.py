from fractions import Fraction as F
import itertools
import math

import pytest

from partition_identity.comb import gen_binomial
from partition_identity.exact import PolyX, X
from partition_identity.identity import (
    MainParams,
    genfunc_chain_lhs,
    genfunc_chain_rhs,
    lhs_composition_form,
    lhs_main,
    reduced_lhs,
    reduced_rhs,
    rhs_main,
    single_row_series,
    verify_binomial_transform,
    verify_chu_vandermonde,
    verify_exp_log,
    verify_genfunc_chain,
    verify_main,
    verify_reduced,
    verify_rewrite,
    verify_single_row_genfunc,
)


def test_params_validation():
    for bad in [(0, 1, 1), (1, 0, 1), (1, 1, 0), (-2, 1, 1)]:
        with pytest.raises(ValueError):
            MainParams(*bad)


class TestMainSides:
    def test_lhs_examples(self):
        assert lhs_main(MainParams(1, 1, 3)) == PolyX.constant(6)
        assert lhs_main(MainParams(2, 1, 1)) == PolyX.constant(2)
        assert lhs_main(MainParams(2, 3, 1)).is_zero()

    def test_rhs_examples(self):
        assert rhs_main(MainParams(1, 1, 3)) == PolyX.constant(6)
        assert rhs_main(MainParams(2, 1, 1)) == PolyX.constant(2)
        assert rhs_main(MainParams(4, 6, 2)).is_zero()

    def test_three_two_one_by_hand(self):
        # (3): pbin 3 * 3/3; (2,1): pbin 2 * X/2 * 3; (1,1,1): pbin 0
        p = MainParams(3, 2, 1)
        assert lhs_main(p) == PolyX([3, 3])
        assert rhs_main(p) == PolyX([3, 3])

    @pytest.mark.parametrize("s", range(1, 7))
    def test_n1_equals_s_factorial(self, s):
        res = verify_main(MainParams(1, 1, s))
        assert res.passed
        assert lhs_main(MainParams(1, 1, s)) == math.factorial(s)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_degree_bounds(self, n):
        for r in range(1, n + 3):
            for s in (1, 3):
                p = MainParams(n, r, s)
                lhs, rhs = lhs_main(p), rhs_main(p)
                assert lhs.degree is None or lhs.degree <= n - 1
                assert rhs.degree is None or rhs.degree <= r - 1

    def test_r_above_n_is_zero_on_both_sides(self):
        res = verify_main(MainParams(3, 5, 2))
        assert res.passed
        assert res.lhs_value == res.rhs_value == "[]"

    def test_mismatch_reports_first_differing_coefficient(self, monkeypatch):
        import partition_identity.identity as ident

        monkeypatch.setattr(ident, "rhs_main", lambda p: PolyX([3, 4]))
        res = ident.verify_main(MainParams(3, 2, 1))
        assert res.status == "fail"
        assert res.witness == "X^1"

    def test_degree_violation_fails(self, monkeypatch):
        import partition_identity.identity as ident

        monkeypatch.setattr(ident, "lhs_main", lambda p: X**5)
        monkeypatch.setattr(ident, "rhs_main", lambda p: X**5)
        res = ident.verify_main(MainParams(3, 2, 1))
        assert res.status == "fail"
        assert "degree" in res.witness


class TestRewrite:
    def test_examples(self):
        assert lhs_composition_form(MainParams(1, 1, 1)) == PolyX.constant(1)
        assert lhs_composition_form(MainParams(2, 1, 1)) == PolyX.constant(2)
        assert lhs_composition_form(MainParams(3, 2, 1)) == lhs_main(MainParams(3, 2, 1))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_matches_lhs(self, n):
        for r in range(1, n + 1):
            for s in range(1, 4):
                assert verify_rewrite(MainParams(n, r, s)).passed


class TestBinomialTransform:
    def test_examples(self):
        res = verify_binomial_transform(2, 1, 1)
        assert res.passed and res.lhs_value == "2/1"
        for s in range(1, 7):
            assert verify_binomial_transform(1, 1, s).lhs_value == "1/1"

    def test_small_sweep(self):
        for m, k, s in itertools.product(range(1, 8), range(1, 8), range(1, 4)):
            assert verify_binomial_transform(m, k, s).passed


class TestChuVandermonde:
    def test_single_part(self):
        res = verify_chu_vandermonde(2, (1,), 1, 1)
        assert res.passed
        assert res.lhs_value == res.rhs_value == "2/1"

    @pytest.mark.parametrize("n", range(1, 6))
    def test_all_ones(self, n):
        for i in range(1, n + 1):
            for s in range(1, 4):
                res = verify_chu_vandermonde(n, (1,) * n, i, s)
                assert res.passed
                assert res.lhs_value == "1/1"

    def test_preconditions(self):
        with pytest.raises(ValueError):
            verify_chu_vandermonde(2, (1, 1, 1), 1, 1)
        with pytest.raises(ValueError):
            verify_chu_vandermonde(4, (1, 2), 3, 1)

    def test_rhs_matches_plain_vandermonde(self):
        # (-1)^(k-1) binom(-s-1, k-1) == binom(s+k-1, k-1)
        for s in range(1, 6):
            for k in range(1, 8):
                assert (-1) ** (k - 1) * gen_binomial(-s - 1, k - 1) == math.comb(s + k - 1, k - 1)


class TestReduced:
    def test_r1(self):
        for s in range(1, 7):
            assert reduced_lhs(1, s) == PolyX.constant(1)
            assert reduced_rhs(1, s) == PolyX.constant(1)

    def test_rhs_two_one(self):
        assert reduced_rhs(2, 1) == X + 1

    def test_three_two(self):
        assert reduced_lhs(3, 2) == reduced_rhs(3, 2)
        assert verify_reduced(3, 2).passed

    @pytest.mark.parametrize("r", range(1, 9))
    def test_rhs_degree(self, r):
        for s in range(1, 5):
            assert reduced_rhs(r, s).degree == r - 1

    def test_factorization_rebuilds_main_rhs(self):
        # s! * binom(n+s-1, r+s-1) * reduced_rhs == rhs_main
        for n in range(1, 8):
            for r in range(1, n + 1):
                for s in range(1, 4):
                    scale = math.factorial(s) * gen_binomial(n + s - 1, r + s - 1)
                    assert reduced_rhs(r, s) * scale == rhs_main(MainParams(n, r, s))


class TestGenfunc:
    def test_constant_terms_vanish(self):
        assert genfunc_chain_lhs(2, 5).coefficient(0).is_zero()
        assert genfunc_chain_rhs(2, 5).coefficient(0).is_zero()

    def test_chain_s1(self):
        assert verify_genfunc_chain(1, 8).passed

    def test_rhs_coefficients_are_reduced_rhs(self):
        rhs = genfunc_chain_rhs(3, 8)
        for r in range(1, 9):
            assert rhs.coefficient(r) == reduced_rhs(r, 3)

    def test_single_row(self):
        assert verify_single_row_genfunc(1, 10).passed
        assert verify_single_row_genfunc(2, 5).passed
        assert single_row_series(2, 5).coefficient(2) == F(3, 2)

    def test_single_row_order_zero(self):
        res = verify_single_row_genfunc(4, 0)
        assert res.passed and res.lhs_value == "[[]]"

    def test_exp_log(self):
        assert verify_exp_log(6).passed

    def test_chain_witness_on_mismatch(self, monkeypatch):
        import partition_identity.identity as ident

        monkeypatch.setattr(ident, "reduced_lhs", lambda r, s: PolyX.constant(99))
        res = ident.verify_genfunc_chain(2, 4)
        assert res.status == "fail"
        assert res.witness.startswith("Phi^1")
