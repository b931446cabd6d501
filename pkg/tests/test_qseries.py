from math import comb

import pytest
from hypothesis import given, strategies as st

from fusionmaj.qseries import (QPoly, box_partition_gf, gauss_binomial, kostka_foulkes_column, maj_gf,
                               multiplicity_qcharacter, q_factorial, q_integer, qhook_maj_gf)

polys = st.lists(st.integers(-50, 50), max_size=8).map(QPoly)
monic = st.lists(st.integers(-50, 50), max_size=6).map(lambda c: QPoly(c + [1]))


def gauss_product_formula(m, k):
    """Oracle: [m]!/([k]![m-k]!) by exact division."""
    return q_factorial(m).exact_div(q_factorial(k) * q_factorial(m - k))


class TestQPoly:
    def test_canonical_form(self):
        assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
        assert QPoly([0, 0]).is_zero()

    @given(polys, polys, polys)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - b) + b == a

    @given(polys, monic)
    def test_division(self, a, b):
        q, r = (a * b).divmod(b)
        assert q == a and r.is_zero()

    def test_exact_div_failure(self):
        with pytest.raises(ArithmeticError):
            QPoly([1, 0, 1]).exact_div(QPoly([1, 1]))

    def test_evaluation_and_reflect(self):
        p = QPoly([1, 2, 3])
        assert p(1) == 6 and p(2) == 17
        assert p.reflect(4) == QPoly([0, 0, 3, 2, 1])
        with pytest.raises(ValueError):
            p.reflect(1)

    def test_json_round_trip(self):
        big = QPoly([10 ** 40, -3, 0, 7])
        text = big.to_json()
        assert text == '["10000000000000000000000000000000000000000", "-3", "0", "7"]'
        assert QPoly.from_json(text) == big


class TestGaussBinomial:
    def test_examples(self):
        assert gauss_binomial(2, 1) == QPoly([1, 1])
        assert gauss_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
        assert gauss_binomial(7, 0) == QPoly([1])

    def test_domain_error(self):
        with pytest.raises(ValueError):
            gauss_binomial(2, 3)

    @pytest.mark.parametrize("m", range(17))
    def test_properties(self, m):
        for k in range(m + 1):
            g = gauss_binomial(m, k)
            assert g == gauss_binomial(m, m - k)
            assert g(1) == comb(m, k)
            assert g.degree == k * (m - k)
            assert g.is_palindromic()
            assert all(c >= 0 for c in g.coeffs)
            assert g == gauss_product_formula(m, k)


class TestBox:
    def test_examples(self):
        assert box_partition_gf(0) == QPoly([1])
        assert box_partition_gf(1) == QPoly([1, 1])
        assert box_partition_gf(2) == QPoly([1, 1, 2, 1, 1])

    @pytest.mark.parametrize("k", range(9))
    def test_matches_gauss(self, k):
        assert box_partition_gf(k) == gauss_binomial(2 * k, k)


class TestMajGf:
    def test_examples(self):
        assert maj_gf((2,)) == QPoly([1])
        assert maj_gf((1, 1)) == QPoly([0, 1])
        assert maj_gf((2, 2)) == QPoly([0, 0, 1, 0, 1])

    def test_qhook_examples(self):
        assert qhook_maj_gf((2,)) == QPoly([1])
        assert qhook_maj_gf((1, 1)) == QPoly([0, 1])

    def test_rejects_three_rows(self):
        with pytest.raises(ValueError):
            maj_gf((1, 1, 1))

    def test_oracle_equivalence(self):
        for N in range(1, 15):
            for second in range(N // 2 + 1):
                assert maj_gf((N - second, second)) == qhook_maj_gf((N - second, second))


class TestKostkaFoulkes:
    def test_examples(self):
        assert kostka_foulkes_column((2,), 2) == QPoly([0, 1])
        assert kostka_foulkes_column((1, 1), 2) == QPoly([1])
        assert kostka_foulkes_column((2, 2), 4) == QPoly([0, 0, 1, 0, 1])

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            kostka_foulkes_column((2, 1), 4)

    def test_multiplicity_examples(self):
        assert multiplicity_qcharacter(1, 2) == QPoly([1])
        assert multiplicity_qcharacter(0, 2) == QPoly([0, 1])
        assert multiplicity_qcharacter(0, 4) == QPoly([0, 0, 1, 0, 1])

    def test_chain_with_maj(self):
        for N in range(2, 15, 2):
            n = N // 2
            for k in range(n + 1):
                mq = multiplicity_qcharacter(k, N)
                assert mq == maj_gf((n + k, n - k))
                assert all(c >= 0 for c in mq.coeffs) and mq.degree <= N * (N - 1) // 2


def test_q_integer():
    assert q_integer(3) == QPoly([1, 1, 1])
