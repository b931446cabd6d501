"""Exit criteria. Every identity is exact; the timing bounds are wall-clock budgets."""
import time
from collections import Counter
from math import comb

import pytest

from fusionmaj import fock, qseries, tableaux
from fusionmaj.fusion import EvaluationParams, build_filtration, multiplicity_qcharacters_from_table
from fusionmaj.qseries import QPoly

criterion = pytest.mark.criterion


@criterion(1, "fusion q-characters = maj_gf = reflected Kostka-Foulkes, N <= 10, under 10 min")
def test_theorem1_chain():
    start = time.perf_counter()
    for N in range(2, 11, 2):
        n = N // 2
        chars = multiplicity_qcharacters_from_table(build_filtration(N, EvaluationParams.consecutive(N)))
        for k in range(n + 1):
            expected = qseries.maj_gf((n + k, n - k))
            assert chars[k] == expected, (N, k)
            assert qseries.multiplicity_qcharacter(k, N) == expected, (N, k)
    assert time.perf_counter() - start <= 600


@criterion(2, "maj + charge = N(N-1)/2 for every two-row SYT, N <= 12")
def test_charge_maj_complement():
    failures = [t for N in range(1, 13) for t in tableaux.all_two_row_syt(N)
                if tableaux.maj(t) + tableaux.charge(t) != N * (N - 1) // 2]
    assert failures == []


@criterion(3, "maj_gf = q-hook formula for every two-row shape, N <= 14")
def test_qhook_oracle():
    for N in range(1, 15):
        for second in range(N // 2 + 1):
            shape = (N - second, second)
            assert qseries.maj_gf(shape) == qseries.qhook_maj_gf(shape), shape


@criterion(4, "embedding shifts maj by N+1, preserves r, N <= 12; r(principal_k) = k^2, k <= 6")
def test_embedding_laws():
    for N in range(1, 13):
        for t in tableaux.all_two_row_syt(N):
            up = tableaux.embed(t)
            assert tableaux.maj(up) == tableaux.maj(t) + N + 1
            if N % 2 == 0:
                assert tableaux.stable_major_index(up) == tableaux.stable_major_index(t)
    for k in range(7):
        for length in range(max(2 * k, 2), 2 * k + 9, 2):
            st = tableaux.StableTableau(tableaux.principal_tableau(k, length))
            assert tableaux.stable_major_index(st) == k * k


@criterion(5, "level r-generating function = [2K,K]_q = box gf, K <= 8; low coefficients = p(d) at K = 8")
def test_qbinomial_identity():
    for K in range(1, 9):
        level = tableaux.enumerate_level(K)
        gf = QPoly.from_exponents(tableaux.stable_major_index(t) for t in level)
        assert len(level) == comb(2 * K, K)
        assert gf == qseries.gauss_binomial(2 * K, K) == qseries.box_partition_gf(K)
    for d in range(9):
        assert gf[d] == tableaux.partition_count(d)


@criterion(6, "e_{-m}^k Omega = (-1)^{k(k-1)/2} k! s_((k-m)^k), k <= 4, under 1 min")
def test_rectangular():
    start = time.perf_counter()
    for k in range(1, 5):
        for m in range(k + 1):
            rep = fock.verify_rectangular(k, m)
            assert rep.passed, rep.witness
    assert time.perf_counter() - start <= 60


@criterion(7, "Schur expansion in e-words recovers s_nu for nu in the k x k box, k <= 4; basis images full rank, n <= 4")
def test_gensegal_and_span():
    for k in range(1, 5):
        for nu in tableaux.partitions_in_box(k, k):
            rep = fock.gensegal_check(nu, k)
            assert rep.passed, rep.witness
    for n in range(1, 5):
        rep = fock.span_check(n)
        assert rep.passed and rep.params["rank"] == comb(2 * n, n)


@criterion(8, "Virasoro relations with c = 1, |m|,|n| <= 4, degree <= 8; s_(k^k) singular with energy k^2, k <= 4")
def test_virasoro_structure():
    for m in range(-4, 5):
        for n in range(-4, 5):
            rep = fock.virasoro_commutator_check(m, n, 8)
            assert rep.passed, rep.witness
    for k in range(1, 5):
        rep = fock.singular_vector_check(k, maxn=2)
        assert rep.passed, rep.witness


@criterion(9, "[h_n, h_-m] = 2n delta, n,m <= 4, degree <= 8; h_n adjoint to h_-n under modified product")
def test_heisenberg_structure():
    for n in range(1, 5):
        for m in range(1, 5):
            assert fock.heisenberg_ccr_check(n, m, 8).passed
        assert fock.adjointness_check(n, 8).passed


@criterion(10, "sum_k (2k+1) f^(n+k,n-k) = 2^N, N <= 14")
def test_schur_weyl_dimension():
    for N in range(2, 15, 2):
        total = sum((2 * k + 1) * len(tableaux.enumerate_syt(N, k)) for k in range(N // 2 + 1))
        assert total == 2 ** N


@criterion(11, "graded table identical for consecutive and geometric points, N <= 8")
def test_fusion_independence():
    for N in range(2, 9, 2):
        assert build_filtration(N, EvaluationParams.consecutive(N)) == build_filtration(N, EvaluationParams.geometric(N))


@criterion(12, "stable major index multiset = L_0 spectrum on the K x K box subspace, K <= 4")
def test_l0_spectrum():
    for K in range(1, 5):
        r_values = Counter(tableaux.stable_major_index(t) for t in tableaux.enumerate_level(K))
        spectrum = Counter({v: mult for v, mult in fock.l0_spectrum(K).items() if mult})
        assert r_values == spectrum, K
