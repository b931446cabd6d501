from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from fusionmaj.linalg import ModularEchelon, RationalEchelon, determinant, inverse, rank

matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=1, max_size=7))


@given(matrices)
@settings(max_examples=60)
def test_rank_matches_sympy(rows):
    assert rank(rows) == sympy.Matrix(rows).rank()


@given(matrices)
@settings(max_examples=60)
def test_modular_agrees_on_small_entries(rows):
    ech = ModularEchelon(len(rows[0]))
    for r in rows:
        ech.add(r)
    assert ech.rank == rank(rows)


def test_rank_increments():
    ech = RationalEchelon(3)
    assert ech.add([1, 2, 3])
    assert not ech.add([2, 4, 6])
    assert ech.add([Fraction(1, 2), 0, 1])
    assert ech.add([0, 0, 7])
    assert ech.is_full()
    assert not ech.add([5, 5, 5])


def test_inverse_and_determinant():
    m = [[2, 1, 0], [1, 3, 1], [0, 1, 4]]
    inv = inverse(m)
    prod = [[sum(Fraction(m[i][k]) * inv[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    assert prod == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert determinant(m) == sympy.Matrix(m).det()
