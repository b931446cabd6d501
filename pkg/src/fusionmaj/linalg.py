"""Exact linear algebra over Q (and an optional prime-field fast path)."""
from __future__ import annotations

from bisect import insort
from fractions import Fraction
from math import gcd, lcm

# largest prime below 2**61
DEFAULT_PRIME = 2305843009213693951


def _primitive(row: list) -> list:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g == 0:
        return row
    return [x // g for x in row]


def _integral(row) -> list:
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


class RationalEchelon:
    """Incrementally maintained row echelon basis of a subspace of Q^n.

    Rows are kept as primitive integer vectors and new vectors are reduced
    fraction-free, so no ``Fraction`` arithmetic happens in the inner loop.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, list] = {}
        self._order: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def is_full(self) -> bool:
        return len(self.pivots) == self.ncols

    def reduce(self, vector) -> list:
        row = _integral(vector)
        if len(row) != self.ncols:
            raise ValueError("vector length mismatch")
        for c in self._order:
            a = row[c]
            if a:
                b = self.pivots[c]
                bc = b[c]
                g = gcd(a, bc)
                fa, fb = bc // g, a // g
                row = [fa * x - fb * y for x, y in zip(row, b)]
                row = _primitive(row)
        return row

    def add(self, vector) -> bool:
        """Insert ``vector``; return True iff it increased the rank."""
        row = self.reduce(vector)
        for c, x in enumerate(row):
            if x:
                if x < 0:
                    row = [-y for y in row]
                self.pivots[c] = row
                insort(self._order, c)
                return True
        return False


class ModularEchelon:
    """Same interface as :class:`RationalEchelon`, computed over GF(p).

    The rank it reports is a lower bound for the rational rank.
    """

    def __init__(self, ncols: int, prime: int = DEFAULT_PRIME):
        self.ncols = ncols
        self.prime = prime
        self.pivots: dict[int, list] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def is_full(self) -> bool:
        return len(self.pivots) == self.ncols

    def _reduce(self, vector) -> list:
        p = self.prime
        row = []
        for x in vector:
            if isinstance(x, Fraction):
                row.append(x.numerator * pow(x.denominator, -1, p) % p)
            else:
                row.append(int(x) % p)
        for c in sorted(self.pivots):
            a = row[c]
            if a:
                b = self.pivots[c]
                row = [(x - a * y) % p for x, y in zip(row, b)]
        return row

    def add(self, vector) -> bool:
        row = self._reduce(vector)
        p = self.prime
        for c, x in enumerate(row):
            if x:
                inv = pow(x, -1, p)
                self.pivots[c] = [y * inv % p for y in row]
                return True
        return False


def rank(rows, ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    ech = RationalEchelon(ncols if ncols is not None else len(rows[0]))
    for r in rows:
        ech.add(r)
    return ech.rank


def solve_square(matrix, rhs_columns):
    """Solve ``matrix @ X = B`` exactly; ``rhs_columns`` is a list of column vectors."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(col[i]) for col in rhs_columns]
           for i, row in enumerate(matrix)]
    width = len(aug[0]) if aug else 0
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c] != 0:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [[aug[i][n + j] for i in range(n)] for j in range(width - n)]


def inverse(matrix) -> list:
    n = len(matrix)
    cols = solve_square(matrix, [[int(i == j) for i in range(n)] for j in range(n)])
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def determinant(matrix):
    """Determinant by fraction elimination (entries may be any ring supporting /)."""
    a = [list(r) for r in matrix]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = Fraction(a[r][c]) / a[c][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det
