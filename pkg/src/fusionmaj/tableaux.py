"""Partitions and two-row standard Young tableaux.

Tableaux are stored as two increasing tuples of entries rather than a cell
grid; for two rows this is canonical and standardness reduces to a
columnwise comparison.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers (trailing zeros dropped)."""

    def __new__(cls, parts=()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > j) for j in range(self[0]))

    def contained_in(self, other) -> bool:
        if len(self) > len(other):
            return False
        return all(a <= b for a, b in zip(self, other))

    def dominated_by(self, other) -> bool:
        """``self <= other`` in dominance order (sizes must agree)."""
        if self.size != sum(other):
            return False
        s = t = 0
        for i in range(max(len(self), len(other))):
            s += self[i] if i < len(self) else 0
            t += other[i] if i < len(other) else 0
            if s > t:
                return False
        return True

    def padded(self, k: int) -> tuple:
        return tuple(self) + (0,) * (k - len(self))

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


def partitions(n: int, max_part: int | None = None, max_length: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, optionally inside a box."""
    if max_part is None:
        max_part = n
    if max_length is None:
        max_length = n

    def rec(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, slots - 1):
                yield (first,) + tail

    for p in rec(n, max_part, max_length):
        yield Partition(p)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in a ``rows x cols`` box, ordered by size then reverse lex."""
    out = []
    for n in range(rows * cols + 1):
        out.extend(partitions(n, max_part=cols, max_length=rows))
    return out


def partition_count(n: int) -> int:
    """Number of partitions of ``n`` (Euler's pentagonal recurrence)."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, j = 0, 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return p[n]


@dataclass(frozen=True)
class TwoRowSYT:
    row1: tuple
    row2: tuple = ()

    def __post_init__(self):
        r1, r2 = tuple(self.row1), tuple(self.row2)
        object.__setattr__(self, "row1", r1)
        object.__setattr__(self, "row2", r2)
        if len(r1) < len(r2):
            raise ValueError("first row shorter than second row")
        if sorted(r1 + r2) != list(range(1, len(r1) + len(r2) + 1)):
            raise ValueError(f"entries must be exactly 1..N: {r1}, {r2}")
        for row in (r1, r2):
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row not increasing: {row}")
        if any(b <= a for a, b in zip(r1, r2)):
            raise ValueError(f"column strictness violated: {r1}, {r2}")

    @property
    def N(self) -> int:
        return len(self.row1) + len(self.row2)

    @property
    def shape(self) -> Partition:
        return Partition((len(self.row1), len(self.row2)))

    @property
    def k(self) -> int:
        diff = len(self.row1) - len(self.row2)
        if diff % 2:
            raise ValueError("k(tau) is only defined for even length")
        return diff // 2

    @cached_property
    def _position(self) -> dict:
        pos = {v: (0, j) for j, v in enumerate(self.row1)}
        pos.update({v: (1, j) for j, v in enumerate(self.row2)})
        return pos

    def position(self, entry: int) -> tuple:
        """(row, column) of ``entry``, both zero based."""
        return self._position[entry]

    def __str__(self):
        return f"{list(self.row1)} / {list(self.row2)}"


def _ballot_words(n1: int, n2: int) -> Iterator[tuple]:
    # lattice words in 1/2 with n1 ones and n2 twos, lexicographic
    def rec(a, b, word):
        if a == n1 and b == n2:
            yield word
            return
        if a < n1:
            yield from rec(a + 1, b, word + (1,))
        if b < n2 and b < a:
            yield from rec(a, b + 1, word + (2,))

    yield from rec(0, 0, ())


def syt_of_shape(shape) -> list[TwoRowSYT]:
    """All standard tableaux of a shape with at most two rows, in ballot-word lex order."""
    shape = Partition(shape)
    if len(shape) > 2:
        raise ValueError(f"only shapes with at most two rows are supported: {shape}")
    n1, n2 = shape.padded(2)
    out = []
    for word in _ballot_words(n1, n2):
        row1 = tuple(i + 1 for i, r in enumerate(word) if r == 1)
        row2 = tuple(i + 1 for i, r in enumerate(word) if r == 2)
        out.append(TwoRowSYT(row1, row2))
    return out


def enumerate_syt(N: int, k: int) -> list[TwoRowSYT]:
    """Standard tableaux of shape ``(n+k, n-k)`` where ``N = 2n``."""
    if N <= 0 or N % 2:
        raise ValueError(f"N must be a positive even integer, got {N}")
    n = N // 2
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}, got {k}")
    return syt_of_shape((n + k, n - k))


def all_two_row_syt(N: int) -> list[TwoRowSYT]:
    out = []
    for second in range(N // 2 + 1):
        out.extend(syt_of_shape((N - second, second)))
    return out


def two_row_count(first: int, second: int) -> int:
    """Hook-length count of standard tableaux of shape (first, second)."""
    if second > first:
        return 0
    n = first + second
    return comb(n, second) - (comb(n, second - 1) if second else 0)


def descent_set(tau: TwoRowSYT) -> frozenset:
    row2 = set(tau.row2)
    return frozenset(i for i in tau.row1 if i + 1 in row2)


def maj(tau: TwoRowSYT) -> int:
    return sum(descent_set(tau))


def charge(tau: TwoRowSYT) -> int:
    """Sum of ``i`` such that ``i+1`` sits in a strictly later column than ``i``.

    Computed from cell positions; it is deliberately not derived from ``maj``.
    """
    total = 0
    for i in range(1, tau.N):
        if tau.position(i + 1)[1] > tau.position(i)[1]:
            total += i
    return total


def embed(tau: TwoRowSYT) -> TwoRowSYT:
    N = tau.N
    return TwoRowSYT(tau.row1 + (N + 1,), tau.row2 + (N + 2,))


def principal_tableau(k: int, length: int) -> TwoRowSYT:
    """Initial segment of the principal tableau with row difference ``2k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if length % 2 or length < 2 * k:
        raise ValueError(f"length must be even and >= 2k, got length={length}, k={k}")
    head = tuple(range(1, 2 * k + 1))
    row1 = head + tuple(range(2 * k + 1, length + 1, 2))
    row2 = tuple(range(2 * k + 2, length + 1, 2))
    return TwoRowSYT(row1, row2)


@dataclass(frozen=True)
class StableTableau:
    """Infinite two-row tableau given by an even-length prefix.

    Past the prefix the entries continue in the principal pattern
    (odd entries on the first row, even entries on the second), so the
    prefix alone determines the tableau. ``k`` is derived from the prefix.
    """

    prefix: TwoRowSYT

    def __post_init__(self):
        if self.prefix.N % 2:
            raise ValueError("prefix length must be even")

    @property
    def k(self) -> int:
        return self.prefix.k

    @property
    def level(self) -> int:
        return self.prefix.N

    def extended(self, steps: int = 1) -> "StableTableau":
        tau = self.prefix
        for _ in range(steps):
            tau = embed(tau)
        return StableTableau(tau)

    def truncation(self, length: int) -> TwoRowSYT:
        """Initial part of the given even length (must be at least the prefix length)."""
        if length < self.level or length % 2:
            raise ValueError("truncation length must be even and cover the prefix")
        return self.extended((length - self.level) // 2).prefix


def stable_major_index(t: StableTableau | TwoRowSYT) -> int:
    tau = t.prefix if isinstance(t, StableTableau) else t
    n = tau.N // 2
    if tau.N % 2:
        raise ValueError("stable major index needs an even-length prefix")
    return n * n - maj(tau)


def enumerate_level(K: int) -> list[StableTableau]:
    """Stable tableaux agreeing with some principal tableau from level ``2K`` on."""
    if K < 1:
        raise ValueError("K must be positive")
    return [StableTableau(tau) for tau in all_two_row_syt(2 * K)]
