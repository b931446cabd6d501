"""Exact polynomials in q and the q-characters built from them."""
from __future__ import annotations

import json
from itertools import zip_longest

from .tableaux import Partition, charge, maj, partitions_in_box, syt_of_shape


class QPoly:
    """Dense polynomial in ``q`` with integer coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "QPoly":
        if degree < 0:
            raise ValueError("negative exponent")
        return cls([0] * degree + [coeff])

    @classmethod
    def from_exponents(cls, exponents) -> "QPoly":
        """Sum of ``q**e`` over the given exponents (with repetition)."""
        exps = list(exponents)
        c = [0] * (max(exps) + 1 if exps else 0)
        for e in exps:
            c[e] += 1
        return cls(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        return QPoly(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QPoly) else QPoly([-other]))

    def __mul__(self, other):
        if isinstance(other, int):
            return QPoly(a * other for a in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QPoly([1])
        for _ in range(n):
            out = out * self
        return out

    def divmod(self, divisor: "QPoly"):
        """Polynomial long division; the divisor must be monic or divide exactly."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        dlead = divisor.coeffs[-1]
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % dlead:
                raise ArithmeticError("non-integral quotient coefficient")
            f = c // dlead
            quot[i - dd] = f
            for j, b in enumerate(divisor.coeffs):
                rem[i - dd + j] -= f * b
        return QPoly(quot), QPoly(rem)

    def exact_div(self, divisor: "QPoly") -> "QPoly":
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"{self} is not divisible by {divisor}")
        return quot

    def reflect(self, top: int) -> "QPoly":
        """``q**top * self(1/q)``; ``top`` must be at least the degree."""
        if top < self.degree:
            raise ValueError(f"reflection exponent {top} below degree {self.degree}")
        c = [0] * (top + 1)
        for i, a in enumerate(self.coeffs):
            c[top - i] = a
        return QPoly(c)

    def is_palindromic(self) -> bool:
        low = next((i for i, a in enumerate(self.coeffs) if a), 0)
        body = self.coeffs[low:]
        return body == body[::-1]

    def to_json(self) -> str:
        return json.dumps([str(a) for a in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "QPoly":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(x, str) for x in data):
            raise ValueError("expected a JSON array of decimal strings")
        return cls(int(x) for x in data)

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            if not mono:
                terms.append(str(a))
            elif a == 1:
                terms.append(mono)
            else:
                terms.append(f"{a}*{mono}")
        return " + ".join(terms)


def q_integer(n: int) -> QPoly:
    return QPoly([1] * n)


def q_factorial(n: int) -> QPoly:
    out = QPoly([1])
    for i in range(1, n + 1):
        out = out * q_integer(i)
    return out


def gauss_binomial(m: int, k: int) -> QPoly:
    """Gaussian binomial coefficient via the q-Pascal recurrence."""
    if m < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if k > m:
        raise ValueError(f"k={k} exceeds m={m}")
    # row[j] holds [i choose j]_q while sweeping i
    row = [QPoly([1])]
    for i in range(1, m + 1):
        new = [QPoly([1])]
        for j in range(1, min(i, k) + 1):
            left = row[j - 1]
            right = row[j] if j < len(row) else QPoly()
            new.append(left + right * QPoly.monomial(j))
        row = new
    return row[k]


def box_partition_gf(k: int) -> QPoly:
    """Size generating function of partitions inside the ``k x k`` box, by enumeration."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return QPoly.from_exponents(p.size for p in partitions_in_box(k, k))


def _two_row_shape(shape) -> Partition:
    shape = Partition(shape)
    if len(shape) > 2:
        raise ValueError(f"shape must have at most two rows: {shape}")
    return shape


def maj_gf(shape) -> QPoly:
    """Sum of ``q**maj`` over standard tableaux of a two-row shape."""
    shape = _two_row_shape(shape)
    return QPoly.from_exponents(maj(t) for t in syt_of_shape(shape))


def hook_lengths(shape) -> list[int]:
    shape = Partition(shape)
    conj = shape.conjugate()
    return [shape[i] - j + conj[j] - i - 1 for i in range(len(shape)) for j in range(shape[i])]


def qhook_maj_gf(shape) -> QPoly:
    """q-hook-length closed form for the major index generating function."""
    shape = _two_row_shape(shape)
    n = shape.size
    b = sum(i * part for i, part in enumerate(shape))
    denom = QPoly([1])
    for h in hook_lengths(shape):
        denom = denom * q_integer(h)
    try:
        quotient = q_factorial(n).exact_div(denom)
    except ArithmeticError as exc:
        raise RuntimeError(f"q-hook division not exact for {shape}") from exc
    return quotient * QPoly.monomial(b)


def kostka_foulkes_column(shape, N: int) -> QPoly:
    """``K_{shape, 1^N}(q)`` as the charge generating function of standard tableaux."""
    shape = _two_row_shape(shape)
    if shape.size != N:
        raise ValueError(f"|shape|={shape.size} does not match N={N}")
    return QPoly.from_exponents(charge(t) for t in syt_of_shape(shape))


def multiplicity_qcharacter(k: int, N: int) -> QPoly:
    """``q**(N(N-1)/2) K_{(n+k,n-k),1^N}(1/q)`` as an honest polynomial."""
    if N <= 0 or N % 2:
        raise ValueError("N must be a positive even integer")
    n = N // 2
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in 0..{n}")
    return kostka_foulkes_column((n + k, n - k), N).reflect(N * (N - 1) // 2)
