"""Fusion product of N copies of C^2 by exact linear algebra.

Vectors of ``(C^2)^{(x)N}`` are dense lists indexed by bitmask: bit ``i`` set
means tensor slot ``i`` holds the raised (highest weight) vector. The lowest
weight vector is mask 0.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .linalg import DEFAULT_PRIME, ModularEchelon, RationalEchelon
from .qseries import QPoly, maj_gf
from .reports import CheckReport, timed


@dataclass(frozen=True)
class EvaluationParams:
    z: tuple

    def __post_init__(self):
        z = tuple(Fraction(x) for x in self.z)
        object.__setattr__(self, "z", z)
        if len(set(z)) != len(z):
            raise ValueError(f"evaluation points must be pairwise distinct: {z}")

    @property
    def N(self) -> int:
        return len(self.z)

    @classmethod
    def consecutive(cls, N: int) -> "EvaluationParams":
        return cls(tuple(range(1, N + 1)))

    @classmethod
    def geometric(cls, N: int) -> "EvaluationParams":
        """Points 1, 3, 7, 15, ... (``2**i - 1``)."""
        return cls(tuple(2 ** i - 1 for i in range(1, N + 1)))

    @classmethod
    def named(cls, name: str, N: int) -> "EvaluationParams":
        try:
            return {"consecutive": cls.consecutive, "geometric": cls.geometric}[name](N)
        except KeyError:
            raise ValueError(f"unknown evaluation point scheme {name!r}") from None


def weight(mask: int, N: int) -> int:
    return 2 * bin(mask).count("1") - N


def lowest_vector(N: int) -> list:
    v = [0] * (1 << N)
    v[0] = 1
    return v


def apply_e(j: int, v, z: EvaluationParams) -> list:
    """``e (x) t^j`` acting on a dense tensor vector."""
    if j < 0:
        raise ValueError("current index must be nonnegative")
    N = z.N
    if len(v) != 1 << N:
        raise ValueError("vector length does not match number of evaluation points")
    powers = [zi ** j for zi in z.z]
    out = [0] * len(v)
    for mask, c in enumerate(v):
        if not c:
            continue
        for i in range(N):
            bit = 1 << i
            if not mask & bit:
                out[mask | bit] += powers[i] * c
    return out


@dataclass
class GradedCharTable:
    """``dims[d][w]`` for the associated graded of the filtration."""

    N: int
    dims: dict = field(default_factory=dict)

    @property
    def max_degree(self) -> int:
        return self.N * (self.N - 1) // 2

    @property
    def weights(self) -> range:
        return range(-self.N, self.N + 1, 2)

    def get(self, d: int, w: int) -> int:
        return self.dims.get(d, {}).get(w, 0)

    def total(self) -> int:
        return sum(sum(row.values()) for row in self.dims.values())

    def column_sum(self, w: int) -> int:
        return sum(row.get(w, 0) for row in self.dims.values())

    def entries(self):
        for d in sorted(self.dims):
            for w in sorted(self.dims[d]):
                if self.dims[d][w]:
                    yield d, w, self.dims[d][w]

    def __eq__(self, other):
        return (isinstance(other, GradedCharTable) and self.N == other.N
                and list(self.entries()) == list(other.entries()))

    def to_tsv(self) -> str:
        lines = ["degree\tweight\tdimension"]
        lines += [f"{d}\t{w}\t{n}" for d, w, n in self.entries()]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_tsv(cls, N: int, text: str) -> "GradedCharTable":
        rows = [ln.split("\t") for ln in text.strip().splitlines()]
        if rows[0] != ["degree", "weight", "dimension"]:
            raise ValueError("unexpected TSV header")
        t = cls(N)
        for d, w, n in rows[1:]:
            t.dims.setdefault(int(d), {})[int(w)] = int(n)
        return t


def _decreasing_sequences(length: int, total: int, cap: int):
    """Weakly decreasing sequences of ``length`` integers in ``0..cap`` summing to ``total``."""
    if length == 0:
        if total == 0:
            yield ()
        return
    for first in range(min(cap, total), -1, -1):
        if first * length < total:
            break
        for rest in _decreasing_sequences(length - 1, total - first, first):
            yield (first,) + rest


def _block_ranks(N: int, z: tuple, p: int, method: str, prime: int) -> dict:
    """Rank increments per degree in the weight block with ``p`` raised slots."""
    z = tuple(Fraction(x) for x in z)
    cols = [m for m in range(1 << N) if bin(m).count("1") == p]
    index = {m: i for i, m in enumerate(cols)}
    if all(x.denominator == 1 for x in z):
        z = tuple(int(x) for x in z)

    @lru_cache(maxsize=None)
    def vector(seq: tuple) -> dict:
        # seq is weakly decreasing; peel off the smallest index
        if not seq:
            return {0: 1}
        prev = vector(seq[:-1])
        j = seq[-1]
        out = {}
        for mask, c in prev.items():
            for i in range(N):
                bit = 1 << i
                if not mask & bit:
                    out[mask | bit] = out.get(mask | bit, 0) + c * z[i] ** j
        return out

    ech = RationalEchelon(len(cols)) if method == "rational" else ModularEchelon(len(cols), prime)
    increments = {}
    for d in range(p * (N - 1) + 1):
        for seq in _decreasing_sequences(p, d, N - 1):
            if ech.is_full():
                break
            vec = vector(seq)
            row = [0] * len(cols)
            for mask, c in vec.items():
                row[index[mask]] = c
            if ech.add(row):
                increments[d] = increments.get(d, 0) + 1
        if ech.is_full():
            break
    return increments


def build_filtration(N: int, z: EvaluationParams | None = None, *, method: str = "rational",
                     prime: int = DEFAULT_PRIME, jobs: int = 1) -> GradedCharTable:
    """Graded dimensions of the fusion product of ``N`` copies of C^2.

    Each weight block is eliminated independently; ``jobs > 1`` spreads the
    blocks over worker processes.
    """
    if N <= 0:
        raise ValueError("N must be positive")
    if z is None:
        z = EvaluationParams.consecutive(N)
    if z.N != N:
        raise ValueError(f"expected {N} evaluation points, got {z.N}")
    if method not in ("rational", "modular"):
        raise ValueError(f"unknown elimination method {method!r}")
    args = [(N, z.z, p, method, prime) for p in range(N + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_block_ranks, *zip(*args)))
    else:
        results = [_block_ranks(*a) for a in args]
    table = GradedCharTable(N)
    for p, inc in enumerate(results):
        w = 2 * p - N
        for d, n in inc.items():
            table.dims.setdefault(d, {})[w] = n
    return table


def check_consistency(t: GradedCharTable) -> None:
    for w in t.weights:
        expected = comb(t.N, (t.N + w) // 2)
        if t.column_sum(w) != expected:
            raise ValueError(f"weight {w}: graded dimensions sum to {t.column_sum(w)}, expected {expected}")


def multiplicity_qcharacters_from_table(t: GradedCharTable) -> dict:
    """Map ``k -> ch_q`` of the multiplicity space of ``M_{2k+1}``."""
    check_consistency(t)
    out = {}
    for k in range(0, t.N // 2 + 1):
        w = 2 * k
        coeffs = []
        for d in range(t.max_degree + 1):
            m = t.get(d, w) - t.get(d, w + 2)
            if m < 0:
                raise ArithmeticError(f"negative multiplicity {m} for k={k} at degree {d}")
            coeffs.append(m)
        out[k] = QPoly(coeffs)
    return out


def verify_theorem1(N: int, z_choices=("consecutive", "geometric"), *, method: str = "rational",
                    jobs: int = 1) -> CheckReport:
    """Compare fusion multiplicity q-characters with major index generating functions.

    Failures are reported, not raised: the witness lists every mismatching
    polynomial pair, and whether the tables for different points disagree.
    """
    if N <= 0 or N % 2:
        raise ValueError("N must be a positive even integer")
    n = N // 2
    params = {"N": N, "z": list(z_choices), "method": method}
    report = CheckReport("theorem1", params)
    with timed(report):
        mismatches = []
        tables = []
        for name in z_choices:
            table = build_filtration(N, EvaluationParams.named(name, N), method=method, jobs=jobs)
            tables.append(table)
            chars = multiplicity_qcharacters_from_table(table)
            for k in range(n + 1):
                expected = maj_gf((n + k, n - k))
                if chars[k] != expected:
                    mismatches.append({"z": name, "k": k,
                                       "fusion": [str(c) for c in chars[k].coeffs],
                                       "maj": [str(c) for c in expected.coeffs]})
        agree = all(t == tables[0] for t in tables[1:])
        if mismatches or not agree:
            report.status = "fail"
            report.witness = {"mismatches": mismatches, "tables_agree": agree}
        report.params["shapes_compared"] = n + 1
    return report
