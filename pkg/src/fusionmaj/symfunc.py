"""Symmetric functions in the p, m, h, s bases with exact rational coefficients.

Everything is routed through the power sum basis: each basis element is
expanded into power sums on demand (Newton's identities for h, Jacobi-Trudi
for s, inverse Kostka matrices for m), and the reverse direction inverts the
per-degree transition matrix.
"""
from __future__ import annotations

import json
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, prod

from . import linalg
from .tableaux import Partition, partitions

BASES = ("p", "m", "h", "s")


def z_lambda(lam) -> int:
    lam = Partition(lam)
    return prod(i ** m * factorial(m) for i, m in lam.multiplicities().items())


@lru_cache(maxsize=None)
def _kostka(nu: tuple, mu: tuple) -> int:
    if not mu:
        return int(not nu)
    # the largest entry (count mu[-1]) fills a horizontal strip nu / inner
    strip = mu[-1]
    rest = mu[:-1]
    total = 0
    nu_pad = nu + (0,)

    def rec(i, remaining, inner):
        nonlocal total
        if i == len(nu):
            if remaining == 0:
                total += _kostka(Partition(inner), rest)
            return
        lower = nu_pad[i + 1]
        for take in range(min(remaining, nu[i] - lower), -1, -1):
            rec(i + 1, remaining - take, inner + (nu[i] - take,))

    rec(0, strip, ())
    return total


def kostka_number(nu, mu) -> int:
    """Number of semistandard tableaux of shape ``nu`` and content ``mu``."""
    nu, mu = Partition(nu), Partition(mu)
    if nu.size != mu.size:
        raise ValueError(f"size mismatch: |{nu}| != |{mu}|")
    if not mu.dominated_by(nu):
        return 0
    return _kostka(tuple(nu), tuple(mu))


def _as_fraction(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class SymFunc:
    """Finite linear combination of basis elements indexed by partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        clean = {}
        for lam, c in (terms or {}).items():
            c = _as_fraction(c)
            if c:
                lam = Partition(lam)
                clean[lam] = clean.get(lam, 0) + c
        self.terms = {lam: c for lam, c in clean.items() if c}

    @classmethod
    def basis_element(cls, basis: str, lam) -> "SymFunc":
        return cls(basis, {Partition(lam): 1})

    @classmethod
    def one(cls, basis: str = "p") -> "SymFunc":
        return cls(basis, {Partition(): 1})

    @classmethod
    def zero(cls, basis: str = "p") -> "SymFunc":
        return cls(basis)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(lam.size for lam in self.terms)

    def is_homogeneous(self) -> bool:
        return len({lam.size for lam in self.terms}) <= 1

    def component(self, d: int) -> "SymFunc":
        return SymFunc(self.basis, {lam: c for lam, c in self.terms.items() if lam.size == d})

    def coefficient(self, lam) -> Fraction:
        return self.terms.get(Partition(lam), Fraction(0))

    def convert(self, target: str) -> "SymFunc":
        return convert(self, target)

    def __add__(self, other):
        other = other.convert(self.basis)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, 0) + c
        return SymFunc(self.basis, terms)

    def __neg__(self):
        return SymFunc(self.basis, {lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.basis, {lam: c * other for lam, c in self.terms.items()})
        a, b = self.convert("p"), other.convert("p")
        terms = defaultdict(Fraction)
        for la, ca in a.terms.items():
            for lb, cb in b.terms.items():
                terms[Partition(sorted(la + lb, reverse=True))] += ca * cb
        return SymFunc("p", terms).convert(self.basis)

    def __rmul__(self, other):
        return self * other

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis == self.basis:
            return self.terms == other.terms
        return self.convert("p").terms == other.convert("p").terms

    __hash__ = None

    def to_json(self) -> str:
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].size, [-x for x in kv[0]]))
        return json.dumps({
            "basis": self.basis,
            "terms": [{"partition": list(lam), "numerator": str(c.numerator),
                       "denominator": str(c.denominator)} for lam, c in items],
        }, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SymFunc":
        data = json.loads(text)
        return cls(data["basis"], {
            Partition(t["partition"]): Fraction(int(t["numerator"]), int(t["denominator"]))
            for t in data["terms"]
        })

    def __repr__(self):
        if not self.terms:
            return f"0 [{self.basis}]"
        items = sorted(self.terms.items(), key=lambda kv: (kv[0].size, [-x for x in kv[0]]))
        return " + ".join(f"{c}*{self.basis}{tuple(lam)}" for lam, c in items)


def p(*parts) -> SymFunc:
    return SymFunc.basis_element("p", parts)


def s(*parts) -> SymFunc:
    return SymFunc.basis_element("s", parts)


def h(*parts) -> SymFunc:
    return SymFunc.basis_element("h", parts)


def m(*parts) -> SymFunc:
    return SymFunc.basis_element("m", parts)


# --- expansions into power sums ------------------------------------------------

def _p_mul(a: dict, b: dict) -> dict:
    out = defaultdict(Fraction)
    for la, ca in a.items():
        for lb, cb in b.items():
            out[Partition(sorted(la + lb, reverse=True))] += ca * cb
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _h_single(n: int) -> dict:
    # Newton: n h_n = sum_{r=1}^{n} p_r h_{n-r}
    if n < 0:
        return {}
    if n == 0:
        return {Partition(): Fraction(1)}
    acc = defaultdict(Fraction)
    for r in range(1, n + 1):
        for lam, c in _p_mul({Partition((r,)): Fraction(1)}, _h_single(n - r)).items():
            acc[lam] += c / n
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def _h_in_p(lam: Partition) -> dict:
    out = {Partition(): Fraction(1)}
    for part in lam:
        out = _p_mul(out, _h_single(part))
    return out


@lru_cache(maxsize=None)
def _s_in_h(lam: Partition) -> dict:
    """Jacobi-Trudi: ``s_lam = det[h_{lam_i - i + j}]`` expanded in h."""
    n = len(lam)
    out = defaultdict(int)

    def rec(i, used, sign, parts):
        if i == n:
            out[Partition(sorted(parts, reverse=True))] += sign
            return
        for j in range(n):
            if j in used:
                continue
            idx = lam[i] - i + j
            if idx < 0:
                continue
            # sign of the permutation built row by row: count inversions with used columns
            inv = sum(1 for u in used if u > j)
            rec(i + 1, used | {j}, sign * (-1) ** inv, parts + ([idx] if idx else []))

    rec(0, frozenset(), 1, [])
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def _s_in_p(lam: Partition) -> dict:
    acc = defaultdict(Fraction)
    for mu, c in _s_in_h(lam).items():
        for nu, d in _h_in_p(mu).items():
            acc[nu] += c * d
    return {k: v for k, v in acc.items() if v}


@lru_cache(maxsize=None)
def _kostka_matrix(n: int):
    parts = list(partitions(n))
    return parts, [[kostka_number(a, b) for b in parts] for a in parts]


@lru_cache(maxsize=None)
def _m_in_s(n: int) -> dict:
    # s = K m  =>  m_mu = sum_lam (K^{-1})_{mu, lam} s_lam
    parts, K = _kostka_matrix(n)
    Kinv = linalg.inverse(K)
    out = {}
    for j, mu in enumerate(parts):
        out[mu] = {parts[i]: Kinv[j][i] for i in range(len(parts)) if Kinv[j][i]}
    return out


@lru_cache(maxsize=None)
def _m_in_p(lam: Partition) -> dict:
    acc = defaultdict(Fraction)
    for nu, c in _m_in_s(lam.size)[lam].items():
        for mu, d in _s_in_p(nu).items():
            acc[mu] += c * d
    return {k: v for k, v in acc.items() if v}


_TO_P = {
    "p": lambda lam: {lam: Fraction(1)},
    "h": _h_in_p,
    "s": _s_in_p,
    "m": _m_in_p,
}


@lru_cache(maxsize=None)
def _from_p_matrix(basis: str, n: int):
    """Per-degree inverse of the ``basis -> p`` transition matrix."""
    parts = list(partitions(n))
    index = {lam: i for i, lam in enumerate(parts)}
    # columns: basis element expanded in p
    M = [[Fraction(0)] * len(parts) for _ in parts]
    for j, lam in enumerate(parts):
        for mu, c in _TO_P[basis](lam).items():
            M[index[mu]][j] = c
    return parts, index, linalg.inverse(M)


def convert(f: SymFunc, target: str) -> SymFunc:
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if f.basis == target:
        return SymFunc(target, f.terms)
    in_p = defaultdict(Fraction)
    for lam, c in f.terms.items():
        for mu, d in _TO_P[f.basis](lam).items():
            in_p[mu] += c * d
    if target == "p":
        return SymFunc("p", in_p)
    out = defaultdict(Fraction)
    by_degree = defaultdict(dict)
    for mu, c in in_p.items():
        if c:
            by_degree[mu.size][mu] = c
    for n, comp in by_degree.items():
        parts, index, inv = _from_p_matrix(target, n)
        for mu, c in comp.items():
            col = index[mu]
            for i, lam in enumerate(parts):
                if inv[i][col]:
                    out[lam] += inv[i][col] * c
    return SymFunc(target, out)


def _pairing(f: SymFunc, g: SymFunc, weight) -> Fraction:
    a, b = f.convert("p"), g.convert("p")
    return sum((c * b.terms[lam] * weight(lam) for lam, c in a.terms.items() if lam in b.terms),
               Fraction(0))


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """Hall inner product, ``<p_lam, p_mu> = delta * z_lam``."""
    return _pairing(f, g, z_lambda)


def modified_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """``<p_lam, p_mu> = delta * z_lam * 2**l(lam)``; makes the boson operators mutually adjoint."""
    return _pairing(f, g, lambda lam: z_lambda(lam) * 2 ** len(lam))


# --- polynomials in finitely many variables ------------------------------------

class MultivariatePoly:
    """Laurent polynomial in ``k`` variables with rational coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nvars:
                raise ValueError("exponent vector has wrong length")
            c = _as_fraction(c)
            if c:
                clean[e] = clean.get(e, 0) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, exponents, coeff=1) -> "MultivariatePoly":
        exponents = tuple(exponents)
        return cls(len(exponents), {exponents: coeff})

    @classmethod
    def constant(cls, nvars: int, c=1) -> "MultivariatePoly":
        return cls(nvars, {(0,) * nvars: c})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponents) -> Fraction:
        return self.terms.get(tuple(exponents), Fraction(0))

    def __add__(self, other):
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultivariatePoly(self.nvars, terms)

    def __neg__(self):
        return MultivariatePoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MultivariatePoly(self.nvars, {e: c * other for e, c in self.terms.items()})
        out = defaultdict(Fraction)
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                out[tuple(x + y for x, y in zip(ea, eb))] += ca * cb
        return MultivariatePoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MultivariatePoly) and self.nvars == other.nvars and self.terms == other.terms

    __hash__ = None

    def invert_variables(self) -> "MultivariatePoly":
        """Substitute ``z_i -> 1/z_i``."""
        return MultivariatePoly(self.nvars, {tuple(-x for x in e): c for e, c in self.terms.items()})

    def coefficient_of_product(self, other, exponents=None) -> Fraction:
        """Coefficient of ``z**exponents`` (default: constant term) in ``self * other``."""
        target = tuple(exponents) if exponents is not None else (0,) * self.nvars
        total = Fraction(0)
        for e, c in self.terms.items():
            d = other.terms.get(tuple(t - x for t, x in zip(target, e)))
            if d:
                total += c * d
        return total

    def exact_div(self, divisor: "MultivariatePoly") -> "MultivariatePoly":
        """Exact division of polynomials (lexicographic leading terms)."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        lead = max(divisor.terms)
        lead_c = divisor.terms[lead]
        rem = dict(self.terms)
        quot = {}
        while rem:
            top = max(rem)
            shift = tuple(a - b for a, b in zip(top, lead))
            if any(x < 0 for x in shift):
                raise ArithmeticError("division is not exact")
            f = rem[top] / lead_c
            quot[shift] = f
            for e, c in divisor.terms.items():
                key = tuple(a + b for a, b in zip(e, shift))
                v = rem.get(key, 0) - f * c
                if v:
                    rem[key] = v
                else:
                    rem.pop(key, None)
        return MultivariatePoly(self.nvars, quot)

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*z^{e}" for e, c in sorted(self.terms.items(), reverse=True))


def _perm_sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def alternant(exponents) -> MultivariatePoly:
    """``det[z_i ** exponents[j]]`` in ``len(exponents)`` variables."""
    k = len(exponents)
    terms = defaultdict(int)
    for perm in permutations(range(k)):
        terms[tuple(exponents[perm[i]] for i in range(k))] += _perm_sign(perm)
    return MultivariatePoly(k, terms)


def vandermonde(k: int) -> MultivariatePoly:
    """``prod_{i<j} (z_i - z_j)``."""
    return alternant(tuple(range(k - 1, -1, -1)))


def shifted_exponents(lam, k: int) -> tuple:
    """``lam + delta`` padded to ``k`` entries."""
    lam = Partition(lam).padded(k)
    return tuple(lam[j] + k - 1 - j for j in range(k))


def schur_poly(lam, k: int) -> MultivariatePoly:
    """Schur polynomial in ``k`` variables as a bialternant quotient."""
    lam = Partition(lam)
    if len(lam) > k:
        return MultivariatePoly(k)
    if k == 0:
        return MultivariatePoly.constant(0)
    return alternant(shifted_exponents(lam, k)).exact_div(vandermonde(k))


def monomial_symmetric_poly(mu, k: int) -> MultivariatePoly:
    mu = Partition(mu)
    if len(mu) > k:
        return MultivariatePoly(k)
    return MultivariatePoly(k, {e: 1 for e in set(permutations(mu.padded(k)))})
