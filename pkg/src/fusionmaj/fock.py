"""Charge-zero sector of the basic module realised on symmetric functions.

``h_n`` (n > 0) acts as ``2n d/dp_n`` and ``h_{-n}`` as multiplication by
``p_n``. The Virasoro operators are the free-boson quadratic expressions in
these, written directly in power sums. All scalars stay rational.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import factorial, prod

from . import linalg
from .reports import CheckReport, outcome, timed
from .symfunc import (MultivariatePoly, Partition, SymFunc, alternant, kostka_number,
                      modified_inner, shifted_exponents, vandermonde)
from .tableaux import partitions, partitions_in_box


# --- primitive actions on power-sum monomials ---------------------------------

def _times_p(r: int, lam: Partition) -> Partition:
    return Partition(sorted(lam + (r,), reverse=True))


def _d_dp(r: int, lam: Partition):
    """``d/dp_r p_lam`` as ``(coefficient, partition)`` or None."""
    mult = lam.count(r)
    if not mult:
        return None
    parts = list(lam)
    parts.remove(r)
    return mult, Partition(parts)


def _p_terms(f: SymFunc) -> dict:
    return f.convert("p").terms


def _collect(acc: dict) -> SymFunc:
    return SymFunc("p", acc)


def heisenberg_apply(n: int, f: SymFunc) -> SymFunc:
    if n == 0:
        raise ValueError("h_0 is the zero operator on charge 0; use heisenberg_zero()")
    acc = defaultdict(Fraction)
    for lam, c in _p_terms(f).items():
        if n > 0:
            d = _d_dp(n, lam)
            if d:
                acc[d[1]] += 2 * n * d[0] * c
        else:
            acc[_times_p(-n, lam)] += c
    return _collect(acc)


def heisenberg_zero(f: SymFunc) -> SymFunc:
    return SymFunc.zero("p")


def _virasoro_terms(n: int, lam: Partition, c: Fraction, acc) -> None:
    if n == 0:
        for r, mult in lam.multiplicities().items():
            acc[lam] += r * mult * c
        return
    if n > 0:
        # sum_{r > n} p_{r-n} r d/dp_r
        for r in set(lam):
            if r > n:
                mult, rest = _d_dp(r, lam)
                acc[_times_p(r - n, rest)] += r * mult * c
        # sum_{r=1}^{n-1} r(n-r) d/dp_r d/dp_{n-r}
        for r in range(1, n):
            d1 = _d_dp(r, lam)
            if not d1:
                continue
            d2 = _d_dp(n - r, d1[1])
            if not d2:
                continue
            acc[d2[1]] += r * (n - r) * d1[0] * d2[0] * c
        return
    m = -n
    # sum_{r >= 1} p_{m+r} r d/dp_r
    for r in set(lam):
        mult, rest = _d_dp(r, lam)
        acc[_times_p(m + r, rest)] += r * mult * c
    # (1/4) sum_{r=1}^{m-1} p_r p_{m-r}
    for r in range(1, m):
        acc[_times_p(m - r, _times_p(r, lam))] += Fraction(1, 4) * c


def virasoro_apply(n: int, f: SymFunc) -> SymFunc:
    """Apply ``L_n``; ``L_0`` is the degree operator ``sum_r r p_r d/dp_r``."""
    acc = defaultdict(Fraction)
    for lam, c in _p_terms(f).items():
        _virasoro_terms(n, lam, c, acc)
    return _collect(acc)


def _p_basis_up_to(d: int):
    for n in range(d + 1):
        for lam in partitions(n):
            yield SymFunc.basis_element("p", lam)


def virasoro_commutator_check(m: int, n: int, degree: int) -> CheckReport:
    """``[L_m, L_n] = (m-n) L_{m+n} + delta_{m,-n} (m^3-m)/12`` on ``p_lam``, ``|lam| <= degree``."""
    central = Fraction(m ** 3 - m, 12) if m == -n else Fraction(0)
    params = {"m": m, "n": n, "degree": degree, "central_term": str(central)}
    report = CheckReport("virasoro-commutator", params)
    with timed(report):
        for f in _p_basis_up_to(degree):
            lhs = virasoro_apply(m, virasoro_apply(n, f)) - virasoro_apply(n, virasoro_apply(m, f))
            rhs = virasoro_apply(m + n, f) * (m - n) + f * central
            if lhs != rhs:
                report.status = "fail"
                report.witness = {"p": list(next(iter(f.terms))), "lhs": lhs.to_json(), "rhs": rhs.to_json()}
                break
    return report


def heisenberg_ccr_check(n: int, m: int, degree: int) -> CheckReport:
    """``[h_n, h_{-m}] = 2n delta_{nm}`` and ``[h_n, h_m] = [h_{-n}, h_{-m}] = 0`` for n, m > 0."""
    report = CheckReport("heisenberg-ccr", {"n": n, "m": m, "degree": degree})
    with timed(report):
        for f in _p_basis_up_to(degree):
            pairs = [
                (n, -m, f * (2 * n if n == m else 0)),
                (n, m, SymFunc.zero()),
                (-n, -m, SymFunc.zero()),
            ]
            for a, b, expected in pairs:
                comm = heisenberg_apply(a, heisenberg_apply(b, f)) - heisenberg_apply(b, heisenberg_apply(a, f))
                if comm != expected:
                    report.status = "fail"
                    report.witness = {"p": list(next(iter(f.terms))), "ops": [a, b], "commutator": comm.to_json()}
                    return report
    return report


def adjointness_check(n: int, degree: int) -> CheckReport:
    """``h_n`` and ``h_{-n}`` are adjoint under the modified inner product."""
    report = CheckReport("heisenberg-adjoint", {"n": n, "degree": degree})
    with timed(report):
        for d in range(n, degree + 1):
            for lam in partitions(d):
                f = SymFunc.basis_element("p", lam)
                hf = heisenberg_apply(n, f)
                for mu in partitions(d - n):
                    g = SymFunc.basis_element("p", mu)
                    left = modified_inner(hf, g)
                    right = modified_inner(f, heisenberg_apply(-n, g))
                    if left != right:
                        report.status = "fail"
                        report.witness = {"f": list(lam), "g": list(mu), "left": str(left), "right": str(right)}
                        return report
    return report


def square(k: int) -> Partition:
    return Partition((k,) * k)


def singular_vector_check(k: int, maxn: int = 2) -> CheckReport:
    """``s_(k^k)`` is killed by ``L_1..L_maxn`` and has ``L_0`` eigenvalue ``k^2``."""
    report = CheckReport("singular-vector", {"k": k, "maxn": maxn})
    with timed(report):
        xi = SymFunc.basis_element("s", square(k)).convert("p")
        for n in range(1, maxn + 1):
            out = virasoro_apply(n, xi)
            if not out.is_zero():
                report.status = "fail"
                report.witness = {"n": n, "L_n xi": out.to_json()}
                return report
        if virasoro_apply(0, xi) != xi * (k * k):
            report.status = "fail"
            report.witness = {"n": 0, "expected_eigenvalue": k * k}
    return report


# --- e-words and the vertex operator evaluator ----------------------------------

@dataclass(frozen=True)
class EWord:
    """The product ``e_{-i_1} ... e_{-i_k}`` acting on ``Omega_{-2k}``."""

    k: int
    indices: tuple

    def __post_init__(self):
        idx = tuple(sorted(int(i) for i in self.indices))
        object.__setattr__(self, "indices", idx)
        if self.k < 1:
            raise ValueError("k must be positive")
        if len(idx) != self.k:
            raise ValueError(f"an e-word on Omega_-{2 * self.k} needs exactly {self.k} factors")
        if any(not 0 <= i <= self.k for i in idx):
            raise ValueError(f"indices must lie in 0..{self.k}: {idx}")

    @property
    def degree(self) -> int:
        return sum(self.k - i for i in self.indices)

    def profile(self) -> tuple:
        """Exponents ``(r_0, ..., r_k)``: how often each ``e_{-j}`` occurs."""
        return tuple(self.indices.count(j) for j in range(self.k + 1))

    def __str__(self):
        return " ".join(f"e_{-i}" for i in self.indices) + f" Omega_{-2 * self.k}"


def rectangular_sign(k: int) -> int:
    return -1 if (k * (k - 1) // 2) % 2 else 1


def evaluate_word(k: int, indices) -> SymFunc:
    """Vertex-operator evaluation for the factors in the given order (no sorting).

    The coefficient of ``s_lam`` is the constant term of
    ``prod z_j^(k - i_j) * a_delta(z) * a_{lam+delta}(1/z)``, times the sign
    ``(-1)^(k(k-1)/2)``. The constant term vanishes unless ``|lam|`` equals
    the word degree and ``lam`` fits in the ``k x k`` box, so the sum over
    ``lam`` is finite.
    """
    shift = MultivariatePoly.monomial(tuple(k - i for i in indices))
    left = shift * vandermonde(k)
    sign = rectangular_sign(k)
    terms = {}
    degree = sum(k - i for i in indices)
    for lam in partitions(degree, max_part=k, max_length=k):
        right = alternant(shifted_exponents(lam, k)).invert_variables()
        c = left.coefficient_of_product(right)
        if c:
            terms[lam] = sign * c
    return SymFunc("s", terms)


def e_word_apply(w: EWord) -> SymFunc:
    """``e_{-i_1} ... e_{-i_k} Omega_{-2k}`` as a symmetric function in the Schur basis."""
    return evaluate_word(w.k, w.indices)


def verify_rectangular(k: int, m: int) -> CheckReport:
    """``e_{-m}^k Omega_{-2k} = (-1)^(k(k-1)/2) k! s_((k-m)^k)``."""
    report = CheckReport("rectangular", {"k": k, "m": m})
    with timed(report):
        got = e_word_apply(EWord(k, (m,) * k))
        expected = SymFunc("s", {Partition((k - m,) * k): rectangular_sign(k) * factorial(k)})
        if got != expected:
            report.status = "fail"
            report.witness = {"got": got.to_json(), "expected": expected.to_json()}
    return report


def gensegal_terms(nu, k: int) -> list:
    """``(mu, weight, word)`` triples of the Schur function expansion in e-words."""
    nu = Partition(nu)
    if not nu.contained_in((k,) * k):
        raise ValueError(f"{tuple(nu)} does not fit in the {k}x{k} box")
    out = []
    for mu in partitions(nu.size, max_part=k, max_length=k):
        K = kostka_number(nu, mu)
        if not K:
            continue
        padded = mu.padded(k)
        r = [padded.count(j) for j in range(k + 1)]
        word = EWord(k, tuple(k - x for x in padded))
        out.append((mu, Fraction(K, prod(factorial(x) for x in r)), word))
    return out


def schur_via_gensegal(nu, k: int) -> SymFunc:
    """Rebuild ``s_nu`` from e-word images.

    Carries the global sign ``(-1)^(k(k-1)/2)`` so that the expansion agrees
    with the rectangular normalisation of ``e_word_apply``.
    """
    total = SymFunc.zero("s")
    for _, weight, word in gensegal_terms(nu, k):
        total = total + e_word_apply(word) * weight
    return total * rectangular_sign(k)


def gensegal_check(nu, k: int) -> CheckReport:
    report = CheckReport("gensegal", {"nu": list(Partition(nu)), "k": k})
    with timed(report):
        got = schur_via_gensegal(nu, k)
        if got != SymFunc.basis_element("s", nu):
            report.status = "fail"
            report.witness = {"got": got.to_json()}
    return report


def f2n_zero_basis(n: int) -> list[EWord]:
    """Words ``e_0^{i_0} e_{-1}^{i_1} ... e_{-n}^{i_n}`` with ``sum i_j = n``."""
    if n < 1:
        raise ValueError("n must be positive")
    return [EWord(n, idx) for idx in combinations_with_replacement(range(n + 1), n)]


def span_check(n: int) -> CheckReport:
    """The images of the degree-zero e-word basis span the ``n x n`` box subspace."""
    report = CheckReport("ebasis-span", {"n": n})
    with timed(report):
        box = partitions_in_box(n, n)
        index = {lam: i for i, lam in enumerate(box)}
        rows = []
        for w in f2n_zero_basis(n):
            f = e_word_apply(w)
            stray = [list(lam) for lam in f.terms if lam not in index]
            if stray:
                report.status = "fail"
                report.witness = {"word": list(w.indices), "outside_box": stray}
                return report
            row = [0] * len(box)
            for lam, c in f.terms.items():
                row[index[lam]] = c
            rows.append(row)
        r = linalg.rank(rows, len(box))
        report.params["rank"] = r
        report.params["dimension"] = len(box)
        if r != len(box) or len(rows) != len(box):
            report.status = "fail"
            report.witness = {"rank": r, "words": len(rows), "dimension": len(box)}
    return report


def l0_spectrum(K: int) -> dict:
    """Eigenvalue multiplicities of ``L_0`` on the span of the e-word images.

    Each image is checked to be an ``L_0`` eigenvector with eigenvalue equal
    to its word degree; multiplicities are ranks of the images per eigenvalue.
    """
    by_value = defaultdict(list)
    for w in f2n_zero_basis(K):
        f = e_word_apply(w)
        fp = f.convert("p")
        value = w.degree
        if virasoro_apply(0, fp) != fp * value:
            raise ArithmeticError(f"{w} is not an L_0 eigenvector with eigenvalue {value}")
        by_value[value].append(f)
    spectrum = {}
    for value, funcs in sorted(by_value.items()):
        support = sorted({lam for f in funcs for lam in f.terms}, key=lambda x: (tuple(x)))
        rows = [[f.coefficient(lam) for lam in support] for f in funcs]
        spectrum[value] = linalg.rank(rows, len(support)) if support else 0
    return spectrum
